#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rbg/cli.hpp"
#include "rbg/corpus.hpp"
#include "rbg/io.hpp"
#include "rbg/morphism.hpp"
#include "rbg/products.hpp"

using namespace rbg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const char* name) { return std::string(RBG_TEST_DATA) + "/golden/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run rbg_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string schema_message(const Json& j) {
  try {
    group_from_json(j);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schema_violation);
    return e.what();
  }
  FAIL("no schema violation");
  return {};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("rbg_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("S3 table round trip is byte identical") {
  const std::string text = slurp(golden("s3.json"));
  auto g = group_from_json(parse_json(text));
  CHECK(g->order() == 6);
  CHECK(is_isomorphic(g, symmetric(3)));
  CHECK(dump(group_to_json(*g)) == text);
  CHECK(g->content_hash() == symmetric(3)->content_hash());
}

TEST_CASE("schema violations carry a JSON pointer") {
  Json j = group_to_json(*cyclic(3));
  j["extra"] = 1;
  CHECK(schema_message(j).find("/extra") != std::string::npos);

  Json d{{"kind", "direct"}, {"factors", {group_to_json(*cyclic(2)), group_to_json(*cyclic(3))}}};
  d["factors"][1]["colour"] = "red";
  CHECK(schema_message(d).find("/factors/1/colour") != std::string::npos);

  Json t = group_to_json(*cyclic(3));
  t["table"][2][1] = -4;
  CHECK(schema_message(t).find("/table/2/1") != std::string::npos);

  CHECK(schema_message(Json{{"name", "x"}}).find("/kind") != std::string::npos);
  CHECK(schema_message(Json{{"kind", "blob"}}).find("unknown kind") != std::string::npos);
  CHECK(schema_message(Json{{"kind", "perm"}, {"table", Json::array()}}).find("/table") != std::string::npos);
  CHECK_THROWS_AS(parse_json("{\"kind\": "), Error);

  // Structural problems keep their own code.
  Json bad{{"kind", "table"}, {"table", {{0, 1}, {0, 1}}}};
  try {
    group_from_json(bad);
    FAIL("accepted a non-group");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::schema_violation);
  }
}

TEST_CASE("group kinds") {
  Json perm{{"name", "S3p"}, {"kind", "perm"}, {"perm_gens", {{1, 0, 2}, {0, 2, 1}}}};
  CHECK(is_isomorphic(group_from_json(perm), symmetric(3)));

  Json direct{{"kind", "direct"}, {"factors", {group_to_json(*cyclic(2)), group_to_json(*cyclic(3))}}};
  CHECK(is_isomorphic(group_from_json(direct), cyclic(6)));

  // Z3 ⋊ Z2 with the nontrivial element acting by inversion.
  auto z3 = cyclic(3);
  std::vector<elem_t> inv(3);
  for (elem_t x = 0; x < 3; ++x) inv[x] = z3->inv(x);
  Json semi{{"kind", "semidirect"},
            {"factors", {group_to_json(*z3), group_to_json(*cyclic(2))}},
            {"action", {{0, 1, 2}, inv}}};
  CHECK(is_isomorphic(group_from_json(semi), symmetric(3)));
  semi["action"][1] = {0, 2, 2};
  CHECK_THROWS_AS(group_from_json(semi), Error);

  Json wr{{"kind", "wreath"}, {"factors", {group_to_json(*cyclic(2)), group_to_json(*cyclic(2))}}};
  CHECK(is_isomorphic(group_from_json(wr), dihedral(4)));
}

TEST_CASE("operator JSON") {
  auto s3 = symmetric(3);
  auto b = elementary(s3, Elementary::b_minus1);
  b.with_provenance({"elementary", {{"which", "b-1"}}});
  Json j = operator_to_json(b);
  auto back = operator_from_json(j, s3);
  CHECK(back == b);
  REQUIRE(back.provenance());
  CHECK(back.provenance()->params.at("which") == "b-1");
  CHECK(dump(operator_to_json(back)) == dump(j));

  Json by_hash = j;
  by_hash["group"] = s3->content_hash();
  CHECK(operator_from_json(by_hash, s3) == b);

  Json other = j;
  other["group"] = "D4";
  CHECK_THROWS_AS(operator_from_json(other, s3), Error);
  Json range = j;
  range["images"][2] = 6;
  try {
    operator_from_json(range, s3);
    FAIL("accepted an out-of-range image");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schema_violation);
    CHECK(std::string(e.what()).find("/images/2") != std::string::npos);
  }
  Json weight = j;
  weight["weight"] = 2;
  CHECK_THROWS_AS(operator_from_json(weight, s3), Error);
}

TEST_CASE("Z4 census golden") {
  const std::string text = slurp(golden("z4_census.json"));
  auto z4 = corpus_group("Z4");
  CHECK(dump(census_to_json(graph_enumerate(z4))) == text);
  Json brute = census_to_json(brute_force_enumerate(z4));
  CHECK(brute["method"] == "brute");
  brute["method"] = "graph";
  CHECK(dump(brute) == text);

  // The golden operators are exactly the endomorphisms of Z4.
  Json j = parse_json(text);
  std::vector<std::vector<elem_t>> ops;
  for (const auto& o : j["operators"]) ops.push_back(o.get<std::vector<elem_t>>());
  auto endo = oracle::all_endomorphisms(*z4);
  std::sort(endo.begin(), endo.end());
  CHECK(ops == endo);
  CHECK(j["count"] == 4);

  auto c = census_from_json(j, z4);
  CHECK(dump(census_to_json(c)) == text);
  j["operators"][1][1] = 9;
  CHECK_THROWS_AS(census_from_json(j, z4), Error);
}

TEST_CASE("cli exit codes") {
  auto v = rbg_cli({"verify", "-g", "corpus:S3", "-b", "b0"});
  CHECK(v.code == 0);
  CHECK(parse_json(v.out) == Json{{"valid", true}});

  auto bad_op = operator_to_json(RBOperator(symmetric(3), {0, 1, 1, 0, 0, 0}));
  auto path = temp_file("op.json", dump(bad_op));
  auto inv = rbg_cli({"verify", "-g", "corpus:S3", "-b", path.string()});
  CHECK(inv.code == 1);
  CHECK(parse_json(inv.out)["valid"] == false);
  CHECK(parse_json(inv.out).contains("witness"));

  auto ext = rbg_cli({"extend", "-g", "corpus:S3", "--gens", "1,2", "--images", "1,0"});
  CHECK(ext.code == 1);
  CHECK(parse_json(ext.out)["status"] == "no_extension");
  auto ok = rbg_cli({"extend", "-g", "corpus:S3", "--gens", "1,2", "--images", "1,2"});
  CHECK(ok.code == 0);
  CHECK(parse_json(ok.out)["extension"]["images"] == elementary(symmetric(3), Elementary::b_minus1).images());

  auto missing = rbg_cli({"verify", "-g", "nope.json", "-b", "b0"});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK_FALSE(missing.err.empty());

  Json g = group_to_json(*cyclic(3));
  g["bogus"] = true;
  auto schema = rbg_cli({"verify", "-g", temp_file("bad_group.json", dump(g)).string(), "-b", "b0"});
  CHECK(schema.code == 2);
  CHECK(schema.err.find("/bogus") != std::string::npos);

  CHECK(rbg_cli({"enumerate", "-g", "corpus:S3", "--method", "magic"}).code == 2);
  CHECK(rbg_cli({}).code == 2);
  CHECK(rbg_cli({"--help"}).code == 0);

  auto refused = rbg_cli({"construct", "power", "-g", "corpus:S3", "--n", "2"});
  CHECK(refused.code == 1);
  CHECK(parse_json(refused.out).contains("witness"));
  auto nonfact = rbg_cli({"construct", "splitting", "-g", "corpus:S3", "--hgen", "1", "--lgen", "2"});
  CHECK(nonfact.code == 1);
  CHECK(parse_json(nonfact.out)["error"] == "NotExactFactorization");
}

TEST_CASE("cli outputs") {
  auto graph = rbg_cli({"enumerate", "-g", "corpus:S3", "--method", "graph"});
  auto brute = rbg_cli({"enumerate", "-g", "corpus:S3", "--method", "brute"});
  REQUIRE(graph.code == 0);
  REQUIRE(brute.code == 0);
  Json a = parse_json(graph.out), b = parse_json(brute.out);
  a.erase("method");
  b.erase("method");
  CHECK(dump(a) == dump(b));

  auto t1 = rbg_cli({"--threads", "1", "enumerate", "-g", "corpus:D4", "--classify"});
  auto t4 = rbg_cli({"--threads", "4", "enumerate", "-g", "corpus:D4", "--classify"});
  CHECK(t1.code == 0);
  CHECK(t1.out == t4.out);

  auto cls = rbg_cli({"classify", "-g", "corpus:S3"});
  CHECK(cls.code == 0);
  Json c = parse_json(cls.out);
  CHECK(c["count"] == oracle::all_rb_operators(*symmetric(3)).size());
  std::size_t total = 0;
  for (const auto& k : c["classes"]) total += k["size"].get<std::size_t>();
  CHECK(total == c["count"]);

  auto der = rbg_cli({"derived", "-g", "corpus:S3", "-b", "b-1"});
  CHECK(der.code == 0);
  Json d = parse_json(der.out);
  CHECK(d["structure"]["all_hold"] == true);
  CHECK(d["circle_table"] == opposite(*symmetric(3))->table());

  auto lie = rbg_cli({"lie-ring", "-g", "corpus:D4", "-b", "b-1"});
  CHECK(lie.code == 0);
  Json l = parse_json(lie.out);
  CHECK(l["layers"].size() == 2);
  CHECK(l["induced"]["valid"] == true);

  auto op = rbg_cli({"construct", "cascade", "-g", "corpus:S3", "--n", "2"});
  REQUIRE(op.code == 0);
  auto s3sq = direct_power(symmetric(3), 2).group;
  auto cascade = operator_from_json(parse_json(op.out), s3sq);
  CHECK(cascade.valid());

  auto pp = rbg_cli({"construct", "power-product", "-g", "corpus:S3", "--matrix", "[[-1,-1],[0,-1]]"});
  CHECK(pp.code == 0);
  auto tw = rbg_cli({"construct", "power-product", "-g", "corpus:S3", "--matrix", "[[0,1],[0,0]]", "--psi", "0,2,1,4,3,5"});
  CHECK(tw.code == 0);
  CHECK(parse_json(tw.out)["provenance"]["construction"] == "twisted_power_product");
  auto badm = rbg_cli({"construct", "power-product", "-g", "corpus:S3", "--matrix", "[[1,0],[0,1]]"});
  CHECK(badm.code == 1);

  auto corpus = rbg_cli({"corpus"});
  CHECK(parse_json(corpus.out).size() == corpus_names().size());
  auto one = rbg_cli({"corpus", "--name", "S3"});
  CHECK(one.out == slurp(golden("s3.json")));
}
