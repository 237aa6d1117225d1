#include "rbg/io.hpp"

#include <set>

#include "rbg/morphism.hpp"
#include "rbg/products.hpp"

namespace rbg {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::schema_violation, (path.empty() ? "/" : path) + ": " + what);
}

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

/// Object view that rejects unknown keys up front.
class Obj {
 public:
  Obj(const Json& j, std::string path, std::initializer_list<const char*> allowed) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) schema(path_, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!ok.count(it.key())) schema(at(it.key()), "unknown field");
  }

  std::string at(const std::string& key) const { return path_ + "/" + escape(key); }
  bool has(const std::string& key) const { return j_.contains(key); }

  const Json& get(const std::string& key) const {
    if (!j_.contains(key)) schema(at(key), "missing field");
    return j_.at(key);
  }
  std::string str(const std::string& key) const {
    const auto& v = get(key);
    if (!v.is_string()) schema(at(key), "expected a string");
    return v.get<std::string>();
  }
  std::string str_or(const std::string& key, std::string dflt) const { return has(key) ? str(key) : dflt; }
  long long integer(const std::string& key) const {
    const auto& v = get(key);
    if (!v.is_number_integer()) schema(at(key), "expected an integer");
    return v.get<long long>();
  }

 private:
  const Json& j_;
  std::string path_;
};

std::vector<elem_t> index_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<elem_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL)
      schema(path + "/" + std::to_string(i), "expected a non-negative integer");
    out.push_back(elem_t(v.get<long long>()));
  }
  return out;
}

std::vector<std::vector<elem_t>> index_table(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of arrays");
  std::vector<std::vector<elem_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(index_list(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

GroupPtr group_at(const Json& j, const std::string& path);

std::vector<GroupPtr> factors_at(const Obj& o, std::size_t expected) {
  const auto& f = o.get("factors");
  if (!f.is_array()) schema(o.at("factors"), "expected an array of groups");
  if (expected && f.size() != expected)
    schema(o.at("factors"), "expected " + std::to_string(expected) + " factors");
  std::vector<GroupPtr> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(group_at(f[i], o.at("factors") + "/" + std::to_string(i)));
  return out;
}

GroupPtr group_at(const Json& j, const std::string& path) {
  Obj o(j, path, {"name", "kind", "table", "perm_gens", "factors", "labels", "action"});
  const std::string kind = o.str("kind");
  const std::string name = o.str_or("name", "");
  std::vector<std::string> labels;
  if (o.has("labels")) labels = string_list(o.get("labels"), o.at("labels"));
  auto only = [&](std::initializer_list<const char*> keys) {
    std::set<std::string> ok(keys.begin(), keys.end());
    for (const char* k : {"table", "perm_gens", "factors", "labels", "action"})
      if (o.has(k) && !ok.count(k)) schema(o.at(k), "not allowed for kind " + kind);
  };
  try {
    if (kind == "table") {
      only({"table", "labels"});
      return FiniteGroup::from_cayley_table(index_table(o.get("table"), o.at("table")), name, labels);
    }
    if (kind == "perm") {
      only({"perm_gens", "labels"});
      return FiniteGroup::from_permutations(index_table(o.get("perm_gens"), o.at("perm_gens")), name, labels);
    }
    if (kind == "direct") {
      only({"factors"});
      auto fs = factors_at(o, 0);
      if (fs.empty()) schema(o.at("factors"), "expected at least one factor");
      return direct_product(fs, name).group;
    }
    if (kind == "semidirect") {
      only({"factors", "action"});
      auto fs = factors_at(o, 2);
      auto act = index_table(o.get("action"), o.at("action"));
      std::vector<GroupMap> maps;
      for (std::size_t l = 0; l < act.size(); ++l) {
        if (act[l].size() != fs[0]->order())
          schema(o.at("action") + "/" + std::to_string(l), "expected " + std::to_string(fs[0]->order()) + " images");
        for (elem_t x : act[l])
          if (x >= fs[0]->order()) schema(o.at("action") + "/" + std::to_string(l), "image out of range");
        maps.push_back(GroupMap{fs[0], fs[0], act[l]});
      }
      if (maps.size() != fs[1]->order())
        schema(o.at("action"), "expected one map per element of the second factor");
      return semidirect_product(fs[0], fs[1], maps, name).group;
    }
    if (kind == "wreath") {
      only({"factors"});
      auto fs = factors_at(o, 2);
      return wreath_product(fs[0], fs[1], name).group;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::schema_violation) throw;
    throw Error(e.code(), (path.empty() ? "/" : path) + ": " + e.what());
  }
  schema(o.at("kind"), "unknown kind '" + kind + "'");
}

Json subgroup_json(const Subgroup& s) { return s.elements(); }

}  // namespace

GroupPtr group_from_json(const Json& j) { return group_at(j, ""); }

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["kind"] = "table";
  j["name"] = g.name();
  j["table"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json operator_to_json(const RBOperator& b) {
  Json j;
  j["group"] = b.group()->name().empty() ? b.group()->content_hash() : b.group()->name();
  j["weight"] = b.weight();
  j["images"] = b.images();
  if (b.provenance()) {
    Json p;
    p["construction"] = b.provenance()->construction;
    p["params"] = Json::object();
    for (const auto& [k, v] : b.provenance()->params) p["params"][k] = v;
    j["provenance"] = p;
  }
  return j;
}

RBOperator operator_from_json(const Json& j, const GroupPtr& g) {
  Obj o(j, "", {"group", "weight", "images", "provenance"});
  const std::string gname = o.str("group");
  if (gname != g->name() && gname != g->content_hash())
    schema(o.at("group"), "operator is for '" + gname + "', not '" + g->name() + "'");
  const long long w = o.integer("weight");
  if (w != 1 && w != -1) schema(o.at("weight"), "weight must be 1 or -1");
  auto images = index_list(o.get("images"), o.at("images"));
  if (images.size() != g->order()) schema(o.at("images"), "expected " + std::to_string(g->order()) + " images");
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] >= g->order()) schema(o.at("images") + "/" + std::to_string(i), "image out of range");
  RBOperator b(g, std::move(images), int(w));
  if (o.has("provenance")) {
    Obj p(o.get("provenance"), o.at("provenance"), {"construction", "params"});
    Provenance prov{p.str("construction"), {}};
    if (p.has("params")) {
      const auto& params = p.get("params");
      if (!params.is_object()) schema(p.at("params"), "expected an object");
      for (auto it = params.begin(); it != params.end(); ++it) {
        if (!it.value().is_string()) schema(p.at("params") + "/" + escape(it.key()), "expected a string");
        prov.params[it.key()] = it.value().get<std::string>();
      }
    }
    b.with_provenance(std::move(prov));
  }
  return b;
}

Json census_to_json(const Census& c) {
  Json j;
  j["group"] = c.group->name();
  j["hash"] = c.group->content_hash();
  j["method"] = to_string(c.method);
  j["count"] = c.operators.size();
  j["operators"] = Json::array();
  for (const auto& op : c.operators) j["operators"].push_back(op.images());
  if (!c.classes.empty()) j["classes"] = c.classes;
  auto rep = splitting_report(c);
  j["splitting_map"] = Json::array();
  for (const auto& e : rep.entries)
    j["splitting_map"].push_back({{"op", e.op}, {"kernel", subgroup_json(e.kernel)}, {"image", subgroup_json(e.image)}});
  j["splitting_matches_factorizations"] = rep.matches_factorizations;
  auto v = is_rb_elementary(c);
  j["elementary_verdict"] = {{"elementary", v.elementary},
                             {"operator_count", v.operator_count},
                             {"non_elementary_count", v.non_elementary_count},
                             {"class_count", v.class_count}};
  return j;
}

Census census_from_json(const Json& j, const GroupPtr& g) {
  Obj o(j, "", {"group", "hash", "method", "count", "operators", "classes", "splitting_map",
                "splitting_matches_factorizations", "elementary_verdict"});
  const std::string gname = o.str("group");
  if (gname != g->name()) schema(o.at("group"), "census is for '" + gname + "'");
  if (o.has("hash") && o.str("hash") != g->content_hash()) schema(o.at("hash"), "content hash mismatch");
  Census c;
  c.group = g;
  const std::string m = o.str("method");
  if (m == "brute")
    c.method = Method::brute;
  else if (m == "graph")
    c.method = Method::graph;
  else
    schema(o.at("method"), "unknown method '" + m + "'");
  auto ops = index_table(o.get("operators"), o.at("operators"));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].size() != g->order()) schema(o.at("operators") + "/" + std::to_string(i), "wrong length");
    for (elem_t x : ops[i])
      if (x >= g->order()) schema(o.at("operators") + "/" + std::to_string(i), "image out of range");
    c.operators.emplace_back(g, ops[i]);
  }
  if (o.has("count") && std::size_t(o.integer("count")) != ops.size())
    schema(o.at("count"), "count does not match the operator list");
  if (o.has("classes")) {
    auto cls = index_table(o.get("classes"), o.at("classes"));
    for (auto& cl : cls) c.classes.emplace_back(cl.begin(), cl.end());
  }
  return c;
}

Json report_to_json(const StructureReport& r) {
  return {{"kernel", subgroup_json(r.kernel)},
          {"kernel_plus", subgroup_json(r.kernel_plus)},
          {"image", subgroup_json(r.image)},
          {"image_plus", subgroup_json(r.image_plus)},
          {"kernels_normal_in_derived", r.kernels_normal_in_derived},
          {"kernels_normal_in_images", r.kernels_normal_in_images},
          {"quotient_map", r.quotient_map},
          {"quotient_domain_reps", r.quotient_domain_reps},
          {"quotient_codomain_reps", r.quotient_codomain_reps},
          {"quotient_map_well_defined", r.quotient_map_well_defined},
          {"quotient_map_isomorphism", r.quotient_map_isomorphism},
          {"images_factorize", r.images_factorize},
          {"all_hold", r.all_hold()}};
}

Json derived_to_json(const DerivedGroup& d, const StructureReport& r) {
  return {{"group", d.base->name()},
          {"identity", d.circle->identity()},
          {"circle_table", d.circle->table()},
          {"structure", report_to_json(r)}};
}

Json word_to_json(const BarWord& w) {
  Json letters = Json::array();
  for (const auto& [i, k] : w.letters) letters.push_back({i, k});
  return {{"letters", letters}, {"text", w.to_string()}};
}

Json extension_to_json(const ExtensionResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["basis"] = to_string(r.basis);
  j["cond"] = r.cond.holds;
  if (r.cond.witness) j["witness"] = {word_to_json(r.cond.witness->first), word_to_json(r.cond.witness->second)};
  if (r.gbar) {
    Json g = group_to_json(*r.gbar->group);
    j["gbar"] = {{"group", g},
                 {"pi_bar", r.gbar->pi_bar},
                 {"beta_bar", r.gbar->beta_bar},
                 {"pi_bar_bijective", r.gbar->pi_bar_bijective}};
  }
  if (r.op) j["extension"] = operator_to_json(*r.op);
  if (r.basis == ExtensionBasis::census) j["census_matches"] = r.census_matches;
  return j;
}

Json lie_ring_to_json(const GradedLieRing& l) {
  Json layers = Json::array();
  for (const auto& L : l.layers)
    layers.push_back({{"degree", L.degree},
                      {"order", L.size()},
                      {"term", subgroup_json(L.term)},
                      {"representatives", L.quotient.representatives}});
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.layers.size(); ++i)
    for (std::size_t j = i; j < l.layers.size(); ++j) {
      if (!l.target(i, j)) continue;
      const auto& t = l.bracket_tables[i][j];
      const elem_t zero = l.layers[*l.target(i, j)].zero();
      if (std::all_of(t.begin(), t.end(), [&](elem_t v) { return v == zero; })) continue;
      brackets.push_back({{"left", i + 1}, {"right", j + 1}, {"table", t}});
    }
  return {{"group", l.group->name()},
          {"layers", layers},
          {"brackets", brackets},
          {"bracket_nonzeros", l.bracket_nonzeros()}};
}

Json lie_operator_to_json(const LieRBOperator& r, const LieVerdict& v) {
  Json j{{"layer_maps", r.maps}, {"valid", v.valid}, {"additive", v.additive}};
  if (v.witness) {
    auto [i, a, k, b] = *v.witness;
    j["witness"] = {i, a, k, b};
  }
  if (!v.message.empty()) j["message"] = v.message;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::schema_violation, std::string("/: ") + e.what());
  }
}

}  // namespace rbg
