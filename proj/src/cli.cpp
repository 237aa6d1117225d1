#include "rbg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "rbg/config.hpp"
#include "rbg/constructions.hpp"
#include "rbg/corpus.hpp"
#include "rbg/io.hpp"

namespace rbg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_input, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// "corpus:<name>" or a path to group JSON.
GroupPtr load_group(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) return corpus_group(spec.substr(7));
  if (!std::filesystem::exists(spec))
    throw Error(ErrorCode::invalid_input, "no such group file '" + spec + "' (use corpus:<name> for bundled groups)");
  return group_from_json(parse_json(read_file(spec)));
}

/// "b0", "b-1" or a path to operator JSON.
RBOperator load_operator(const std::string& spec, const GroupPtr& g) {
  if (spec == "b0") return elementary(g, Elementary::b0);
  if (spec == "b-1") return elementary(g, Elementary::b_minus1);
  return operator_from_json(parse_json(read_file(spec)), g);
}

Subgroup generated(const GroupPtr& g, const std::vector<elem_t>& gens) {
  for (elem_t x : gens)
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, "element " + std::to_string(x) + " out of range");
  return subgroup_generated(g, gens);
}

GroupMap map_from(const GroupPtr& g, const std::vector<elem_t>& images, const char* what) {
  if (images.size() != g->order())
    throw Error(ErrorCode::invalid_input, std::string(what) + ": expected " + std::to_string(g->order()) + " images");
  for (elem_t x : images)
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, std::string(what) + ": image out of range");
  return GroupMap{g, g, images};
}

/// Operator on the subgroup generated by `gens`, on its induced group.
RBOperator load_local(const std::string& spec, const Subgroup& s) {
  auto ind = induced(s);
  if (spec == "b0" || spec == "b-1") return load_operator(spec, ind.group);
  Json j = parse_json(read_file(spec));
  // Operators on a subgroup are matched by content hash.
  return operator_from_json(j, ind.group);
}

RBMatrix matrix_from(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::schema_violation, "/: expected a square array of arrays");
  RBMatrix m;
  m.n = j.size();
  for (std::size_t i = 0; i < m.n; ++i) {
    if (!j[i].is_array() || j[i].size() != m.n)
      throw Error(ErrorCode::schema_violation, "/" + std::to_string(i) + ": expected " + std::to_string(m.n) + " entries");
    for (std::size_t k = 0; k < m.n; ++k) {
      if (!j[i][k].is_number_integer())
        throw Error(ErrorCode::schema_violation, "/" + std::to_string(i) + "/" + std::to_string(k) + ": expected an integer");
      m.r.push_back(j[i][k].get<int>());
    }
  }
  return m;
}

bool is_refusal(ErrorCode c) {
  switch (c) {
    case ErrorCode::not_normal:
    case ErrorCode::not_exact_factorization:
    case ErrorCode::decomposition_not_unique:
    case ErrorCode::commutation_fails:
    case ErrorCode::image_not_abelian:
    case ErrorCode::not_homomorphism:
    case ErrorCode::invalid_matrix:
    case ErrorCode::trivial_h:
    case ErrorCode::precondition_failed:
    case ErrorCode::cond_fails:
      return true;
    default:
      return false;
  }
}

Json pair_json(const std::pair<elem_t, elem_t>& p) { return {p.first, p.second}; }

struct Options {
  std::string group, op, method = "graph", name, group_out;
  bool classify = false;
  std::vector<elem_t> gens, images, h, l, m, phi;
  std::string c = "b0", mode = "hom", variant, matrix, gh, gl, bh, bl, b_top, b_base;
  std::vector<std::vector<elem_t>> psis;
  long long n = 1;
  elem_t by = 0, a = 0, b = 0;
  std::vector<elem_t> target;
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rota-Baxter operators on finite groups.\n"
               "Groups: a JSON file or corpus:<name>. Operators: a JSON file, b0 or b-1.\n"
               "Exit codes: 0 success, 1 mathematical refusal (JSON on stdout), 2 input error.\n"
               "RBG_ORDER_CAP overrides the group order cap.",
               "rbg"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: RBG_THREADS or 1)");

  Options o;
  std::function<int()> run;
  auto emit = [&](const Json& j, int code = 0) {
    out << dump(j);
    return code;
  };
  auto group_opt = [&](CLI::App* s) { s->add_option("-g,--group", o.group, "Group JSON or corpus:<name>")->required(); };
  auto list_opt = [&](CLI::App* s, const char* flag, std::vector<elem_t>& v, const char* help) {
    return s->add_option(flag, v, help)->delimiter(',');
  };

  auto* verify = app.add_subcommand("verify", "Check the Rota-Baxter identity");
  group_opt(verify);
  verify->add_option("-b,--op", o.op, "Operator JSON, b0 or b-1")->required();
  verify->callback([&] {
    run = [&] {
      auto g = load_group(o.group);
      auto b = load_operator(o.op, g);
      const auto& r = b.verify();
      Json j{{"valid", r.valid()}};
      if (r.witness) j["witness"] = pair_json(*r.witness);
      if (!r.lemma_failures.empty()) j["lemma_failures"] = r.lemma_failures;
      return emit(j, r.valid() ? 0 : 1);
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "All operators of weight 1");
  group_opt(enumerate);
  enumerate->add_option("--method", o.method, "graph or brute")->check(CLI::IsMember({"graph", "brute"}));
  enumerate->add_flag("--classify", o.classify, "Group operators into Aut(G)/tilde orbits");
  auto census = [&] {
    auto g = load_group(o.group);
    Census c = o.method == "brute" ? brute_force_enumerate(g) : graph_enumerate(g, GraphStrategy::goursat, threads);
    if (o.classify) rbg::classify(c);
    return c;
  };
  enumerate->callback([&] { run = [&] { return emit(census_to_json(census())); }; });

  auto* classify = app.add_subcommand("classify", "Orbit classes of the census with representatives");
  group_opt(classify);
  classify->add_option("--method", o.method, "graph or brute")->check(CLI::IsMember({"graph", "brute"}));
  classify->callback([&] {
    run = [&] {
      o.classify = true;
      Census c = census();
      Json classes = Json::array();
      for (const auto& cl : c.classes) {
        const auto& rep = c.operators[cl.front()];
        auto sp = is_splitting(rep);
        classes.push_back({{"representative", rep.images()},
                           {"size", cl.size()},
                           {"kernel_order", kernel(rep).size()},
                           {"image_order", image(rep).size()},
                           {"splitting", sp.splitting}});
      }
      auto v = is_rb_elementary(c);
      return emit({{"group", c.group->name()},
                   {"count", c.operators.size()},
                   {"class_count", c.classes.size()},
                   {"classes", classes},
                   {"elementary", v.elementary}});
    };
  });

  auto* derived = app.add_subcommand("derived", "Derived group G_B and its structure report");
  group_opt(derived);
  derived->add_option("-b,--op", o.op, "Operator JSON, b0 or b-1")->required();
  derived->callback([&] {
    run = [&] {
      auto g = load_group(o.group);
      auto b = load_operator(o.op, g);
      require_valid(b, 1, "derived");
      auto d = derived_group(b);
      return emit(derived_to_json(d, structure_report(b)));
    };
  });

  auto* extend = app.add_subcommand("extend", "Extend a map on generators to an operator");
  group_opt(extend);
  list_opt(extend, "--gens", o.gens, "Generator indices, comma separated")->required();
  list_opt(extend, "--images", o.images, "Image indices, comma separated")->required();
  extend->callback([&] {
    run = [&] {
      auto g = load_group(o.group);
      auto r = extend_to_rb(ExtensionProblem::make(g, o.gens, o.images));
      return emit(extension_to_json(r), r.status == ExtensionStatus::extends ? 0 : 1);
    };
  });

  auto* lie = app.add_subcommand("lie-ring", "Associated graded Lie ring and induced operator");
  group_opt(lie);
  lie->add_option("-b,--op", o.op, "Operator JSON, b0 or b-1");
  lie->callback([&] {
    run = [&] {
      auto g = load_group(o.group);
      auto l = associated_lie_ring(g);
      Json j = lie_ring_to_json(l);
      if (o.op.empty()) return emit(j);
      auto b = load_operator(o.op, g);
      auto r = induced_rb(l, b);
      if (!r.op) {
        j["induced"] = {{"preserves_series", false}, {"witness", {r.witness->first, r.witness->second}}};
        return emit(j, 1);
      }
      auto v = verify_lie_rb(l, *r.op);
      j["induced"] = lie_operator_to_json(*r.op, v);
      return emit(j, v.valid ? 0 : 1);
    };
  });

  auto* corpus = app.add_subcommand("corpus", "List bundled groups or print one as JSON");
  corpus->add_option("--name", o.name, "Group name");
  corpus->callback([&] {
    run = [&] {
      if (!o.name.empty()) return emit(group_to_json(*corpus_group(o.name)));
      Json j = Json::array();
      for (const auto& n : corpus_names()) j.push_back({{"name", n}, {"order", corpus_group(n)->order()}});
      return emit(j);
    };
  });

  auto* construct = app.add_subcommand("construct", "Build an operator from a named construction");
  construct->require_subcommand(1);
  construct->add_option("--group-out", o.group_out, "Also write the carrier group as JSON to this file");
  // Refusal-style constructions report a failing pair instead of throwing.
  auto refusal = [&](const Refusal& r) {
    if (r.op) return 0;
    out << dump({{"error", "refused"}, {"message", "identity fails"}, {"witness", pair_json(*r.witness)}});
    return 1;
  };
  auto finish = [&](const RBOperator& b) {
    if (!o.group_out.empty()) {
      std::ofstream f(o.group_out, std::ios::binary);
      if (!f) throw Error(ErrorCode::invalid_input, "cannot write " + o.group_out);
      f << dump(group_to_json(*b.group()));
    }
    return emit(operator_to_json(b));
  };
  auto kind = [&](const char* name, const char* help, std::function<int()> body) {
    auto* s = construct->add_subcommand(name, help);
    s->callback([&, body] { run = body; });
    return s;
  };

  auto* k = kind("splitting", "B(hl) = l^-1 for an exact factorization G = HL", [&] {
    auto g = load_group(o.group);
    return finish(splitting_from_factorization(generated(g, o.h), generated(g, o.l)));
  });
  group_opt(k);
  list_opt(k, "--hgen", o.h, "Generators of H")->required();
  list_opt(k, "--lgen", o.l, "Generators of L")->required();

  k = kind("triangular", "B(hlm) = C(l) m^-1 for G = HLM", [&] {
    auto g = load_group(o.group);
    auto ls = generated(g, o.l);
    return finish(triangular_splitting(generated(g, o.h), ls, generated(g, o.m), load_local(o.c, ls)));
  });
  group_opt(k);
  list_opt(k, "--hgen", o.h, "Generators of H")->required();
  list_opt(k, "--lgen", o.l, "Generators of L")->required();
  list_opt(k, "--mgen", o.m, "Generators of M")->required();
  k->add_option("--c", o.c, "Operator on L (b0, b-1 or JSON on the induced group)");

  k = kind("semidirect", "B(hl) = C(l) for G = H ⋊ L", [&] {
    auto g = load_group(o.group);
    auto ls = generated(g, o.l);
    return finish(semidirect_rb(generated(g, o.h), ls, load_local(o.c, ls)));
  });
  group_opt(k);
  list_opt(k, "--hgen", o.h, "Generators of the normal factor H")->required();
  list_opt(k, "--lgen", o.l, "Generators of L")->required();
  k->add_option("--c", o.c, "Operator on L (b0, b-1 or JSON on the induced group)");

  k = kind("hom", "A homomorphism or antihomomorphism into an abelian subgroup", [&] {
    auto g = load_group(o.group);
    std::optional<Subgroup> t;
    if (!o.target.empty()) t = generated(g, o.target);
    return finish(hom_to_abelian(map_from(g, o.images, "hom"), o.mode == "hom" ? HomMode::hom : HomMode::antihom, t));
  });
  group_opt(k);
  list_opt(k, "--images", o.images, "Image of every element")->required();
  k->add_option("--mode", o.mode, "hom or antihom")->check(CLI::IsMember({"hom", "antihom"}));
  list_opt(k, "--target", o.target, "Generators of the abelian target subgroup");

  k = kind("power", "B(g) = g^n", [&] {
    auto r = power_map(load_group(o.group), o.n);
    return r.op ? finish(*r.op) : refusal(r);
  });
  group_opt(k);
  k->add_option("--n", o.n, "Exponent")->required();

  k = kind("central", "B(x) = g^-1 x^-1 g", [&] {
    auto r = central_conjugation(load_group(o.group), o.by);
    return r.op ? finish(*r.op) : refusal(r);
  });
  group_opt(k);
  k->add_option("--by", o.by, "Conjugating element g")->required();

  k = kind("affine", "B(x) = a x b", [&] {
    auto r = affine_map_check(load_group(o.group), o.a, o.b);
    return r.op ? finish(*r.op) : refusal(r);
  });
  group_opt(k);
  k->add_option("--a", o.a, "Left factor")->required();
  k->add_option("--b", o.b, "Right factor")->required();

  k = kind("direct", "B(h, l) = (B_H(h), B_L(l)) on H x L", [&] {
    auto gh = load_group(o.gh), gl = load_group(o.gl);
    return finish(direct_product_rb(load_operator(o.bh, gh), load_operator(o.bl, gl)));
  });
  k->add_option("--gh", o.gh, "Group H")->required();
  k->add_option("--gl", o.gl, "Group L")->required();
  k->add_option("--bh", o.bh, "Operator on H")->required();
  k->add_option("--bl", o.bl, "Operator on L")->required();

  k = kind("cascade", "Cascade operator on G^n", [&] {
    if (o.n < 1) throw Error(ErrorCode::invalid_input, "cascade: n must be >= 1");
    return finish(cascade_rb(load_group(o.group), std::size_t(o.n),
                             o.variant == "tilde" ? CascadeVariant::tilde : CascadeVariant::plain));
  });
  group_opt(k);
  k->add_option("--n", o.n, "Number of factors")->required();
  k->add_option("--variant", o.variant, "plain or tilde")->check(CLI::IsMember({"plain", "tilde"}));

  k = kind("power-product", "Power-product operator on G^n from a matrix", [&] {
    auto g = load_group(o.group);
    auto r = matrix_from(o.matrix);
    if (o.psis.empty()) return finish(power_product_rb(g, r));
    std::vector<GroupMap> ps;
    for (const auto& p : o.psis) ps.push_back(map_from(g, p, "psi"));
    return finish(twisted_power_product_rb(g, r, ps));
  });
  group_opt(k);
  k->add_option("--matrix", o.matrix, "Upper triangular matrix as JSON, e.g. [[-1,-1],[0,-1]]")->required();
  k->add_option("--psi", o.psis, "Automorphism of G as a comma separated image list; repeat n-1 times for the twisted form")
      ->delimiter(',');

  k = kind("nonsplitting", "B(h1, h2, l) = (e, h1, e) on H x H x L", [&] {
    return finish(nonsplitting_witness(load_group(o.gh), load_group(o.gl)));
  });
  k->add_option("--gh", o.gh, "Group H")->required();
  k->add_option("--gl", o.gl, "Group L")->required();

  k = kind("endo-nonsplitting", "B(h, l) = (e, psi(l)) on H x L, L abelian", [&] {
    return finish(endomorphism_nonsplitting(load_group(o.gh), load_group(o.gl)));
  });
  k->add_option("--gh", o.gh, "Group H")->required();
  k->add_option("--gl", o.gl, "Abelian group L, |L| > 2")->required();

  k = kind("wreath", "Operators on the wreath product H wr L", [&] {
    auto gh = load_group(o.gh), gl = load_group(o.gl);
    auto w = wreath_product(gh, gl);
    WreathArgs wa;
    if (o.variant.empty() || o.variant == "inverse-base") {
      wa.variant = WreathVariant::inverse_base;
    } else if (o.variant == "top-endo") {
      wa.variant = WreathVariant::top_endo;
      if (!o.phi.empty()) wa.phi = map_from(gl, o.phi, "phi");
    } else {
      wa.variant = WreathVariant::componentwise;
      wa.b_top = load_operator(o.b_top.empty() ? "b0" : o.b_top, gl);
      wa.b_base = load_operator(o.b_base.empty() ? "b0" : o.b_base, w.base.group);
    }
    return finish(wreath_rb(w, wa));
  });
  k->add_option("--gh", o.gh, "Group H")->required();
  k->add_option("--gl", o.gl, "Group L")->required();
  k->add_option("--variant", o.variant, "inverse-base, top-endo or componentwise")
      ->check(CLI::IsMember({"inverse-base", "top-endo", "componentwise"}));
  list_opt(k, "--phi", o.phi, "top-endo: endomorphism of L as image list");
  k->add_option("--b-top", o.b_top, "componentwise: operator on L");
  k->add_option("--b-base", o.b_base, "componentwise: operator on the base group");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (threads) config().threads = threads;
    if (!run) throw Error(ErrorCode::invalid_input, "no command given");
    return run();
  } catch (const Error& e) {
    if (is_refusal(e.code())) {
      out << dump({{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
      return 1;
    }
    err << "rbg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rbg: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rbg
