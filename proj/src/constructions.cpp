#include "rbg/constructions.hpp"

#include <sstream>

#include "rbg/derived.hpp"
#include "rbg/morphism.hpp"

namespace rbg {

namespace {

std::string pair_str(const FiniteGroup& g, elem_t a, elem_t b) {
  return "(" + g.label(a) + ", " + g.label(b) + ")";
}

RBOperator finish(RBOperator op, Provenance p) {
  const auto& r = op.verify();
  if (!r.valid()) {
    std::string w = r.witness ? pair_str(*op.group(), r.witness->first, r.witness->second) : "?";
    throw Error(ErrorCode::structure_violation, p.construction + " produced an invalid operator, witness " + w);
  }
  op.with_provenance(std::move(p));
  return op;
}

void same_parent(const Subgroup& a, const Subgroup& b, const char* what) {
  if (a.parent() != b.parent()) throw Error(ErrorCode::invalid_input, std::string(what) + ": subgroups of different groups");
}

/// c must live on induced(L).group: same order and the same table.
InducedGroup local_operator(const Subgroup& l, const RBOperator& c, const char* what) {
  auto ind = induced(l);
  if (c.group()->order() != l.size() || c.group()->flat_table() != ind.group->flat_table())
    throw Error(ErrorCode::invalid_input, std::string(what) + ": operator is not defined on the induced subgroup");
  require_valid(c, 1, what);
  return ind;
}

std::string elems_str(const Subgroup& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.parent()->label(s.elements()[i]);
  os << '}';
  return os.str();
}

}  // namespace

RBOperator splitting_from_factorization(const Subgroup& h, const Subgroup& l) {
  same_parent(h, l, "splitting_from_factorization");
  const auto& g = h.parent();
  if (h.size() * l.size() != g->order() || !intersection(h, l).is_trivial())
    throw Error(ErrorCode::not_exact_factorization, elems_str(h) + " * " + elems_str(l));
  std::vector<elem_t> img(g->order());
  for (elem_t x : h.elements())
    for (elem_t y : l.elements()) img[g->mul(x, y)] = g->inv(y);
  return finish(RBOperator(g, std::move(img)),
                {"splitting", {{"H", elems_str(h)}, {"L", elems_str(l)}}});
}

RBOperator triangular_splitting(const Subgroup& h, const Subgroup& l, const Subgroup& m, const RBOperator& c,
                                TriangularOptions opts) {
  same_parent(h, l, "triangular_splitting");
  same_parent(h, m, "triangular_splitting");
  const auto& g = h.parent();
  auto ind = local_operator(l, c, "triangular_splitting");
  auto cp = [&](elem_t x) { return ind.to_parent[c(ind.from_parent[x])]; };

  // Decomposition index: element -> (h, l, m).
  struct Parts {
    elem_t h, l, m;
  };
  std::vector<std::optional<Parts>> index(g->order());
  for (elem_t x : h.elements())
    for (elem_t y : l.elements())
      for (elem_t z : m.elements()) {
        elem_t p = g->mul({x, y, z});
        if (index[p])
          throw Error(ErrorCode::decomposition_not_unique,
                      g->label(p) + " = " + g->label(x) + "*" + g->label(y) + "*" + g->label(z) + " = " +
                          g->label(index[p]->h) + "*" + g->label(index[p]->l) + "*" + g->label(index[p]->m));
        index[p] = Parts{x, y, z};
      }
  for (elem_t p = 0; p < g->order(); ++p)
    if (!index[p]) throw Error(ErrorCode::decomposition_not_unique, g->label(p) + " is not a product hlm");

  for (elem_t x : h.elements())
    for (elem_t y : l.elements())
      if (g->mul(x, y) != g->mul(y, x))
        throw Error(ErrorCode::commutation_fails, "[H,L]: " + pair_str(*g, x, y));
  for (elem_t y : l.elements())
    for (elem_t z : m.elements())
      if (g->mul(cp(y), z) != g->mul(z, cp(y)))
        throw Error(ErrorCode::commutation_fails, "[C(L),M]: " + pair_str(*g, cp(y), z));

  std::vector<elem_t> img(g->order());
  for (elem_t p = 0; p < g->order(); ++p) img[p] = g->mul(cp(index[p]->l), g->inv(index[p]->m));
  auto op = finish(RBOperator(g, std::move(img)), {"triangular",
                                                   {{"H", elems_str(h)},
                                                    {"L", elems_str(l)},
                                                    {"M", elems_str(m)},
                                                    {"C", [&] {
                                                       std::string s;
                                                       for (elem_t y : l.elements())
                                                         s += (s.empty() ? "" : ",") + g->label(cp(y));
                                                       return "[" + s + "]";
                                                     }()}}});
  if (opts.check_structure) {
    auto gb = derived_group(op).circle;
    auto mi = induced(m);
    auto expected = direct_product({induced(h).group, derived_group(c).circle, opposite(*mi.group)}).group;
    if (!is_isomorphic(gb, expected))
      throw Error(ErrorCode::structure_violation, "derived group is not H x L_C x M^op");
  }
  return op;
}

RBOperator semidirect_rb(const Subgroup& h, const Subgroup& l, const RBOperator& c) {
  same_parent(h, l, "semidirect_rb");
  const auto& g = h.parent();
  if (!is_normal(h)) throw Error(ErrorCode::invalid_input, "semidirect_rb: H is not normal");
  auto ind = local_operator(l, c, "semidirect_rb");
  auto cp = [&](elem_t x) { return ind.to_parent[c(ind.from_parent[x])]; };

  std::vector<std::optional<elem_t>> lpart(g->order());
  for (elem_t x : h.elements())
    for (elem_t y : l.elements()) {
      elem_t p = g->mul(x, y);
      if (lpart[p]) throw Error(ErrorCode::decomposition_not_unique, g->label(p) + " has two decompositions hl");
      lpart[p] = y;
    }
  for (elem_t p = 0; p < g->order(); ++p)
    if (!lpart[p]) throw Error(ErrorCode::decomposition_not_unique, g->label(p) + " is not a product hl");

  std::vector<elem_t> img(g->order());
  for (elem_t p = 0; p < g->order(); ++p) img[p] = cp(*lpart[p]);
  auto op = finish(RBOperator(g, std::move(img)), {"semidirect", {{"H", elems_str(h)}, {"L", elems_str(l)}}});

  // Internal semidirect structure of G_B: H normal, L a complement with the
  // L_C product.
  auto d = derived_group(op);
  try {
    auto hb = Subgroup::from_elements(d.circle, h.elements());
    if (!is_normal(hb)) throw Error(ErrorCode::structure_violation, "H is not normal in G_B");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::structure_violation) throw;
    throw Error(ErrorCode::structure_violation, "H is not a subgroup of G_B");
  }
  auto lc = derived_group(c).circle;
  for (elem_t a : l.elements())
    for (elem_t b : l.elements())
      if (d.circ(a, b) != ind.to_parent[lc->mul(ind.from_parent[a], ind.from_parent[b])])
        throw Error(ErrorCode::structure_violation, "L does not carry the L_C product in G_B");
  return op;
}

RBOperator hom_to_abelian(const GroupMap& f, HomMode mode, std::optional<Subgroup> target) {
  const auto& g = f.domain;
  if (f.codomain->order() != g->order() || f.codomain->flat_table() != g->flat_table())
    throw Error(ErrorCode::invalid_input, "hom_to_abelian: map must be G -> G");
  std::pair<elem_t, elem_t> w;
  bool ok = mode == HomMode::hom ? is_homomorphism(f, &w) : is_antihomomorphism(f, &w);
  if (!ok)
    throw Error(ErrorCode::not_homomorphism,
                std::string(mode == HomMode::hom ? "homomorphism" : "antihomomorphism") + " fails at " +
                    pair_str(*g, w.first, w.second));
  Subgroup t = target ? *target : subgroup_generated(g, f.images);
  for (elem_t a : t.elements())
    for (elem_t b : t.elements())
      if (g->mul(a, b) != g->mul(b, a)) throw Error(ErrorCode::image_not_abelian, pair_str(*g, a, b));
  for (elem_t x = 0; x < g->order(); ++x)
    if (!t.contains(f(x))) throw Error(ErrorCode::invalid_input, "image of " + g->label(x) + " leaves the target");
  return finish(RBOperator(g, f.images),
                {"hom_to_abelian", {{"mode", mode == HomMode::hom ? "hom" : "antihom"}, {"H", elems_str(t)}}});
}

Refusal power_map(const GroupPtr& g, long long n) {
  if (n < 0) throw Error(ErrorCode::invalid_input, "power_map: n must be >= 0");
  std::vector<elem_t> img(g->order());
  for (elem_t x = 0; x < g->order(); ++x) img[x] = g->pow(x, n);
  RBOperator op(g, std::move(img));
  if (!op.valid()) return {std::nullopt, op.verify().witness};
  op.with_provenance({"power_map", {{"n", std::to_string(n)}}});
  return {std::move(op), std::nullopt};
}

Refusal central_conjugation(const GroupPtr& g, elem_t by) {
  if (by >= g->order()) throw Error(ErrorCode::invalid_input, "central_conjugation: element out of range");
  auto z = center(g);
  bool criterion = true;
  for (elem_t x = 0; x < g->order() && criterion; ++x) criterion = z.contains(g->commutator(by, x));

  std::vector<elem_t> img(g->order());
  for (elem_t x = 0; x < g->order(); ++x) img[x] = g->conj(g->inv(x), by);
  RBOperator op(g, std::move(img));
  if (op.valid() != criterion)
    throw Error(ErrorCode::structure_violation, "central_conjugation: verify disagrees with [g,G] <= Z(G)");
  if (!criterion) return {std::nullopt, op.verify().witness};
  // The derived product is the B-1 product g o h = h g.
  if (derived_group(op).circle->flat_table() != opposite(*g)->flat_table())
    throw Error(ErrorCode::structure_violation, "central_conjugation: derived product differs from B-1");
  op.with_provenance({"central_conjugation", {{"g", g->label(by)}}});
  return {std::move(op), std::nullopt};
}

Refusal affine_map_check(const GroupPtr& g, elem_t a, elem_t b) {
  if (a >= g->order() || b >= g->order()) throw Error(ErrorCode::invalid_input, "affine_map_check: out of range");
  std::vector<elem_t> img(g->order());
  for (elem_t x = 0; x < g->order(); ++x) img[x] = g->mul({a, x, b});
  RBOperator op(g, std::move(img));
  const bool expected = g->is_abelian() && b == g->inv(a);
  if (op.valid() != expected)
    throw Error(ErrorCode::structure_violation, "affine_map_check: verify disagrees with the abelian criterion");
  if (!expected) return {std::nullopt, op.verify().witness};
  op.with_provenance({"affine", {{"a", g->label(a)}, {"b", g->label(b)}}});
  return {std::move(op), std::nullopt};
}

RBOperator direct_product_rb(const RBOperator& bh, const RBOperator& bl) {
  require_valid(bh, 1, "direct_product_rb");
  require_valid(bl, 1, "direct_product_rb");
  auto pg = direct_product(bh.group(), bl.group());
  std::vector<elem_t> img(pg.group->order());
  for (elem_t x = 0; x < bh.group()->order(); ++x)
    for (elem_t y = 0; y < bl.group()->order(); ++y) img[pg.encode({x, y})] = pg.encode({bh(x), bl(y)});
  return finish(RBOperator(pg.group, std::move(img)),
                {"direct_product", {{"H", bh.group()->name()}, {"L", bl.group()->name()}}});
}

RBOperator endomorphism_nonsplitting(const GroupPtr& h, const GroupPtr& l) {
  if (!l->is_abelian() || l->order() <= 2)
    throw Error(ErrorCode::precondition_failed, "endomorphism_nonsplitting: L must be abelian of order > 2");
  auto pg = direct_product(h, l);
  for (const auto& psi : automorphisms(l)) {
    std::vector<elem_t> img(pg.group->order());
    for (elem_t x = 0; x < pg.group->order(); ++x)
      img[x] = pg.encode({h->identity(), psi(pg.component(x, 1))});
    RBOperator op(pg.group, std::move(img));
    if (!op.valid()) throw Error(ErrorCode::structure_violation, "endomorphism_nonsplitting: invalid operator");
    if (!is_splitting(op).splitting) {
      std::string ps;
      for (elem_t y = 0; y < l->order(); ++y) ps += (y ? "," : "") + l->label(psi(y));
      return finish(std::move(op), {"endomorphism_nonsplitting", {{"psi", "[" + ps + "]"}}});
    }
  }
  throw Error(ErrorCode::structure_violation, "endomorphism_nonsplitting: every automorphism gives a splitting operator");
}

RBOperator cascade_rb(const GroupPtr& g, std::size_t n, CascadeVariant variant) {
  if (n == 0) throw Error(ErrorCode::invalid_input, "cascade_rb: n must be >= 1");
  auto pg = direct_power(g, n);
  std::vector<elem_t> img(pg.group->order());
  for (elem_t x = 0; x < pg.group->order(); ++x) {
    auto c = pg.decode(x);
    std::vector<elem_t> t(n);
    elem_t acc = g->identity();  // g_{i-1} ... g_1
    for (std::size_t i = 0; i < n; ++i) {
      if (variant == CascadeVariant::plain) {
        t[i] = acc;
        acc = g->mul(c[i], acc);
      } else {
        acc = g->mul(g->inv(c[i]), acc);
        t[i] = acc;
      }
    }
    img[x] = pg.encode(t);
  }
  return finish(RBOperator(pg.group, std::move(img)),
                {"cascade", {{"n", std::to_string(n)}, {"variant", variant == CascadeVariant::plain ? "plain" : "tilde"}}});
}

RBMatrix cascade_matrix(std::size_t n, CascadeVariant variant) {
  auto m = RBMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      if (variant == CascadeVariant::plain)
        m.at(i, k) = k > i ? 1 : 0;
      else
        m.at(i, k) = -1;
    }
  return m;
}

namespace {

void check_matrix(const RBMatrix& r) {
  if (r.n == 0) throw Error(ErrorCode::invalid_matrix, "empty matrix");
  if (!r.upper_triangular()) throw Error(ErrorCode::invalid_matrix, r.to_string() + " is not upper-triangular");
  if (!rb_matrix_check(r)) throw Error(ErrorCode::invalid_matrix, r.to_string() + " violates the RB conditions");
}

std::string twist_labels(const std::vector<GroupMap>& psis) {
  std::string s;
  for (const auto& p : psis) {
    std::string one;
    for (elem_t x = 0; x < p.images.size(); ++x) one += (x ? "," : "") + std::to_string(p(x));
    s += (s.empty() ? "[" : ",[") + one + "]";
  }
  return "[" + s + "]";
}

}  // namespace

RBOperator power_product_rb(const GroupPtr& g, const RBMatrix& r) {
  check_matrix(r);
  const std::size_t n = r.n;
  auto pg = direct_power(g, n);
  std::vector<elem_t> img(pg.group->order());
  for (elem_t x = 0; x < pg.group->order(); ++x) {
    auto c = pg.decode(x);
    std::vector<elem_t> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      elem_t acc = g->identity();
      for (std::size_t k = i + 1; k-- > 0;) acc = g->mul(acc, g->pow(c[k], r(k, i)));
      t[i] = acc;
    }
    img[x] = pg.encode(t);
  }
  return finish(RBOperator(pg.group, std::move(img)), {"power_product", {{"r", r.to_string()}}});
}

GroupMap twist_automorphism(const ProductGroup& gn, const std::vector<GroupMap>& psis) {
  const std::size_t n = gn.factors.size();
  if (psis.size() + 1 != n) throw Error(ErrorCode::invalid_input, "twist: need n - 1 automorphisms");
  std::vector<GroupMap> inv;
  for (const auto& p : psis) inv.push_back(inverse(p));
  GroupMap phi{gn.group, gn.group, std::vector<elem_t>(gn.group->order())};
  for (elem_t x = 0; x < gn.group->order(); ++x) {
    auto c = gn.decode(x);
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t j = k + 1; j-- > 1;) c[k] = inv[j - 1](c[k]);  // psi_{k+1}^-1 first, psi_2^-1 last
    phi.images[x] = gn.encode(c);
  }
  return phi;
}

RBOperator twisted_power_product_rb(const GroupPtr& g, const RBMatrix& r, const std::vector<GroupMap>& psis) {
  check_matrix(r);
  const std::size_t n = r.n;
  if (psis.size() + 1 != n) throw Error(ErrorCode::invalid_input, "twisted_power_product_rb: need n - 1 automorphisms");
  for (const auto& p : psis)
    if (p.domain->flat_table() != g->flat_table() || !is_automorphism(p))
      throw Error(ErrorCode::invalid_input, "twisted_power_product_rb: psi is not an automorphism of G");
  auto pg = direct_power(g, n);
  std::vector<elem_t> img(pg.group->order());
  for (elem_t x = 0; x < pg.group->order(); ++x) {
    auto c = pg.decode(x);
    std::vector<elem_t> t(n);
    t[0] = g->pow(c[0], r(0, 0));
    for (std::size_t i = 1; i < n; ++i) {
      elem_t acc = g->pow(c[0], r(0, i));
      for (std::size_t k = 1; k < i; ++k) acc = g->mul(g->pow(c[k], r(k, i)), psis[k - 1](acc));
      t[i] = g->mul(g->pow(c[i], r(i, i)), psis[i - 1](acc));
    }
    img[x] = pg.encode(t);
  }
  auto op = finish(RBOperator(pg.group, std::move(img)),
                   {"twisted_power_product", {{"r", r.to_string()}, {"psi", twist_labels(psis)}}});
  if (conjugate(power_product_rb(g, r), twist_automorphism(pg, psis)) != op)
    throw Error(ErrorCode::structure_violation, "twisted operator differs from the conjugated power product");
  return op;
}

RBOperator nonsplitting_witness(const GroupPtr& h, const GroupPtr& l) {
  if (h->order() == 1) throw Error(ErrorCode::trivial_h, "H must be nontrivial");
  auto pg = direct_product({h, h, l});
  std::vector<elem_t> img(pg.group->order());
  for (elem_t x = 0; x < pg.group->order(); ++x)
    img[x] = pg.encode({h->identity(), pg.component(x, 0), l->identity()});
  auto op = finish(RBOperator(pg.group, std::move(img)), {"nonsplitting", {{"H", h->name()}, {"L", l->name()}}});
  if (is_splitting(op).splitting) throw Error(ErrorCode::structure_violation, "nonsplitting_witness is splitting");
  return op;
}

RBOperator wreath_rb(const WreathProduct& w, const WreathArgs& args) {
  const auto& g = w.group;
  const auto& top = w.top;
  const auto& base = w.base.group;
  std::vector<elem_t> img(g->order());
  Provenance prov;
  switch (args.variant) {
    case WreathVariant::inverse_base:
      for (elem_t x = 0; x < g->order(); ++x) img[x] = w.encode(top->identity(), base->inv(w.base_part(x)));
      prov = {"wreath", {{"variant", "inverse_base"}}};
      break;
    case WreathVariant::top_endo: {
      if (!top->is_abelian()) throw Error(ErrorCode::precondition_failed, "wreath top_endo: L is not abelian");
      GroupMap phi = args.phi ? *args.phi : identity_map(top);
      if (phi.domain->flat_table() != top->flat_table() || phi.codomain->flat_table() != top->flat_table() ||
          !is_homomorphism(phi))
        throw Error(ErrorCode::precondition_failed, "wreath top_endo: phi is not an endomorphism of L");
      for (elem_t x = 0; x < g->order(); ++x) img[x] = w.encode(phi(w.top_part(x)), base->identity());
      std::string ps;
      for (elem_t y = 0; y < top->order(); ++y) ps += (y ? "," : "") + std::to_string(phi(y));
      prov = {"wreath", {{"variant", "top_endo"}, {"phi", "[" + ps + "]"}}};
      break;
    }
    case WreathVariant::componentwise: {
      if (top->order() != 1 && w.base_factor->order() != 1)
        throw Error(ErrorCode::precondition_failed, "wreath componentwise: the action of L on the base is not trivial");
      if (!args.b_top || !args.b_base)
        throw Error(ErrorCode::precondition_failed, "wreath componentwise: needs operators on L and on the base");
      const auto& bt = *args.b_top;
      const auto& bb = *args.b_base;
      if (bt.group()->flat_table() != top->flat_table() || bb.group()->flat_table() != base->flat_table())
        throw Error(ErrorCode::precondition_failed, "wreath componentwise: operators live on the wrong groups");
      require_valid(bt, 1, "wreath componentwise");
      require_valid(bb, 1, "wreath componentwise");
      for (elem_t x = 0; x < g->order(); ++x) img[x] = w.encode(bt(w.top_part(x)), bb(w.base_part(x)));
      prov = {"wreath", {{"variant", "componentwise"}}};
      break;
    }
  }
  return finish(RBOperator(g, std::move(img)), std::move(prov));
}

}  // namespace rbg
