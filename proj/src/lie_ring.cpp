#include "rbg/lie_ring.hpp"

#include <tuple>

namespace rbg {

namespace {

// a + b where either side may be the zero beyond the top.
std::optional<elem_t> add_opt(const GradedLieRing& l, std::optional<std::size_t> layer, std::optional<elem_t> a,
                              std::optional<elem_t> b) {
  if (!layer) return std::nullopt;
  const auto& L = l.layers[*layer];
  return L.add(a.value_or(L.zero()), b.value_or(L.zero()));
}

bool is_zero(const GradedLieRing& l, std::optional<std::size_t> layer, std::optional<elem_t> a) {
  return !layer || !a || *a == l.layers[*layer].zero();
}

}  // namespace

std::size_t GradedLieRing::bracket_nonzeros() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = 0; j < layers.size(); ++j) {
      auto t = target(i, j);
      if (!t) continue;
      for (elem_t v : bracket_tables[i][j]) n += v != layers[*t].zero();
    }
  return n;
}

GradedLieRing associated_lie_ring(const GroupPtr& g) {
  GradedLieRing l;
  l.group = g;
  l.series = lower_central_series(g);
  for (std::size_t k = 0; k + 1 < l.series.size(); ++k) {
    if (l.series[k] == l.series[k + 1]) break;
    l.layers.push_back(LieLayer{k + 1, l.series[k], l.series[k + 1], quotient(l.series[k], l.series[k + 1])});
  }
  const std::size_t c = l.layers.size();
  l.bracket_tables.assign(c, std::vector<std::vector<elem_t>>(c));

  for (std::size_t i = 0; i < c; ++i) {
    const auto& Li = l.layers[i];
    if (!Li.quotient.group->is_abelian())
      throw Error(ErrorCode::structure_violation, "layer " + std::to_string(i + 1) + " is not abelian");
    for (std::size_t j = 0; j < c; ++j) {
      const auto& Lj = l.layers[j];
      auto t = l.target(i, j);
      if (!t) {
        // Beyond the top the commutators must lie in the last term.
        const auto& last = i + j + 1 < l.series.size() ? l.series[i + j + 1] : l.series.back();
        for (elem_t x : Li.term.elements())
          for (elem_t y : Lj.term.elements())
            if (!last.contains(g->commutator(x, y)))
              throw Error(ErrorCode::structure_violation, "commutator leaves the series");
        continue;
      }
      const auto& Lt = l.layers[*t];
      auto& table = l.bracket_tables[i][j];
      const elem_t unset = static_cast<elem_t>(-1);
      table.assign(Li.size() * Lj.size(), unset);
      // Every representative pair, so independence of the choice is checked.
      for (elem_t x : Li.term.elements())
        for (elem_t y : Lj.term.elements()) {
          const elem_t cm = g->commutator(x, y);
          if (!Lt.term.contains(cm))
            throw Error(ErrorCode::structure_violation, "[G_" + std::to_string(i + 1) + ", G_" +
                                                            std::to_string(j + 1) + "] not in G_" +
                                                            std::to_string(i + j + 2));
          auto& cell = table[std::size_t(Li.coset(x)) * Lj.size() + Lj.coset(y)];
          const elem_t v = Lt.coset(cm);
          if (cell != unset && cell != v)
            throw Error(ErrorCode::structure_violation, "bracket depends on coset representatives");
          cell = v;
        }
    }
  }

  // Biadditive and alternating.
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      auto t = l.target(i, j);
      if (!t) continue;
      const auto &Li = l.layers[i], &Lj = l.layers[j], &Lt = l.layers[*t];
      for (elem_t a = 0; a < Li.size(); ++a)
        for (elem_t b = 0; b < Lj.size(); ++b) {
          if (Lt.add(*l.bracket(i, a, j, b), *l.bracket(j, b, i, a)) != Lt.zero())
            throw Error(ErrorCode::structure_violation, "bracket is not antisymmetric");
          for (elem_t a2 = 0; a2 < Li.size(); ++a2)
            if (*l.bracket(i, Li.add(a, a2), j, b) != Lt.add(*l.bracket(i, a, j, b), *l.bracket(i, a2, j, b)))
              throw Error(ErrorCode::structure_violation, "bracket is not additive");
        }
      if (i == j)
        for (elem_t a = 0; a < Li.size(); ++a)
          if (*l.bracket(i, a, i, a) != Lt.zero()) throw Error(ErrorCode::structure_violation, "[x,x] != 0");
    }

  // Jacobi on homogeneous triples.
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < c; ++k) {
        auto top = i + j + k + 2 < c ? std::optional<std::size_t>(i + j + k + 2) : std::nullopt;
        if (!top) continue;
        const auto &Li = l.layers[i], &Lj = l.layers[j], &Lk = l.layers[k];
        for (elem_t a = 0; a < Li.size(); ++a)
          for (elem_t b = 0; b < Lj.size(); ++b)
            for (elem_t cc = 0; cc < Lk.size(); ++cc) {
              auto t1 = l.bracket(*l.target(i, j), *l.bracket(i, a, j, b), k, cc);
              auto t2 = l.bracket(*l.target(j, k), *l.bracket(j, b, k, cc), i, a);
              auto t3 = l.bracket(*l.target(k, i), *l.bracket(k, cc, i, a), j, b);
              const auto& Lt = l.layers[*top];
              if (Lt.add(Lt.add(*t1, *t2), *t3) != Lt.zero())
                throw Error(ErrorCode::structure_violation, "Jacobi identity fails");
            }
      }
  return l;
}

LieRBOperator LieRBOperator::zero(const GradedLieRing& l) {
  LieRBOperator r;
  for (const auto& L : l.layers) r.maps.emplace_back(L.size(), L.zero());
  return r;
}

LieRBOperator LieRBOperator::minus_identity(const GradedLieRing& l) {
  LieRBOperator r;
  for (const auto& L : l.layers) {
    std::vector<elem_t> m(L.size());
    for (elem_t a = 0; a < L.size(); ++a) m[a] = L.neg(a);
    r.maps.push_back(std::move(m));
  }
  return r;
}

InducedRB induced_rb(const GradedLieRing& l, const RBOperator& b) {
  require_valid(b, 1, "induced_rb");
  if (b.group() != l.group && b.group()->flat_table() != l.group->flat_table())
    throw Error(ErrorCode::invalid_input, "induced_rb: operator and ring live on different groups");
  const auto& g = *l.group;
  for (std::size_t n = 0; n < l.series.size(); ++n)
    for (elem_t x : l.series[n].elements())
      if (!l.series[n].contains(b(x))) return {std::nullopt, std::make_pair(n + 1, x)};

  LieRBOperator r;
  for (const auto& L : l.layers) {
    for (elem_t h : L.term.elements())
      for (elem_t x : L.next.elements())
        if (!L.next.contains(g.mul(g.inv(b(h)), b(g.mul(h, x)))))
          throw Error(ErrorCode::structure_violation, "induced map is not well defined on layer " +
                                                          std::to_string(L.degree));
    std::vector<elem_t> m(L.size());
    for (elem_t a = 0; a < L.size(); ++a) m[a] = L.coset(b(L.quotient.representatives[a]));
    r.maps.push_back(std::move(m));
  }
  return {std::move(r), std::nullopt};
}

LieVerdict verify_lie_rb(const GradedLieRing& l, const LieRBOperator& r) {
  LieVerdict v;
  if (r.maps.size() != l.layers.size()) {
    v.message = "one map per layer expected";
    return v;
  }
  for (std::size_t i = 0; i < l.layers.size(); ++i) {
    const auto& L = l.layers[i];
    if (r.maps[i].size() != L.size()) {
      v.message = "map size mismatch on layer " + std::to_string(i + 1);
      return v;
    }
    for (elem_t a = 0; a < L.size(); ++a)
      for (elem_t b = 0; b < L.size(); ++b)
        if (r.maps[i][L.add(a, b)] != L.add(r.maps[i][a], r.maps[i][b])) {
          v.message = "map is not additive on layer " + std::to_string(i + 1);
          return v;
        }
  }
  v.additive = true;
  auto R = [&](std::optional<std::size_t> layer, std::optional<elem_t> a) -> std::optional<elem_t> {
    if (!layer || !a) return std::nullopt;
    return r.maps[*layer][*a];
  };
  for (std::size_t i = 0; i < l.layers.size(); ++i)
    for (std::size_t j = 0; j < l.layers.size(); ++j) {
      auto t = l.target(i, j);
      for (elem_t a = 0; a < l.layers[i].size(); ++a)
        for (elem_t b = 0; b < l.layers[j].size(); ++b) {
          const elem_t ra = r.maps[i][a], rb = r.maps[j][b];
          auto lhs = l.bracket(i, ra, j, rb);
          auto inner = add_opt(l, t, add_opt(l, t, l.bracket(i, ra, j, b), l.bracket(i, a, j, rb)), l.bracket(i, a, j, b));
          auto rhs = R(t, inner);
          const bool equal = (is_zero(l, t, lhs) && is_zero(l, t, rhs)) || (lhs && rhs && *lhs == *rhs);
          if (!equal) {
            v.witness = std::make_tuple(i + 1, a, j + 1, b);
            v.message = "identity fails";
            return v;
          }
        }
    }
  v.valid = true;
  return v;
}

}  // namespace rbg
