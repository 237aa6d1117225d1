#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbg/operator.hpp"

namespace rbg {

/// One homogeneous component G_n / G_{n+1}, written additively.
struct LieLayer {
  std::size_t degree = 0;  // n, 1-based
  Subgroup term;           // G_n
  Subgroup next;           // G_{n+1}
  Quotient quotient;

  std::size_t size() const { return quotient.group->order(); }
  elem_t zero() const { return quotient.group->identity(); }
  elem_t add(elem_t a, elem_t b) const { return quotient.group->mul(a, b); }
  elem_t neg(elem_t a) const { return quotient.group->inv(a); }
  /// Coset of an element of G_n.
  elem_t coset(elem_t g) const { return quotient.coset_of[g]; }
};

/// L(G) = ⊕ G_n/G_{n+1} with [xG_{i+1}, yG_{j+1}] = [x,y]G_{i+j+1}. Only
/// nontrivial layers are kept; they are consecutive from degree 1.
struct GradedLieRing {
  GroupPtr group;
  std::vector<Subgroup> series;
  std::vector<LieLayer> layers;
  /// bracket[i][j][a * |L_j| + b], an element of layer i + j + 1 (0-based),
  /// present only when that layer exists.
  std::vector<std::vector<std::vector<elem_t>>> bracket_tables;

  /// Layer index of [L_i, L_j], if that layer exists.
  std::optional<std::size_t> target(std::size_t i, std::size_t j) const {
    return i + j + 1 < layers.size() ? std::optional<std::size_t>(i + j + 1) : std::nullopt;
  }
  /// nullopt stands for zero in a layer beyond the top.
  std::optional<elem_t> bracket(std::size_t i, elem_t a, std::size_t j, elem_t b) const {
    if (!target(i, j)) return std::nullopt;
    return bracket_tables[i][j][std::size_t(a) * layers[j].size() + b];
  }
  /// Number of (i, a, j, b) with a nonzero bracket.
  std::size_t bracket_nonzeros() const;
};

/// Builds the layers and brackets and checks exhaustively: the bracket does
/// not depend on representatives, is biadditive, alternating, and satisfies
/// Jacobi on homogeneous triples. Throws structure_violation otherwise.
GradedLieRing associated_lie_ring(const GroupPtr& g);

/// Additive map on each layer.
struct LieRBOperator {
  std::vector<std::vector<elem_t>> maps;

  static LieRBOperator zero(const GradedLieRing& l);
  static LieRBOperator minus_identity(const GradedLieRing& l);
  friend bool operator==(const LieRBOperator&, const LieRBOperator&) = default;
};

struct InducedRB {
  std::optional<LieRBOperator> op;
  /// (n, g): g in G_n with B(g) outside G_n.
  std::optional<std::pair<std::size_t, elem_t>> witness;
};
/// R(xG_{i+1}) = B(x)G_{i+1} when B(G_n) ⊆ G_n for every term of the series.
/// Well-definedness, B(h)^-1 B(hg) in G_{i+1}, is checked exhaustively.
InducedRB induced_rb(const GradedLieRing& l, const RBOperator& b);

struct LieVerdict {
  bool additive = false;
  bool valid = false;
  /// (i, a, j, b) breaking the identity.
  std::optional<std::tuple<std::size_t, elem_t, std::size_t, elem_t>> witness;
  std::string message;
};
/// [R x, R y] = R([R x, y] + [x, R y] + [x, y]) on all homogeneous pairs.
LieVerdict verify_lie_rb(const GradedLieRing& l, const LieRBOperator& r);

}  // namespace rbg
