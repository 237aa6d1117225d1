#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbg/operator.hpp"

namespace rbg {

enum class Method { brute, graph };
std::string to_string(Method m);

/// All valid weight +1 operators on one group, sorted by image array.
struct Census {
  GroupPtr group;
  Method method = Method::brute;
  std::vector<RBOperator> operators;
  /// Orbits under Aut(G)-conjugation and tilde as sorted index lists; the
  /// first index of each class is its canonical (least) representative.
  /// Empty until classify() runs.
  std::vector<std::vector<std::size_t>> classes;

  std::optional<std::size_t> find(const std::vector<elem_t>& images) const;
};

/// Backtracking over B(g) in element order with B(e) = e fixed; every
/// partial assignment is checked on the pairs it fully determines. Refuses
/// groups above config().brute_force_cap.
Census brute_force_enumerate(const GroupPtr& g);

enum class GraphStrategy {
  /// Goursat data (P1, N1, P2, N2, theta) over subgroups of G.
  goursat,
  /// Literal scan of all_subgroups(G x G); only for small G.
  lattice,
};

/// Operators as subgroups H <= G x G with |H| = |G| and H meeting the
/// diagonal trivially, decoded by B(x y^-1) = y. `threads` = 0 uses
/// config().threads. The result does not depend on the thread count.
Census graph_enumerate(const GroupPtr& g, GraphStrategy strategy = GraphStrategy::goursat, unsigned threads = 0);

/// {(g B(g), B(g))} as a sorted list of pair indices a * |G| + b.
std::vector<std::uint64_t> graph_of(const RBOperator& b);

/// Least image array over {conjugate(B, phi), conjugate(tilde(B), phi)}.
std::vector<elem_t> canonical_form(const RBOperator& b, const std::vector<GroupMap>& auts);

/// Fills census.classes. Throws invalid_input if the census is not closed
/// under the moves (i.e. incomplete).
void classify(Census& census);

struct ElementaryVerdict {
  bool elementary = false;
  std::size_t operator_count = 0;
  std::size_t non_elementary_count = 0;
  /// Orbit count when the census is classified, else 0.
  std::size_t class_count = 0;
};
ElementaryVerdict is_rb_elementary(const Census& census);

struct SplittingEntry {
  std::size_t op;
  Subgroup kernel;
  Subgroup image;
};
struct SplittingReport {
  std::vector<SplittingEntry> entries;
  /// Each exact factorization (H, L) of G is (ker, im) of exactly one
  /// splitting operator and vice versa.
  bool matches_factorizations = false;
};
SplittingReport splitting_report(const Census& census);

struct SimpleGroupVerdict {
  bool simple = false;
  bool has_fixed_point_free_automorphism = false;
  /// Every operator with trivial kernel is B-1.
  bool trivial_kernel_is_inversion = false;
  /// Indices of non-elementary operators that are not splitting.
  std::vector<std::size_t> non_splitting;
  /// Every non-elementary (ker, im) pair is an exact factorization.
  bool pairs_are_factorizations = false;
  std::size_t non_elementary_count = 0;
};
/// Throws invalid_input when the census group is not simple.
SimpleGroupVerdict simple_group_check(const Census& census);

}  // namespace rbg
