#pragma once

#include <vector>

#include "rbg/operator.hpp"

namespace rbg {

/// G_B: the elements of G with g o h = g B(g) h B(g)^-1.
struct DerivedGroup {
  GroupPtr base;
  RBOperator op;
  GroupPtr circle;

  elem_t circ(elem_t a, elem_t b) const { return circle->mul(a, b); }
};

/// Builds the circle table, validates it as a group and checks that B is a
/// homomorphism G_B -> G and an RB-operator on G_B. Throws invalid_input for
/// an invalid B and structure_violation if a guaranteed property fails.
DerivedGroup derived_group(const RBOperator& b);

/// a_1^(k_1) o a_2^(k_2) o ... with powers taken in G_B.
struct CircleWord {
  std::vector<std::pair<elem_t, long long>> letters;

  /// Merges adjacent equal generators and drops zero exponents.
  CircleWord& normalize();
};

/// Closed form (B+(a_1))^k_1 ... (B+(a_s))^k_s B(a_s)^-k_s ... B(a_1)^-k_1.
elem_t eval_word(const RBOperator& b, const CircleWord& w);
/// Left fold of circle-table products; the oracle for eval_word.
elem_t eval_word_iterated(const DerivedGroup& d, const CircleWord& w);

struct StructureReport {
  Subgroup kernel;        // ker B
  Subgroup kernel_plus;   // ker B+
  Subgroup image;         // Im B
  Subgroup image_plus;    // Im B+
  bool kernels_normal_in_derived = false;
  bool kernels_normal_in_images = false;
  /// Coset of B+(g) in Im(B+)/ker B  ->  coset of B(g) in Im(B)/ker B+,
  /// indexed by quotient element (cosets numbered by least element).
  std::vector<elem_t> quotient_map{};
  std::vector<elem_t> quotient_domain_reps{};
  std::vector<elem_t> quotient_codomain_reps{};
  bool quotient_map_well_defined = false;
  bool quotient_map_isomorphism = false;
  bool images_factorize = false;

  bool all_hold() const {
    return kernels_normal_in_derived && kernels_normal_in_images && quotient_map_well_defined &&
           quotient_map_isomorphism && images_factorize;
  }
};

/// Checks the four kernel/image statements for B; throws
/// structure_violation naming the first that fails.
StructureReport structure_report(const RBOperator& b);

}  // namespace rbg
