#pragma once

#include <string>
#include <vector>

namespace rbg {

/// Matrix of a linear map R on k^n = k e_1 ⊕ ... ⊕ k e_n with
/// R(e_i) = sum_k r_ik e_k. Entries in {-1, 0, 1}.
struct RBMatrix {
  std::size_t n = 0;
  std::vector<int> r;  // row-major

  int operator()(std::size_t i, std::size_t k) const { return r[i * n + k]; }
  int& at(std::size_t i, std::size_t k) { return r[i * n + k]; }
  bool upper_triangular() const;
  std::string to_string() const;

  static RBMatrix zero(std::size_t n);
  static RBMatrix minus_identity(std::size_t n);

  friend bool operator==(const RBMatrix&, const RBMatrix&) = default;
  friend auto operator<=>(const RBMatrix& a, const RBMatrix& b) { return a.r <=> b.r; }
};

/// Conditions (1)-(3) characterising weight 1 RB-operators on k^n.
bool rb_matrix_check(const RBMatrix& m);

/// All upper-triangular matrices passing rb_matrix_check, in lexicographic
/// order of the row-major entries with -1 < 0 < 1.
std::vector<RBMatrix> enumerate_rb_matrices(std::size_t n);

}  // namespace rbg
