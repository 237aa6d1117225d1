#include "rbg/rb_matrix.hpp"

#include <sstream>

namespace rbg {

bool RBMatrix::upper_triangular() const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k)
      if ((*this)(i, k) != 0) return false;
  return true;
}

std::string RBMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << (*this)(i, k);
    os << ']';
  }
  os << ']';
  return os.str();
}

RBMatrix RBMatrix::zero(std::size_t n) { return RBMatrix{n, std::vector<int>(n * n, 0)}; }

RBMatrix RBMatrix::minus_identity(std::size_t n) {
  auto m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = -1;
  return m;
}

bool rb_matrix_check(const RBMatrix& m) {
  const std::size_t n = m.n;
  if (m.r.size() != n * n) return false;
  for (int v : m.r)
    if (v < -1 || v > 1) return false;
  // (1)
  for (std::size_t i = 0; i < n; ++i) {
    const int d = m(i, i);
    if (d == 1) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      if (d == 0 && m(i, k) == -1) return false;
      if (d == -1 && m(i, k) == 1) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      // (2)
      if (m(i, k) == 0 && m(k, i) == 0) {
        for (std::size_t l = 0; l < n; ++l)
          if (l != i && l != k && m(i, l) * m(k, l) != 0) return false;
      }
      // (3)
      if (m(i, k) != 0) {
        if (m(k, i) != 0) return false;
        for (std::size_t l = 0; l < n; ++l)
          if (l != i && l != k && m(k, l) != 0 && m(i, l) != m(i, k)) return false;
      }
    }
  }
  return true;
}

std::vector<RBMatrix> enumerate_rb_matrices(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) slots.emplace_back(i, k);
  // Odometer over slots in row-major order so the output is sorted.
  std::vector<int> digit(slots.size(), -1);
  std::vector<RBMatrix> out;
  for (;;) {
    auto m = RBMatrix::zero(n);
    for (std::size_t s = 0; s < slots.size(); ++s) m.at(slots[s].first, slots[s].second) = digit[s];
    if (rb_matrix_check(m)) out.push_back(std::move(m));
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++digit[s] <= 1) break;
      digit[s] = -1;
      if (s == 0) return out;
    }
    if (slots.empty()) return out;
  }
}

}  // namespace rbg
