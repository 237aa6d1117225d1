#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rbg/error.hpp"

namespace rbg {

/// Index of an element inside one FiniteGroup. Only meaningful together with
/// the group it came from.
using elem_t = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

using Table = std::vector<std::vector<elem_t>>;
using Permutation = std::vector<std::uint32_t>;

/// Dense multiplication-table group. Immutable once constructed; every
/// factory validates the group axioms before returning.
class FiniteGroup {
 public:
  /// Validates `table` (row g, column h holds gh). The identity is located,
  /// it need not be index 0.
  static GroupPtr from_cayley_table(const Table& table, std::string name = {},
                                    std::vector<std::string> labels = {});

  /// Closure of the generators under composition, enumerated breadth-first
  /// (right multiplication by generators in order) starting from the identity.
  /// Products compose left to right: (p*q)[x] = q[p[x]].
  static GroupPtr from_permutations(const std::vector<Permutation>& gens, std::string name = {},
                                    std::vector<std::string> gen_names = {});

  /// Row-major variant of from_cayley_table with identical validation.
  static GroupPtr from_flat_table(std::vector<elem_t> flat, std::size_t order, std::string name = {},
                                  std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  elem_t identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(elem_t g) const;

  elem_t mul(elem_t a, elem_t b) const noexcept { return table_[std::size_t(a) * order_ + b]; }
  elem_t inv(elem_t a) const noexcept { return inverses_[a]; }
  elem_t mul(std::initializer_list<elem_t> xs) const noexcept;
  elem_t pow(elem_t a, long long k) const noexcept;
  /// x^g = g^-1 x g
  elem_t conj(elem_t x, elem_t g) const noexcept { return mul(mul(inv(g), x), g); }
  /// [g,h] = g^-1 h^-1 g h
  elem_t commutator(elem_t g, elem_t h) const noexcept {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  std::size_t element_order(elem_t a) const noexcept { return element_orders_[a]; }
  bool is_abelian() const noexcept { return abelian_; }

  std::span<const elem_t> row(elem_t g) const noexcept {
    return {table_.data() + std::size_t(g) * order_, order_};
  }
  const std::vector<elem_t>& flat_table() const noexcept { return table_; }
  Table table() const;

  /// Stable content identifier: "fnv1a64:" followed by 16 hex digits of the
  /// FNV-1a hash of the order and the flat table.
  std::string content_hash() const;

  /// A small generating set, chosen greedily in index order.
  const std::vector<elem_t>& generators() const noexcept { return generators_; }

  /// Copy with a different name (labels and table are shared semantics).
  GroupPtr renamed(std::string name) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  elem_t identity_ = 0;
  std::vector<elem_t> table_;
  std::vector<elem_t> inverses_;
  std::vector<std::size_t> element_orders_;
  std::vector<elem_t> generators_;
  std::vector<std::string> labels_;
  std::string name_;
  bool abelian_ = true;
};

/// Elements reachable from the identity by right multiplication with `gens`,
/// in breadth-first order. For a finite group this is the generated subgroup.
std::vector<elem_t> closure(const FiniteGroup& g, std::span<const elem_t> gens);

/// Greedy generating set of the subgroup closure(g, elems); useful for
/// backtracking searches over generator images.
std::vector<elem_t> small_generating_set(const FiniteGroup& g, std::span<const elem_t> elems);

/// Opposite group: same elements, product a*b = ba.
GroupPtr opposite(const FiniteGroup& g);

/// (gh)^k = g^k h^k for all g, h. Returns the first failing pair if any.
bool is_k_abelian(const FiniteGroup& g, long long k, std::pair<elem_t, elem_t>* witness = nullptr);

}  // namespace rbg
