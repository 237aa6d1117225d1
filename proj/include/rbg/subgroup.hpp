#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

/// A subset of a parent group closed under products and inverses, stored as
/// a sorted element list plus a membership bitmap.
class Subgroup {
 public:
  /// Checks identity, closure and Lagrange; throws invalid_input otherwise.
  static Subgroup from_elements(GroupPtr parent, std::vector<elem_t> elements);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<elem_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(elem_t g) const noexcept { return member_[g]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_->order(); }

  /// Deterministic order: by size, then lexicographically by element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements_ < b.elements_;
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, std::vector<elem_t> sorted, Unchecked);

  GroupPtr parent_;
  std::vector<elem_t> elements_;
  std::vector<bool> member_;

  friend Subgroup make_subgroup_unchecked(GroupPtr parent, std::vector<elem_t> elems);
};

/// Internal fast path for element sets already known to be subgroups.
Subgroup make_subgroup_unchecked(GroupPtr parent, std::vector<elem_t> elems);

Subgroup subgroup_generated(const GroupPtr& g, std::span<const elem_t> elems);

/// Every subgroup of g, ordered by (size, element set). Built by extending
/// each known subgroup by one representative per right coset and
/// deduplicating element sets.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Size of the set product AB.
std::size_t product_size(const Subgroup& a, const Subgroup& b);

/// Normal in the parent group.
bool is_normal(const Subgroup& s);
/// n is normal in s (both subgroups of the same parent, n <= s).
bool is_normal_in(const Subgroup& n, const Subgroup& s);

Subgroup center(const GroupPtr& g);
Subgroup normal_closure(const GroupPtr& g, std::span<const elem_t> elems);
/// [H, L], generated by the commutators [h, l].
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& l);

/// G_1 = G, G_{i+1} = [G, G_i], returned up to and including the first term
/// equal to its successor.
std::vector<Subgroup> lower_central_series(const GroupPtr& g);

bool is_simple(const GroupPtr& g);

/// Total map between two groups given by its image array.
struct GroupMap {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<elem_t> images;

  elem_t operator()(elem_t g) const { return images[g]; }
  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images == b.images; }
};

/// The subgroup viewed as a group in its own right. Local element i is the
/// i-th smallest parent element.
struct InducedGroup {
  GroupPtr group;
  std::vector<elem_t> to_parent;
  /// parent element -> local index, or npos outside the subgroup.
  std::vector<elem_t> from_parent;
  static constexpr elem_t npos = static_cast<elem_t>(-1);
};
InducedGroup induced(const Subgroup& s, std::string name = {});

struct Quotient {
  GroupPtr group;
  /// parent element -> coset index (only meaningful on the numerator).
  std::vector<elem_t> coset_of;
  /// least parent element of each coset
  std::vector<elem_t> representatives;
};

/// s/n for n normal in s. Cosets are numbered by their least element.
Quotient quotient(const Subgroup& s, const Subgroup& n);

struct QuotientWithProjection {
  GroupPtr group;
  GroupMap projection;
  std::vector<elem_t> representatives;
};
/// G/N with the projection as a GroupMap; throws not_normal.
QuotientWithProjection quotient(const GroupPtr& g, const Subgroup& n);

/// All ordered pairs (H, L) with H ∩ L = {e} and |H||L| = |G|.
std::vector<std::pair<Subgroup, Subgroup>> exact_factorizations(const GroupPtr& g);

}  // namespace rbg
