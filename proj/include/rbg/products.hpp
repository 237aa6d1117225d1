#pragma once

#include <vector>

#include "rbg/subgroup.hpp"

namespace rbg {

/// G_1 x ... x G_k with mixed-radix element indices; the first factor is the
/// most significant digit.
struct ProductGroup {
  GroupPtr group;
  std::vector<GroupPtr> factors;

  elem_t encode(const std::vector<elem_t>& coords) const;
  std::vector<elem_t> decode(elem_t g) const;
  elem_t component(elem_t g, std::size_t i) const;

  GroupMap injection(std::size_t i) const;
  GroupMap projection(std::size_t i) const;
  /// Image of injection(i) as a subgroup of the product.
  Subgroup factor_subgroup(std::size_t i) const;
};

ProductGroup direct_product(const std::vector<GroupPtr>& factors, std::string name = {});
ProductGroup direct_product(const GroupPtr& a, const GroupPtr& b, std::string name = {});
/// G^n
ProductGroup direct_power(const GroupPtr& g, std::size_t n, std::string name = {});

/// H ⋊ L on pairs (h, l) with (h, l)(h', l') = (h act[l](h'), l l').
/// `action[l]` must be an automorphism of H and l -> action[l] a
/// homomorphism; otherwise action_not_homomorphism.
struct SemidirectProduct {
  GroupPtr group;
  GroupPtr normal;
  GroupPtr complement;
  elem_t encode(elem_t h, elem_t l) const { return h * elem_t(complement->order()) + l; }
  elem_t normal_part(elem_t g) const { return g / elem_t(complement->order()); }
  elem_t complement_part(elem_t g) const { return g % elem_t(complement->order()); }
  Subgroup normal_subgroup() const;
  Subgroup complement_subgroup() const;
};
SemidirectProduct semidirect_product(const GroupPtr& h, const GroupPtr& l, const std::vector<GroupMap>& action,
                                     std::string name = {});

/// H ≀ L = L · Fun(L, H) with (l f)(l' f') = l l' · f^{l'} f', where
/// f^{l}(x) = f(l x).
struct WreathProduct {
  GroupPtr group;
  GroupPtr base_factor;   // H
  GroupPtr top;           // L
  ProductGroup base;      // Fun(L, H) = H^{|L|}, coordinate x is f(x)

  elem_t encode(elem_t l, elem_t f) const { return l * elem_t(base.group->order()) + f; }
  elem_t top_part(elem_t g) const { return g / elem_t(base.group->order()); }
  elem_t base_part(elem_t g) const { return g % elem_t(base.group->order()); }
  Subgroup top_subgroup() const;
  Subgroup base_subgroup() const;
};
WreathProduct wreath_product(const GroupPtr& h, const GroupPtr& l, std::string name = {});

/// Saturating product used for cap checks before allocating.
std::size_t checked_order_product(std::size_t a, std::size_t b);

}  // namespace rbg
