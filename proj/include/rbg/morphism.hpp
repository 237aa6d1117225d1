#pragma once

#include <optional>
#include <vector>

#include "rbg/subgroup.hpp"

namespace rbg {

bool is_homomorphism(const GroupMap& f, std::pair<elem_t, elem_t>* witness = nullptr);
/// f(xy) = f(y) f(x) for all pairs.
bool is_antihomomorphism(const GroupMap& f, std::pair<elem_t, elem_t>* witness = nullptr);
bool is_bijective(const GroupMap& f);
bool is_automorphism(const GroupMap& f);

GroupMap identity_map(const GroupPtr& g);
/// x -> outer(inner(x))
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse(const GroupMap& bijection);
/// x -> g^-1 x g
GroupMap inner_automorphism(const GroupPtr& g, elem_t by);

/// Only the identity is fixed.
bool fixed_point_free(const GroupMap& f);

enum class MapKind { homomorphism, injective, bijective };

/// Backtracking over images of a generating set of `from`, propagating along
/// right multiplication and pruning by element order. Results are sorted by
/// image array. `limit` = 0 means no limit.
std::vector<GroupMap> find_homomorphisms(const GroupPtr& from, const GroupPtr& to, MapKind kind,
                                         std::size_t limit = 0);

std::vector<GroupMap> automorphisms(const GroupPtr& g);
std::vector<GroupMap> endomorphisms(const GroupPtr& g);
std::vector<GroupMap> all_isomorphisms(const GroupPtr& a, const GroupPtr& b);
/// Screens cheap invariants (order profile, center, derived subgroup) before
/// searching.
std::optional<GroupMap> is_isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace rbg
