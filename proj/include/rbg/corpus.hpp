#pragma once

#include <string>
#include <vector>

#include "rbg/group.hpp"

namespace rbg {

GroupPtr cyclic(std::size_t n);
/// Symmetries of the regular n-gon, order 2n, generated by r and s.
GroupPtr dihedral(std::size_t n);
GroupPtr quaternion8();
/// Upper unitriangular 3x3 matrices over Z_p; element (x, z, y) is
/// [[1,x,z],[0,1,y],[0,0,1]] with index p^2 x + p z + y.
GroupPtr heisenberg(std::size_t p);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);

/// Names of the bundled groups in a fixed order.
const std::vector<std::string>& corpus_names();
/// Throws invalid_input for unknown names.
GroupPtr corpus_group(const std::string& name);
/// Bundled groups whose order lies in [lo, hi], in corpus order, one per
/// name.
std::vector<GroupPtr> corpus_groups(std::size_t lo, std::size_t hi);

}  // namespace rbg
