#pragma once

#include <optional>

#include "k3lat/shortvec.hpp"

namespace k3lat {

// Isometry testing between definite lattices of the same sign by
// short-vector backtracking. A returned witness m satisfies
// m * g2 * m^T = g1 exactly (rows = images of l1's basis in l2 coordinates)
// and is re-verified before returning. A nullopt verdict is definitive:
// the candidate lists are complete enumerations.
std::optional<IntMat> is_isometric(const Lattice& l1, const Lattice& l2);

}  // namespace k3lat
