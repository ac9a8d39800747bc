#pragma once

#include <string>

#include "qp/maps/combinatorial_map.hpp"

namespace qp::maps {

/// Isomorphism-invariant code of a rooted map: darts are renumbered in
/// breadth-first order from the root (sigma before alpha) and the code lists
/// (sigma, alpha) in the new numbering. With `with_pointed`, the smallest new
/// id around the pointed vertex is appended.
std::string canonical_code(const CombinatorialMap& m, bool with_pointed = true);

}  // namespace qp::maps
