#pragma once

#include "qp/maps/combinatorial_map.hpp"
#include "qp/maps/labeled_tree.hpp"

namespace qp::maps {

/// Closure of a well-labeled tree into a pointed rooted quadrangulation.
///
/// Corners are read along the contour, which keeps the unique outer face of
/// the tree on its right. Each corner of label l gets a chord to the next
/// corner of label l-1, or to an added vertex of label 0 when l = 1. The root
/// is the chord leaving the root corner, reversed when epsilon = -1.
/// Self-checks face degrees, genus and that labels equal distances to the
/// added vertex; a failure throws MapError.
CombinatorialMap cvs_closure(const LabeledPlaneTree& tree);

}  // namespace qp::maps
