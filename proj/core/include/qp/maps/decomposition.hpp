#pragma once

#include <string>
#include <vector>

#include "qp/maps/dividing_line.hpp"

namespace qp::maps {

/// Cut from the root vertex to the dividing line: a single edge to some x_i,
/// or an edge to an intermediate vertex y followed by an edge to some v_j.
struct Frontier {
  std::vector<int> darts;  ///< slice darts leaving the root vertex
  int length = 1;          ///< 1 or 2; the cut to x_0 counts as 2
  int end_vertex = -1;     ///< x_i or v_j
};

struct Block {
  int right = 0;  ///< a_{m-1}
  int left = 0;   ///< a_m
  int half_boundary = 0;  ///< i, the core has boundary length 2i
  int up_steps = 0;       ///< line steps v -> x along the core boundary
  int core_faces = 0;
  int bundle_faces = 0;
  int nontrivial_bundles = 0;
  CombinatorialMap core;  ///< rooted at its right frontier, boundary on the right
};

struct BlockDecomposition {
  std::vector<int> a_sequence;  ///< a_0 = 2, then one entry per block
  std::vector<Frontier> frontiers;
  std::vector<Block> blocks;
  std::vector<SliceView> upper_slices;  ///< one per step v_{i-1} -> x_i
  int leading_bundle_faces = 0;
  bool leading_bundle_trivial = true;
  int intermediate_vertices = 0;  ///< number of two-step cuts
};

/// Splits a slice along its dividing line, the leftmost geodesics P_i from
/// each x_i (i >= 1) and the leftmost connections from the root vertex to the
/// line, then strips the bundles along each block's left frontier. Checks the
/// structure as it goes (frontier order, a_0 = 2, p upper slices that are
/// valid with 2 <= ell' <= ell-1, simple core boundaries, Property 2, face
/// conservation) and throws MapError on any failure.
BlockDecomposition decompose(const SliceView& s, const DividingLine& line);

/// Empty when a rooted map with simple boundary (to the right of the root)
/// satisfies Property 2, otherwise the violated clause. Boundary vertices
/// alternate black and white starting with a black root vertex.
std::string property2_violation(const CombinatorialMap& core);

}  // namespace qp::maps
