#pragma once

#include <string>
#include <vector>

#include "qp/maps/combinatorial_map.hpp"

namespace qp::maps {

/// A map with a boundary read as a slice: the boundary face lies to the right
/// of map.root, boundary[0] = root, then the right boundary up to the apex and
/// the left boundary back down to the root vertex.
struct SliceView {
  CombinatorialMap map;
  MapTopology topo;
  int ell = 0;
  int root_vertex = -1;
  int x0 = -1;  ///< endpoint of the root edge
  int apex = -1;
  std::vector<int> boundary;        ///< 2 ell darts, face to their right
  std::vector<int> right_boundary;  ///< ell-1 darts from x0 to the apex
  std::vector<int> left_boundary;   ///< ell darts from the apex to the root vertex
  std::vector<int> dist_to_apex;    ///< per vertex

  int boundary_face() const { return topo.face_of[map.root]; }
  bool on_boundary(int vertex) const;
};

/// Reads the slice structure off a rooted map. Throws MapError if the root
/// face has odd degree.
SliceView make_slice_view(CombinatorialMap m);

struct SliceCheck {
  bool valid = true;
  std::string reason;
  explicit operator bool() const { return valid; }
};

/// The four slice conditions plus planarity and inner face degrees.
SliceCheck validate_slice(const SliceView& s);

/// Number of shortest paths (as edge sequences) from `from` to the BFS source
/// whose distances are `dist`.
long count_geodesics(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist, int from);

/// Geodesic towards the BFS source of `dist` that starts with dart `first`
/// and then always takes the first descending dart clockwise after the
/// reversal of the arrival dart.
std::vector<int> leftmost_geodesic(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist,
                                   int first);
/// Mirror image: first descending dart counterclockwise.
std::vector<int> rightmost_geodesic(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist,
                                    int first);

/// Opens a pointed rooted quadrangulation whose root edge ends one step
/// closer to the pointed vertex along the leftmost geodesic starting with the
/// root edge. Throws MapError when the root edge points away.
SliceView extract_slice(const CombinatorialMap& m);
/// Same cut along the rightmost geodesic; the result is generally not a slice.
SliceView cut_along_rightmost(const CombinatorialMap& m);

}  // namespace qp::maps
