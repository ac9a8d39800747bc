#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qp::maps {

/// A structural invariant of a map or of a construction on maps failed.
class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rotation system on darts. alpha pairs the two darts of each edge, sigma
/// turns counterclockwise around the origin vertex. The face to the right of
/// dart d is the orbit of d under phi = sigma o alpha.
struct CombinatorialMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  int root = 0;
  int pointed = -1;  ///< a dart whose origin is the pointed vertex, or -1

  int dart_count() const { return static_cast<int>(alpha.size()); }
  int edge_count() const { return dart_count() / 2; }
  int phi(int d) const { return sigma[alpha[d]]; }
  std::vector<int> sigma_inverse() const;

  /// Throws MapError unless alpha is a fixed-point-free involution and sigma a
  /// permutation.
  void check_permutations() const;
};

/// Orbit labels of a permutation: result[d] is the index of d's orbit, orbits
/// numbered in order of their smallest dart.
std::vector<int> orbit_ids(const std::vector<int>& perm, int* count = nullptr);

/// Darts of the orbit of d under perm, starting at d.
std::vector<int> orbit(const std::vector<int>& perm, int d);

/// Vertex and face bookkeeping computed once per map.
struct MapTopology {
  std::vector<int> vertex_of;  ///< origin vertex of each dart
  std::vector<int> face_of;    ///< face to the right of each dart
  int vertices = 0;
  int faces = 0;

  MapTopology() = default;
  explicit MapTopology(const CombinatorialMap& m);
  int target(const CombinatorialMap& m, int d) const { return vertex_of[m.alpha[d]]; }
  int euler_characteristic(const CombinatorialMap& m) const { return vertices - m.edge_count() + faces; }
  std::vector<int> face_degrees() const;
};

bool is_connected(const CombinatorialMap& m);

/// Graph distances from vertex `source` (vertex ids from `topo`); unreachable
/// vertices get -1.
std::vector<int> bfs_distances(const CombinatorialMap& m, const MapTopology& topo, int source);

/// Result of opening a map along a set of edges. Every cut dart d is replaced
/// by two copies: cw[d] keeps the face lying to the right of d, ccw[d] borders
/// the opening on its right. Uncut darts keep a single image kept[d].
struct CutResult {
  CombinatorialMap map;
  std::vector<int> kept;
  std::vector<int> cw;
  std::vector<int> ccw;
  std::vector<int> source;  ///< dart of the input map each new dart copies
  /// Image of an uncut dart, or the copy of a cut dart lying on the side of
  /// its left face (the side a slice or block rooted at d keeps).
  int left_copy(int d) const { return kept[d] >= 0 ? kept[d] : ccw[d]; }
  /// Image of an uncut dart, or the copy of a cut dart on its right-face side.
  int right_copy(int d) const { return kept[d] >= 0 ? kept[d] : cw[d]; }
};

/// Splits every edge whose dart appears in `cut` (either orientation) and
/// splits vertex rotations accordingly. The result may be disconnected; its
/// root and pointed fields are left at defaults.
CutResult cut_edges(const CombinatorialMap& m, const std::vector<int>& cut);

/// Darts of the connected component (under sigma and alpha) containing d.
std::vector<int> component_of(const CombinatorialMap& m, int d);
/// Component labels for every dart; returns the number of components.
int component_ids(const CombinatorialMap& m, std::vector<int>& ids);

/// The connected component containing `root`, renumbered, rooted at `root`.
/// `old_of_new` (optional) receives the input dart of each new dart.
CombinatorialMap extract_component(const CombinatorialMap& m, int root, std::vector<int>* old_of_new = nullptr);

/// Same map with dart ids permuted: new id of dart d is perm[d].
CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<int>& perm);

std::string describe(const CombinatorialMap& m);

}  // namespace qp::maps
