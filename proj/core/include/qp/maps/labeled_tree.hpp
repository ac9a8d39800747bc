#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qp::maps {

/// Plane tree with integer labels. Vertex 0 is the root; vertices are numbered
/// in preorder and children are kept in counterclockwise order.
struct LabeledPlaneTree {
  std::vector<int> parent;  ///< parent[0] = -1
  std::vector<std::vector<int>> children;
  std::vector<int> labels;
  int root_corner = 0;  ///< corner index in contour order
  int epsilon = 1;      ///< +1 or -1

  int edge_count() const { return static_cast<int>(labels.size()) - 1; }
  /// Labels differ by at most one along edges and the minimum is 1.
  bool well_labeled() const;
};

inline constexpr int kMaxTreeEdges = 8;

/// Calls `visit` on every plane tree with n edges, every labeling with steps in
/// {-1, 0, 1} shifted to minimum 1, and both signs: Catalan(n) * 3^n * 2 trees.
void for_each_tree(int n, const std::function<void(const LabeledPlaneTree&)>& visit);

/// Catalan(n) * 3^n * 2.
std::uint64_t tree_stream_length(int n);

}  // namespace qp::maps
