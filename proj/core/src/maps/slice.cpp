#include "qp/maps/slice.hpp"

#include <algorithm>
#include <set>

namespace qp::maps {

bool SliceView::on_boundary(int vertex) const {
  return std::any_of(boundary.begin(), boundary.end(), [&](int d) { return topo.vertex_of[d] == vertex; });
}

SliceView make_slice_view(CombinatorialMap m) {
  m.check_permutations();
  SliceView s;
  s.topo = MapTopology(m);
  s.boundary.push_back(m.root);
  for (int d = m.phi(m.root); d != m.root; d = m.phi(d)) s.boundary.push_back(d);
  if (s.boundary.size() % 2 != 0) throw MapError("boundary of odd length");
  s.ell = static_cast<int>(s.boundary.size()) / 2;
  const auto ell = static_cast<std::size_t>(s.ell);
  s.right_boundary.assign(s.boundary.begin() + 1, s.boundary.begin() + static_cast<long>(ell));
  s.left_boundary.assign(s.boundary.begin() + static_cast<long>(ell), s.boundary.end());
  s.root_vertex = s.topo.vertex_of[m.root];
  s.x0 = s.topo.target(m, m.root);
  s.apex = s.topo.vertex_of[s.boundary[ell]];
  s.dist_to_apex = bfs_distances(m, s.topo, s.apex);
  s.map = std::move(m);
  return s;
}

long count_geodesics(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist, int from) {
  std::vector<std::vector<int>> darts_at(static_cast<std::size_t>(topo.vertices));
  for (int d = 0; d < m.dart_count(); ++d) darts_at[topo.vertex_of[d]].push_back(d);
  std::vector<int> order(static_cast<std::size_t>(topo.vertices));
  for (int v = 0; v < topo.vertices; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
  std::vector<long> ways(static_cast<std::size_t>(topo.vertices), 0);
  for (int v : order) {
    if (dist[v] < 0) continue;
    if (dist[v] == 0) {
      ways[v] = 1;
      continue;
    }
    for (int d : darts_at[v]) {
      const int w = topo.target(m, d);
      if (dist[w] == dist[v] - 1) ways[v] += ways[w];
    }
  }
  return ways[from];
}

SliceCheck validate_slice(const SliceView& s) {
  const auto fail = [](std::string r) { return SliceCheck{false, std::move(r)}; };
  const auto& m = s.map;
  if (!is_connected(m)) return fail("map not connected");
  if (s.topo.euler_characteristic(m) != 2) return fail("map not planar");
  const auto deg = s.topo.face_degrees();
  for (int f = 0; f < s.topo.faces; ++f) {
    if (f != s.boundary_face() && deg[f] != 4) return fail("inner face of degree " + std::to_string(deg[f]));
  }
  std::set<int> seen;
  for (int d : s.boundary) {
    if (!seen.insert(s.topo.vertex_of[d]).second) return fail("boundaries meet before the apex");
  }
  if (s.dist_to_apex[s.root_vertex] != s.ell) return fail("left boundary not a shortest path");
  if (s.dist_to_apex[s.x0] != s.ell - 1) return fail("right boundary not a shortest path");
  if (count_geodesics(m, s.topo, s.dist_to_apex, s.x0) != 1) return fail("right boundary not unique");
  return {};
}

namespace {

std::vector<int> geodesic(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist, int first,
                          bool leftmost) {
  const std::vector<int> inv = m.sigma_inverse();
  const auto& turn = leftmost ? inv : m.sigma;
  std::vector<int> path{first};
  if (dist[topo.target(m, first)] != dist[topo.vertex_of[first]] - 1) throw MapError("geodesic: first step not descending");
  while (dist[topo.target(m, path.back())] > 0) {
    const int back = m.alpha[path.back()];
    const int want = dist[topo.vertex_of[back]] - 1;
    int d = turn[back];
    while (d != back && dist[topo.target(m, d)] != want) d = turn[d];
    if (d == back) throw MapError("geodesic: no descending dart");
    path.push_back(d);
  }
  return path;
}

SliceView open_along(const CombinatorialMap& m, bool leftmost) {
  if (m.pointed < 0) throw MapError("slice extraction needs a pointed map");
  const MapTopology topo(m);
  const auto dist = bfs_distances(m, topo, topo.vertex_of[m.pointed]);
  const int k = dist[topo.vertex_of[m.root]];
  if (k < 1 || dist[topo.target(m, m.root)] != k - 1) throw MapError("root edge does not point towards the pointed vertex");
  const auto path = geodesic(m, topo, dist, m.root, leftmost);
  const CutResult cut = cut_edges(m, path);
  return make_slice_view(extract_component(cut.map, cut.left_copy(m.root)));
}

}  // namespace

std::vector<int> leftmost_geodesic(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist,
                                   int first) {
  return geodesic(m, topo, dist, first, true);
}

std::vector<int> rightmost_geodesic(const CombinatorialMap& m, const MapTopology& topo, const std::vector<int>& dist,
                                    int first) {
  return geodesic(m, topo, dist, first, false);
}

SliceView extract_slice(const CombinatorialMap& m) { return open_along(m, true); }
SliceView cut_along_rightmost(const CombinatorialMap& m) { return open_along(m, false); }

}  // namespace qp::maps
