#include "qp/maps/dividing_line.hpp"

#include <algorithm>
#include <set>

namespace qp::maps {
namespace {

std::vector<char> line_edge_mask(const SliceView& s, const DividingLine& line) {
  std::vector<char> on(static_cast<std::size_t>(s.map.dart_count()), 0);
  for (int d : line.darts) on[d] = on[s.map.alpha[d]] = 1;
  return on;
}

}  // namespace

std::vector<char> lower_faces(const SliceView& s, const DividingLine& line) {
  const auto& m = s.map;
  const auto on_line = line_edge_mask(s, line);
  std::vector<std::vector<int>> darts_of(static_cast<std::size_t>(s.topo.faces));
  for (int d = 0; d < m.dart_count(); ++d) darts_of[s.topo.face_of[d]].push_back(d);
  std::vector<char> lower(static_cast<std::size_t>(s.topo.faces), 0);
  const int start = s.topo.face_of[m.alpha[m.root]];
  if (start == s.boundary_face()) throw MapError("root edge has the boundary on both sides");
  std::vector<int> stack{start};
  lower[start] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int d : darts_of[f]) {
      if (on_line[d]) continue;
      const int g = s.topo.face_of[m.alpha[d]];
      if (g == s.boundary_face() || lower[g]) continue;
      lower[g] = 1;
      stack.push_back(g);
    }
  }
  return lower;
}

std::string property1_violation(const SliceView& s, const DividingLine& line) {
  const auto& m = s.map;
  const auto lower = lower_faces(s, line);
  const auto on_line = line_edge_mask(s, line);
  std::vector<char> line_vertex(static_cast<std::size_t>(s.topo.vertices), 0), black(line_vertex);
  for (std::size_t j = 0; j < line.vertices.size(); ++j) {
    line_vertex[line.vertices[j]] = 1;
    if (j % 2 == 1) black[line.vertices[j]] = 1;
  }
  for (int d = 0; d < m.dart_count(); ++d) {
    if (on_line[d] || d > m.alpha[d]) continue;
    const int f = s.topo.face_of[d], g = s.topo.face_of[m.alpha[d]];
    if (lower[f] && lower[g] && line_vertex[s.topo.vertex_of[d]] && line_vertex[s.topo.target(m, d)]) {
      return "edge between line vertices inside the lower part";
    }
  }
  std::vector<char> inside(static_cast<std::size_t>(s.topo.vertices), 1);
  for (int d = 0; d < m.dart_count(); ++d) {
    const int v = s.topo.vertex_of[d];
    if (line_vertex[v] || !lower[s.topo.face_of[d]]) inside[v] = 0;
  }
  std::vector<std::set<int>> black_neighbours(static_cast<std::size_t>(s.topo.vertices));
  for (int d = 0; d < m.dart_count(); ++d) {
    const int v = s.topo.vertex_of[d], w = s.topo.target(m, d);
    if (inside[v] && black[w]) black_neighbours[v].insert(w);
  }
  for (const auto& nb : black_neighbours) {
    if (nb.size() > 1) return "two line vertices at distance ell-2 share a neighbour inside the lower part";
  }
  return {};
}

DividingLine dividing_line(const SliceView& s) {
  const auto& m = s.map;
  const auto& topo = s.topo;
  const auto& dist = s.dist_to_apex;
  const int ell = s.ell;
  if (ell < 2) throw MapError("dividing line needs ell >= 2");
  DividingLine line;
  const int first = s.right_boundary.front();
  line.darts.push_back(first);
  line.vertices = {s.x0, topo.target(m, first)};
  if (ell > 2) {
    const std::vector<int> inv = m.sigma_inverse();
    const int goal = topo.vertex_of[s.left_boundary[static_cast<std::size_t>(ell - 2)]];
    std::set<int> used{line.vertices[0], line.vertices[1]};
    // Clockwise scan at the origin of `back`, starting right after it.
    auto scan = [&](int back, int want, int skip, auto&& accept) {
      for (int d = inv[back]; d != back; d = inv[d]) {
        const int w = topo.target(m, d);
        if (dist[w] == want && w != skip && accept(d)) return d;
      }
      return -1;
    };
    while (line.vertices.back() != goal) {
      if (static_cast<int>(line.vertices.size()) > topo.vertices + 2) throw MapError("dividing line does not terminate");
      const int v = line.vertices.back();
      const int x = line.vertices[line.vertices.size() - 2];
      int second = -1;
      const int step = scan(m.alpha[line.darts.back()], ell - 1, x, [&](int d) {
        second = scan(m.alpha[d], ell - 2, v, [](int) { return true; });
        return second >= 0;
      });
      if (step < 0) throw MapError("no two-step continuation of the dividing line");
      const int nx = topo.target(m, step), nv = topo.target(m, second);
      if (!used.insert(nx).second || !used.insert(nv).second) throw MapError("dividing line forms a loop");
      line.darts.push_back(step);
      line.darts.push_back(second);
      line.vertices.push_back(nx);
      line.vertices.push_back(nv);
    }
  }
  line.p = static_cast<int>(line.darts.size() - 1) / 2;
  line.ends_through_boundary = ell > 2 && s.on_boundary(line.x(line.p));

  for (std::size_t j = 0; j < line.vertices.size(); ++j) {
    if (dist[line.vertices[j]] != (j % 2 == 0 ? ell - 1 : ell - 2)) throw MapError("dividing line does not alternate");
  }
  // The root side must lie on the left of every line edge.
  const auto lower = lower_faces(s, line);
  const int outer = s.boundary_face();
  for (int d : line.darts) {
    const int left = topo.face_of[m.alpha[d]];
    if ((!lower[left] && left != outer) || lower[topo.face_of[d]]) {
      throw MapError("dividing line does not separate the root side");
    }
  }
  if (const std::string why = property1_violation(s, line); !why.empty()) throw MapError("Property 1: " + why);
  return line;
}

}  // namespace qp::maps
