#include "qp/maps/dot_export.hpp"

#include <set>

namespace qp::maps {

void write_dot(std::ostream& os, const CombinatorialMap& m, const DotStyle& style) {
  const MapTopology topo(m);
  const std::set<int> red(style.highlighted.begin(), style.highlighted.end());
  os << "graph \"" << style.name << "\" {\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < topo.vertices; ++v) {
    os << "  v" << v << " [label=\"" << v;
    if (!style.distances.empty()) os << "\\nd=" << style.distances[static_cast<std::size_t>(v)];
    os << '"';
    if (v == style.marked_vertex) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (int d = 0; d < m.dart_count(); ++d) {
    const int a = m.alpha[d];
    if (a < d) continue;
    os << "  v" << topo.vertex_of[d] << " -- v" << topo.vertex_of[a];
    const bool hot = red.count(d) || red.count(a);
    const bool root = d == m.root || a == m.root;
    if (hot || root) {
      os << " [";
      if (hot) os << "color=red";
      if (hot && root) os << ", ";
      if (root) os << "style=bold";
      os << ']';
    }
    os << ";\n";
  }
  os << "}\n";
}

void write_pointed_dot(std::ostream& os, const CombinatorialMap& m, const std::string& name) {
  const MapTopology topo(m);
  DotStyle style;
  style.name = name;
  if (m.pointed >= 0) {
    style.marked_vertex = topo.vertex_of[m.pointed];
    style.distances = bfs_distances(m, topo, style.marked_vertex);
  }
  write_dot(os, m, style);
}

void write_slice_dot(std::ostream& os, const SliceView& s, const DividingLine* line, const std::string& name) {
  DotStyle style;
  style.name = name;
  style.distances = s.dist_to_apex;
  style.marked_vertex = s.apex;
  if (line) style.highlighted = line->darts;
  write_dot(os, s.map, style);
}

}  // namespace qp::maps
