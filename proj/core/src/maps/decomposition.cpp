#include "qp/maps/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qp::maps {
namespace {

std::vector<int> boundary_walk(const CombinatorialMap& m) {
  std::vector<int> walk{m.root};
  for (int d = m.phi(m.root); d != m.root; d = m.phi(d)) walk.push_back(d);
  return walk;
}

int inner_faces(const CombinatorialMap& m) { return MapTopology(m).faces - 1; }

// Component of `cut` containing `root`, with the composed map back to the
// darts of the map that was cut.
struct Piece {
  CombinatorialMap map;
  std::vector<int> source;
};

Piece piece(const CutResult& cut, int root) {
  Piece p;
  std::vector<int> old;
  p.map = extract_component(cut.map, root, &old);
  p.source.reserve(old.size());
  for (int d : old) p.source.push_back(cut.source[d]);
  return p;
}

}  // namespace

std::string property2_violation(const CombinatorialMap& core) {
  const MapTopology topo(core);
  const auto walk = boundary_walk(core);
  if (walk.size() < 4 || walk.size() % 2 != 0) return "boundary length below 4";
  if (topo.euler_characteristic(core) != 2 || !is_connected(core)) return "not a planar map";
  const int outer = topo.face_of[core.root];
  const auto deg = topo.face_degrees();
  for (int f = 0; f < topo.faces; ++f) {
    if (f != outer && deg[f] != 4) return "inner face of degree " + std::to_string(deg[f]);
  }
  std::vector<int> colour(static_cast<std::size_t>(topo.vertices), -1);  // 1 black, 0 white
  for (std::size_t j = 0; j < walk.size(); ++j) {
    const int v = topo.vertex_of[walk[j]];
    if (colour[v] >= 0) return "boundary not simple";
    colour[v] = j % 2 == 0 ? 1 : 0;
  }
  std::vector<std::set<int>> black_nb(static_cast<std::size_t>(topo.vertices));
  for (int d = 0; d < core.dart_count(); ++d) {
    const int u = topo.vertex_of[d], w = topo.target(core, d);
    const bool boundary_edge = topo.face_of[d] == outer || topo.face_of[core.alpha[d]] == outer;
    if (!boundary_edge && colour[u] >= 0 && colour[w] >= 0) return "inner edge joins two boundary vertices";
    if (colour[u] < 0 && colour[w] == 1) black_nb[u].insert(w);
  }
  for (const auto& nb : black_nb) {
    if (nb.size() > 1) return "two black boundary vertices share an inner neighbour";
  }
  return {};
}

BlockDecomposition decompose(const SliceView& s, const DividingLine& line) {
  const auto& m = s.map;
  const auto& topo = s.topo;
  const auto& dist = s.dist_to_apex;
  const int ell = s.ell;
  if (ell < 2) throw MapError("decomposition needs ell >= 2");
  const auto nv = static_cast<std::size_t>(topo.vertices);
  std::vector<int> line_pos(nv, -1);
  for (std::size_t j = 0; j < line.vertices.size(); ++j) line_pos[line.vertices[j]] = static_cast<int>(j);
  std::vector<char> is_line_dart(static_cast<std::size_t>(m.dart_count()), 0);
  std::vector<int> line_index(static_cast<std::size_t>(m.dart_count()), -1);
  for (std::size_t j = 0; j < line.darts.size(); ++j) {
    is_line_dart[line.darts[j]] = 1;
    line_index[line.darts[j]] = static_cast<int>(j);
  }
  std::vector<char> on_boundary(nv, 0);
  for (int d : s.boundary) on_boundary[topo.vertex_of[d]] = 1;
  const auto lower = lower_faces(s, line);
  std::vector<char> inside(nv, 1);
  for (int d = 0; d < m.dart_count(); ++d) {
    const int v = topo.vertex_of[d];
    if (line_pos[v] >= 0 || on_boundary[v] || !lower[topo.face_of[d]]) inside[v] = 0;
  }
  const std::vector<int> inv = m.sigma_inverse();

  // Frontiers, ordered counterclockwise at the root vertex from the root edge.
  const std::vector<int> around = orbit(m.sigma, m.root);
  const int last = m.alpha[s.boundary.back()];
  if (around.back() != last) throw MapError("root vertex rotation does not end on the left boundary");
  const int z = topo.target(m, last);
  std::map<int, std::size_t> leftmost;
  for (std::size_t i = 0; i < around.size(); ++i) leftmost[topo.target(m, around[i])] = i;
  std::vector<std::pair<std::size_t, Frontier>> found;
  BlockDecomposition out;
  for (const auto& [w, pos] : leftmost) {
    const int d = around[pos];
    Frontier f;
    if (line_pos[w] >= 0 && line_pos[w] % 2 == 0) {
      f.darts = {d};
      f.end_vertex = w;
      if (w == s.x0) {
        f.darts.push_back(line.darts.front());
        f.length = 2;
        f.end_vertex = line.vertices[1];
      }
    } else if (dist[w] == ell - 1 && line_pos[w] < 0 && (inside[w] || w == z)) {
      const int back = m.alpha[d];
      int second = -1;
      for (int e = inv[back]; e != back && second < 0; e = inv[e]) {
        const int t = topo.target(m, e);
        if (line_pos[t] >= 0 && line_pos[t] % 2 == 1) second = e;
      }
      if (second < 0) continue;
      f.darts = {d, second};
      f.length = 2;
      f.end_vertex = topo.target(m, second);
      ++out.intermediate_vertices;
    } else {
      continue;
    }
    found.emplace_back(pos, std::move(f));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (found.size() < 2) throw MapError("fewer than two frontiers");
  if (topo.target(m, found.front().second.darts[0]) != s.x0) throw MapError("first frontier does not reach x_0");
  if (found.back().first != around.size() - 1) throw MapError("last frontier is not the left boundary");
  for (auto& [pos, f] : found) out.frontiers.push_back(std::move(f));
  out.a_sequence.push_back(2);
  for (std::size_t i = 1; i < out.frontiers.size(); ++i) out.a_sequence.push_back(out.frontiers[i].length);
  if ((out.a_sequence.back() == 1) != line.ends_through_boundary) {
    throw MapError("last frontier length disagrees with the end of the dividing line");
  }

  // Round one: boundary, line, geodesics P_1..P_p and frontiers.
  std::vector<int> cuts(s.boundary.begin(), s.boundary.end());
  cuts.insert(cuts.end(), line.darts.begin(), line.darts.end());
  for (int i = 1; i <= line.p; ++i) {
    const auto path = leftmost_geodesic(m, topo, dist, line.down_dart(i));
    cuts.insert(cuts.end(), path.begin(), path.end());
  }
  for (const auto& f : out.frontiers) cuts.insert(cuts.end(), f.darts.begin(), f.darts.end());
  const CutResult cut = cut_edges(m, cuts);

  const int first_edge = out.frontiers.front().darts[0];
  out.leading_bundle_trivial = first_edge == m.root;
  std::vector<int> roots{cut.right_copy(m.root)};
  if (!out.leading_bundle_trivial) roots.push_back(cut.left_copy(m.root));
  const std::size_t block_base = roots.size();
  for (std::size_t i = 0; i + 1 < out.frontiers.size(); ++i) roots.push_back(cut.left_copy(out.frontiers[i].darts[0]));
  const std::size_t upper_base = roots.size();
  for (int i = 1; i <= line.p; ++i) roots.push_back(cut.left_copy(m.alpha[line.up_dart(i)]));
  std::vector<int> comp;
  const int components = component_ids(cut.map, comp);
  std::set<int> distinct;
  for (int r : roots) distinct.insert(comp[r]);
  if (distinct.size() != roots.size() || components != static_cast<int>(roots.size())) {
    throw MapError("cuts produce " + std::to_string(components) + " pieces, expected " + std::to_string(roots.size()));
  }

  int faces = 0;
  if (!out.leading_bundle_trivial) {
    const SliceView b = make_slice_view(piece(cut, roots[1]).map);
    if (!validate_slice(b) || b.ell != 1) throw MapError("leading bundle is not a bundle");
    out.leading_bundle_faces = b.topo.faces - 1;
    faces += out.leading_bundle_faces;
  }
  for (std::size_t i = upper_base; i < roots.size(); ++i) {
    SliceView u = make_slice_view(piece(cut, roots[i]).map);
    if (const auto check = validate_slice(u); !check) throw MapError("upper slice invalid: " + check.reason);
    if (u.ell < 2 || u.ell > ell - 1) throw MapError("upper slice with ell' = " + std::to_string(u.ell));
    faces += u.topo.faces - 1;
    out.upper_slices.push_back(std::move(u));
  }

  // Round two: strip the bundles along each block's left frontier.
  int total_up = 0;
  for (std::size_t b = 0; b + 1 < out.frontiers.size(); ++b) {
    const Frontier& right = out.frontiers[b];
    const Frontier& left = out.frontiers[b + 1];
    Block blk;
    blk.right = right.length;
    blk.left = left.length;
    const Piece B = piece(cut, roots[block_base + b]);
    const auto walk = boundary_walk(B.map);
    const auto len = walk.size();
    const auto ar = static_cast<std::size_t>(blk.right), al = static_cast<std::size_t>(blk.left);
    if (len < ar + al) throw MapError("block boundary too short");
    for (std::size_t j = 0; j < ar; ++j) {
      if (B.source[walk[j]] != right.darts[j]) throw MapError("block does not start along its right frontier");
    }
    for (std::size_t j = 0; j < al; ++j) {
      if (B.source[walk[len - 1 - j]] != m.alpha[left.darts[j]]) throw MapError("block does not end along its left frontier");
    }
    for (std::size_t j = ar; j + al < len; ++j) {
      if (!is_line_dart[B.source[walk[j]]]) throw MapError("block boundary leaves the dividing line");
    }

    const MapTopology bt(B.map);
    const int lambda1 = B.map.alpha[walk[len - 1]];
    int r1 = -1;
    for (int d : orbit(B.map.sigma, B.map.root)) {
      if (d != B.map.root && bt.target(B.map, d) == bt.target(B.map, lambda1)) {
        r1 = d;
        break;
      }
    }
    std::vector<int> strip(walk.begin(), walk.end());
    std::vector<int> bundle_roots;
    if (r1 != lambda1) {
      strip.push_back(r1);
      bundle_roots.push_back(r1);
    }
    if (al == 2) {
      const int lambda2 = B.map.alpha[walk[len - 2]];
      int r2 = -1;
      for (int d : orbit(B.map.sigma, B.map.alpha[lambda1])) {
        if (d != B.map.alpha[lambda1] && bt.target(B.map, d) == bt.target(B.map, lambda2)) {
          r2 = d;
          break;
        }
      }
      if (r2 != lambda2) {
        strip.push_back(r2);
        bundle_roots.push_back(r2);
      }
    }
    const CutResult cut2 = cut_edges(B.map, strip);
    for (int r : bundle_roots) {
      const SliceView bundle = make_slice_view(extract_component(cut2.map, cut2.left_copy(r)));
      if (!validate_slice(bundle) || bundle.ell != 1) throw MapError("stripped piece is not a bundle");
      blk.bundle_faces += bundle.topo.faces - 1;
      ++blk.nontrivial_bundles;
    }
    std::vector<int> old;
    blk.core = extract_component(cut2.map, cut2.left_copy(B.map.root), &old);
    const auto core_walk = boundary_walk(blk.core);
    blk.half_boundary = static_cast<int>(core_walk.size()) / 2;
    if (const std::string why = property2_violation(blk.core); !why.empty()) throw MapError("Property 2: " + why);
    for (std::size_t j = ar; j + al < core_walk.size(); ++j) {
      const int src = B.source[cut2.source[old[core_walk[j]]]];
      if (!is_line_dart[src]) throw MapError("core boundary leaves the dividing line");
      if (line_index[src] % 2 == 1) ++blk.up_steps;
    }
    if (blk.up_steps != blk.half_boundary - blk.left) throw MapError("core boundary length disagrees with its line steps");
    blk.core_faces = inner_faces(blk.core);
    faces += blk.core_faces + blk.bundle_faces;
    total_up += blk.up_steps;
    out.blocks.push_back(std::move(blk));
  }
  if (total_up != line.p) throw MapError("line steps v -> x not shared out among blocks");
  if (faces != topo.faces - 1) throw MapError("faces not conserved by the decomposition");
  return out;
}

}  // namespace qp::maps
