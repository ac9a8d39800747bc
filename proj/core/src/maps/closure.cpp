#include "qp/maps/closure.hpp"

#include <algorithm>
#include <string>

namespace qp::maps {

CombinatorialMap cvs_closure(const LabeledPlaneTree& tree) {
  if (!tree.well_labeled()) throw MapError("closure needs a well-labeled tree");
  const int n = tree.edge_count();
  const int corners = 2 * n;
  // Tree dart ids: edge to child c (c >= 1) has down dart 2(c-1), up dart 2(c-1)+1.
  auto down = [](int c) { return 2 * (c - 1); };
  auto up = [](int c) { return 2 * (c - 1) + 1; };
  std::vector<int> origin(static_cast<std::size_t>(corners));
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) {
    auto& rot = rotation[static_cast<std::size_t>(v)];
    if (v > 0) rot.push_back(up(v));
    for (int c : tree.children[static_cast<std::size_t>(v)]) rot.push_back(down(c));
  }
  std::vector<int> tree_sigma(static_cast<std::size_t>(corners)), tree_alpha(static_cast<std::size_t>(corners));
  for (int v = 0; v <= n; ++v) {
    const auto& rot = rotation[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      tree_sigma[rot[i]] = rot[(i + 1) % rot.size()];
      origin[rot[i]] = v;
    }
  }
  for (int c = 1; c <= n; ++c) {
    tree_alpha[down(c)] = up(c);
    tree_alpha[up(c)] = down(c);
  }

  // Contour d_0 .. d_{2n-1}; corner k sits just before d_k.
  std::vector<int> contour(static_cast<std::size_t>(corners));
  std::vector<int> corner_of_dart(static_cast<std::size_t>(corners));
  contour[0] = rotation[0].front();
  for (int k = 1; k < corners; ++k) contour[k] = tree_sigma[tree_alpha[contour[k - 1]]];
  for (int k = 0; k < corners; ++k) corner_of_dart[contour[k]] = k;
  std::vector<int> label(static_cast<std::size_t>(corners));
  for (int k = 0; k < corners; ++k) label[k] = tree.labels[static_cast<std::size_t>(origin[contour[k]])];

  // Successor corner, or -1 for the added vertex.
  std::vector<int> succ(static_cast<std::size_t>(corners), -1);
  for (int k = 0; k < corners; ++k) {
    if (label[k] == 1) continue;
    for (int s = 1; s < corners; ++s) {
      const int j = (k + s) % corners;
      if (label[j] == label[k] - 1) {
        succ[k] = j;
        break;
      }
    }
    if (succ[k] < 0) throw MapError("closure: corner without successor");
  }

  // Chord from corner k: out dart at the tree vertex, in dart at the target.
  // The tree edges are dropped; only chords remain.
  auto out_dart = [](int k) { return 2 * k; };
  auto in_dart = [](int k) { return 2 * k + 1; };
  const int total = 2 * corners;
  CombinatorialMap m;
  m.alpha.assign(static_cast<std::size_t>(total), -1);
  m.sigma.assign(static_cast<std::size_t>(total), -1);
  for (int k = 0; k < corners; ++k) {
    m.alpha[out_dart(k)] = in_dart(k);
    m.alpha[in_dart(k)] = out_dart(k);
  }
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(corners));
  std::vector<int> to_pointed;
  for (int k = 0; k < corners; ++k) {
    if (succ[k] >= 0) {
      incoming[succ[k]].push_back(k);
    } else {
      to_pointed.push_back(k);
    }
  }
  auto link = [&](const std::vector<int>& rot) {
    for (std::size_t i = 0; i < rot.size(); ++i) m.sigma[rot[i]] = rot[(i + 1) % rot.size()];
  };
  for (int v = 0; v <= n; ++v) {
    std::vector<int> rot;
    for (int t : rotation[static_cast<std::size_t>(v)]) {
      const int k = corner_of_dart[t];
      auto in = incoming[k];
      // Sources closest behind the corner come first.
      std::sort(in.begin(), in.end(), [&](int a, int b) {
        return (k - a + corners) % corners < (k - b + corners) % corners;
      });
      for (int j : in) rot.push_back(in_dart(j));
      rot.push_back(out_dart(k));
    }
    link(rot);
  }
  std::vector<int> star;
  for (auto it = to_pointed.rbegin(); it != to_pointed.rend(); ++it) star.push_back(in_dart(*it));
  link(star);
  m.pointed = star.front();
  m.root = tree.epsilon > 0 ? out_dart(tree.root_corner) : in_dart(tree.root_corner);

  m.check_permutations();
  const MapTopology topo(m);
  if (topo.euler_characteristic(m) != 2) throw MapError("closure: result is not planar");
  for (int deg : topo.face_degrees()) {
    if (deg != 4) throw MapError("closure: face of degree " + std::to_string(deg));
  }
  const auto dist = bfs_distances(m, topo, topo.vertex_of[m.pointed]);
  for (int k = 0; k < corners; ++k) {
    if (dist[topo.vertex_of[out_dart(k)]] != label[k]) throw MapError("closure: label differs from distance");
  }
  return m;
}

}  // namespace qp::maps
