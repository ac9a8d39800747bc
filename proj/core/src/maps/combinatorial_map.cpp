#include "qp/maps/combinatorial_map.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qp::maps {

std::vector<int> CombinatorialMap::sigma_inverse() const {
  std::vector<int> inv(sigma.size());
  for (int d = 0; d < dart_count(); ++d) inv[static_cast<std::size_t>(sigma[d])] = d;
  return inv;
}

void CombinatorialMap::check_permutations() const {
  const int n = dart_count();
  if (static_cast<int>(sigma.size()) != n || n % 2 != 0) throw MapError("dart arrays disagree in size");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int d = 0; d < n; ++d) {
    const int a = alpha[d];
    if (a < 0 || a >= n || a == d || alpha[a] != d) throw MapError("alpha is not a fixed-point-free involution");
    const int s = sigma[d];
    if (s < 0 || s >= n || hit[s]) throw MapError("sigma is not a permutation");
    hit[s] = 1;
  }
  if (n > 0 && (root < 0 || root >= n)) throw MapError("root dart out of range");
  if (pointed >= n) throw MapError("pointed dart out of range");
}

std::vector<int> orbit_ids(const std::vector<int>& perm, int* count) {
  std::vector<int> id(perm.size(), -1);
  int next = 0;
  for (std::size_t d = 0; d < perm.size(); ++d) {
    if (id[d] >= 0) continue;
    for (int e = static_cast<int>(d); id[e] < 0; e = perm[e]) id[e] = next;
    ++next;
  }
  if (count) *count = next;
  return id;
}

std::vector<int> orbit(const std::vector<int>& perm, int d) {
  std::vector<int> out{d};
  for (int e = perm[d]; e != d; e = perm[e]) out.push_back(e);
  return out;
}

MapTopology::MapTopology(const CombinatorialMap& m) {
  vertex_of = orbit_ids(m.sigma, &vertices);
  std::vector<int> phi(m.alpha.size());
  for (int d = 0; d < m.dart_count(); ++d) phi[d] = m.phi(d);
  face_of = orbit_ids(phi, &faces);
}

std::vector<int> MapTopology::face_degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(faces), 0);
  for (int f : face_of) ++deg[f];
  return deg;
}

int component_ids(const CombinatorialMap& m, std::vector<int>& ids) {
  ids.assign(m.alpha.size(), -1);
  int next = 0;
  for (int s = 0; s < m.dart_count(); ++s) {
    if (ids[s] >= 0) continue;
    std::vector<int> stack{s};
    ids[s] = next;
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      for (int e : {m.alpha[d], m.sigma[d]}) {
        if (ids[e] < 0) {
          ids[e] = next;
          stack.push_back(e);
        }
      }
    }
    ++next;
  }
  return next;
}

std::vector<int> component_of(const CombinatorialMap& m, int d) {
  std::vector<char> seen(m.alpha.size(), 0);
  std::vector<int> out{d}, stack{d};
  seen[d] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int e : {m.alpha[x], m.sigma[x]}) {
      if (!seen[e]) {
        seen[e] = 1;
        out.push_back(e);
        stack.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const CombinatorialMap& m) {
  if (m.dart_count() == 0) return true;
  return static_cast<int>(component_of(m, 0).size()) == m.dart_count();
}

std::vector<int> bfs_distances(const CombinatorialMap& m, const MapTopology& topo, int source) {
  std::vector<std::vector<int>> darts_at(static_cast<std::size_t>(topo.vertices));
  for (int d = 0; d < m.dart_count(); ++d) darts_at[topo.vertex_of[d]].push_back(d);
  std::vector<int> dist(static_cast<std::size_t>(topo.vertices), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : darts_at[v]) {
      const int w = topo.target(m, d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

CutResult cut_edges(const CombinatorialMap& m, const std::vector<int>& cut) {
  const int n = m.dart_count();
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  for (int d : cut) {
    is_cut[d] = 1;
    is_cut[m.alpha[d]] = 1;
  }
  CutResult r;
  r.kept.assign(static_cast<std::size_t>(n), -1);
  r.cw.assign(static_cast<std::size_t>(n), -1);
  r.ccw.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int d = 0; d < n; ++d) {
    if (is_cut[d]) {
      r.cw[d] = next++;
      r.ccw[d] = next++;
      r.source.push_back(d);
      r.source.push_back(d);
    } else {
      r.kept[d] = next++;
      r.source.push_back(d);
    }
  }
  auto& out = r.map;
  out.alpha.assign(static_cast<std::size_t>(next), -1);
  out.sigma.assign(static_cast<std::size_t>(next), -1);
  for (int d = 0; d < n; ++d) {
    const int a = m.alpha[d];
    if (is_cut[d]) {
      out.alpha[r.cw[d]] = r.ccw[a];
      out.alpha[r.ccw[d]] = r.cw[a];
    } else {
      out.alpha[r.kept[d]] = r.kept[a];
    }
  }
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  for (int d0 = 0; d0 < n; ++d0) {
    if (done[d0]) continue;
    std::vector<int> rot = orbit(m.sigma, d0);
    for (int d : rot) done[d] = 1;
    const auto first_cut = std::find_if(rot.begin(), rot.end(), [&](int d) { return is_cut[d] != 0; });
    if (first_cut == rot.end()) {
      for (int d : rot) out.sigma[r.kept[d]] = r.kept[m.sigma[d]];
      continue;
    }
    std::rotate(rot.begin(), first_cut, rot.end());
    // Each arc between consecutive cut darts becomes its own vertex.
    std::size_t a = 0;
    while (a < rot.size()) {
      std::size_t b = a + 1;
      while (b < rot.size() && !is_cut[rot[b]]) ++b;
      const int closing = rot[b % rot.size()];
      std::vector<int> chain{r.ccw[rot[a]]};
      for (std::size_t i = a + 1; i < b; ++i) chain.push_back(r.kept[rot[i]]);
      chain.push_back(r.cw[closing]);
      for (std::size_t i = 0; i < chain.size(); ++i) out.sigma[chain[i]] = chain[(i + 1) % chain.size()];
      a = b;
    }
  }
  return r;
}

CombinatorialMap extract_component(const CombinatorialMap& m, int root, std::vector<int>* old_of_new) {
  const std::vector<int> darts = component_of(m, root);
  std::vector<int> index(m.alpha.size(), -1);
  for (std::size_t i = 0; i < darts.size(); ++i) index[darts[i]] = static_cast<int>(i);
  CombinatorialMap out;
  out.alpha.resize(darts.size());
  out.sigma.resize(darts.size());
  for (std::size_t i = 0; i < darts.size(); ++i) {
    out.alpha[i] = index[m.alpha[darts[i]]];
    out.sigma[i] = index[m.sigma[darts[i]]];
  }
  out.root = index[root];
  if (m.pointed >= 0 && index[m.pointed] >= 0) out.pointed = index[m.pointed];
  if (old_of_new) *old_of_new = darts;
  return out;
}

CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<int>& perm) {
  CombinatorialMap out;
  out.alpha.resize(m.alpha.size());
  out.sigma.resize(m.sigma.size());
  for (int d = 0; d < m.dart_count(); ++d) {
    out.alpha[perm[d]] = perm[m.alpha[d]];
    out.sigma[perm[d]] = perm[m.sigma[d]];
  }
  out.root = perm[m.root];
  out.pointed = m.pointed >= 0 ? perm[m.pointed] : -1;
  return out;
}

std::string describe(const CombinatorialMap& m) {
  const MapTopology topo(m);
  std::ostringstream os;
  os << "V=" << topo.vertices << " E=" << m.edge_count() << " F=" << topo.faces << " sigma=[";
  for (int d = 0; d < m.dart_count(); ++d) os << (d ? " " : "") << m.sigma[d];
  os << "] alpha=[";
  for (int d = 0; d < m.dart_count(); ++d) os << (d ? " " : "") << m.alpha[d];
  os << "] root=" << m.root;
  if (m.pointed >= 0) os << " pointed=" << m.pointed;
  return os.str();
}

}  // namespace qp::maps
