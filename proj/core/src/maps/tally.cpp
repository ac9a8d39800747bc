#include "qp/maps/tally.hpp"

#include <string>
#include <unordered_set>

#include "qp/maps/canonical.hpp"
#include "qp/maps/closure.hpp"
#include "qp/maps/labeled_tree.hpp"

namespace qp::maps {

std::uint64_t rooted_quadrangulation_count(int n) {
  // 2 * 3^n * Catalan(n) / (n + 2), exact in 64 bits for desk sizes.
  std::uint64_t cat = 1;
  for (int i = 0; i < n; ++i) cat = cat * 2 * (2 * i + 1) / (i + 2);
  std::uint64_t p3 = 1;
  for (int i = 0; i < n; ++i) p3 *= 3;
  return 2 * p3 * cat / static_cast<std::uint64_t>(n + 2);
}

void for_each_pointed_rooted(int n, const std::function<void(const CombinatorialMap&)>& visit) {
  std::unordered_set<std::string> seen;
  for_each_tree(n, [&](const LabeledPlaneTree& t) {
    CombinatorialMap m = cvs_closure(t);
    if (seen.insert(canonical_code(m)).second) visit(m);
  });
}

int root_distance(const CombinatorialMap& m) {
  const MapTopology topo(m);
  const auto dist = bfs_distances(m, topo, topo.vertex_of[m.pointed]);
  return dist[topo.vertex_of[m.root]];
}

TwoPointTally tally_two_point(int n) {
  TwoPointTally t;
  t.faces = n;
  std::unordered_set<std::string> pointed, rooted;
  for_each_tree(n, [&](const LabeledPlaneTree& tree) {
    ++t.generated;
    const CombinatorialMap m = cvs_closure(tree);
    rooted.insert(canonical_code(m, false));
    if (pointed.insert(canonical_code(m)).second) ++t.by_distance[root_distance(m)];
  });
  t.total = pointed.size();
  t.rooted_total = rooted.size();
  const std::uint64_t expect = rooted_quadrangulation_count(n);
  if (t.rooted_total != expect) {
    throw MapError("rooted count " + std::to_string(t.rooted_total) + " != " + std::to_string(expect));
  }
  if (t.total != expect * static_cast<std::uint64_t>(n + 2)) {
    throw MapError("pointed rooted count " + std::to_string(t.total) + " != " +
                   std::to_string(expect * static_cast<std::uint64_t>(n + 2)));
  }
  return t;
}

std::vector<TallyRow> compare_with_series(const TwoPointTally& tally, const SeriesFamily& G) {
  std::vector<TallyRow> rows;
  for (int k = 1; k <= tally.faces + 1; ++k) {
    TallyRow r;
    r.n = tally.faces;
    r.k = k;
    auto it = tally.by_distance.find(k);
    r.count = it == tally.by_distance.end() ? 0 : it->second;
    if (k <= G.max_index() && tally.faces <= G.order()) {
      const Rational& c = G[k][tally.faces];
      r.series_coefficient = c.get_str();
      r.match = c == Rational(static_cast<unsigned long>(r.count));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_tally_csv(std::ostream& os, const std::vector<TallyRow>& rows) {
  os << "n,k,count,series_coefficient,match\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.count << ',' << r.series_coefficient << ',' << (r.match ? "true" : "false")
       << '\n';
  }
}

}  // namespace qp::maps
