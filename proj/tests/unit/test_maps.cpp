#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "qp/baseline.hpp"
#include "qp/maps/canonical.hpp"
#include "qp/maps/closure.hpp"
#include "qp/maps/combinatorial_map.hpp"
#include "qp/maps/labeled_tree.hpp"
#include "qp/maps/tally.hpp"

using namespace qp::maps;

namespace {

// Path a - b - c: darts 0 (a->b), 1 (b->a), 2 (b->c), 3 (c->b).
CombinatorialMap path_map(int root) {
  CombinatorialMap m;
  m.alpha = {1, 0, 3, 2};
  m.sigma = {0, 2, 1, 3};
  m.root = root;
  return m;
}

}  // namespace

TEST(CombinatorialMap, PathHasOneQuadrangularFace) {
  const CombinatorialMap m = path_map(0);
  EXPECT_NO_THROW(m.check_permutations());
  const MapTopology t(m);
  EXPECT_EQ(t.vertices, 3);
  EXPECT_EQ(t.faces, 1);
  EXPECT_EQ(t.euler_characteristic(m), 2);
  EXPECT_EQ(t.face_degrees(), std::vector<int>{4});
  const auto d = bfs_distances(m, t, t.vertex_of[0]);
  EXPECT_EQ(d[static_cast<std::size_t>(t.vertex_of[3])], 2);
  EXPECT_TRUE(is_connected(m));
}

TEST(CombinatorialMap, RejectsBrokenPermutations) {
  CombinatorialMap m = path_map(0);
  m.alpha = {0, 1, 3, 2};
  EXPECT_THROW(m.check_permutations(), MapError);
  m = path_map(0);
  m.sigma = {0, 0, 1, 3};
  EXPECT_THROW(m.check_permutations(), MapError);
}

TEST(CombinatorialMap, OrbitsOfPhi) {
  const CombinatorialMap m = path_map(0);
  std::vector<int> phi(4);
  for (int d = 0; d < 4; ++d) phi[static_cast<std::size_t>(d)] = m.phi(d);
  EXPECT_EQ(orbit(phi, 0), (std::vector<int>{0, 2, 3, 1}));
  int count = 0;
  orbit_ids(m.sigma, &count);
  EXPECT_EQ(count, 3);
}

TEST(CombinatorialMap, CuttingOpensANewFace) {
  const CombinatorialMap m = path_map(0);
  const CutResult cut = cut_edges(m, {0});
  EXPECT_NO_THROW(cut.map.check_permutations());
  EXPECT_EQ(cut.map.dart_count(), 6);
  const MapTopology t(cut.map);
  EXPECT_EQ(t.euler_characteristic(cut.map), 2);
  EXPECT_EQ(t.faces, 2);
  EXPECT_EQ(cut.right_copy(2), cut.left_copy(2));
  EXPECT_NE(cut.left_copy(0), cut.right_copy(0));
}

TEST(Canonical, TwoRootingsOfThePath) {
  std::set<std::string> codes;
  for (int r = 0; r < 4; ++r) codes.insert(canonical_code(path_map(r), false));
  EXPECT_EQ(codes.size(), 2U);
  EXPECT_EQ(canonical_code(path_map(0), false), canonical_code(path_map(3), false));
}

TEST(Canonical, InvariantUnderRelabeling) {
  const CombinatorialMap m = path_map(1);
  const CombinatorialMap r = relabel(m, {3, 2, 0, 1});
  EXPECT_EQ(canonical_code(m, false), canonical_code(r, false));
}

TEST(LabeledTree, StreamLengths) {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t seen = 0;
    for_each_tree(n, [&](const LabeledPlaneTree& t) {
      EXPECT_TRUE(t.well_labeled());
      EXPECT_EQ(t.edge_count(), n);
      ++seen;
    });
    const std::uint64_t expect = oracle::binom(2 * n, n).get_ui() / static_cast<unsigned>(n + 1) *
                                 static_cast<std::uint64_t>(std::pow(3, n)) * 2;
    EXPECT_EQ(seen, expect);
    EXPECT_EQ(tree_stream_length(n), expect);
  }
  EXPECT_EQ(tree_stream_length(1), 6U);
  EXPECT_EQ(tree_stream_length(2), 36U);
}

TEST(Closure, OneEdgeTreeGivesThePath) {
  LabeledPlaneTree t;
  t.parent = {-1, 0};
  t.children = {{1}, {}};
  t.labels = {1, 1};
  const CombinatorialMap m = cvs_closure(t);
  const MapTopology topo(m);
  EXPECT_EQ(topo.vertices, 3);
  EXPECT_EQ(m.edge_count(), 2);
  EXPECT_EQ(topo.faces, 1);
  EXPECT_EQ(topo.face_degrees(), std::vector<int>{4});
}

TEST(Closure, TwoEdgeStream) {
  for_each_tree(2, [](const LabeledPlaneTree& t) {
    const CombinatorialMap m = cvs_closure(t);
    const MapTopology topo(m);
    EXPECT_EQ(topo.faces, 2);
    EXPECT_EQ(topo.vertices, 4);
    EXPECT_EQ(m.edge_count(), 4);
    EXPECT_GE(m.pointed, 0);
  });
}

TEST(Tally, OneFace) {
  const TwoPointTally t = tally_two_point(1);
  EXPECT_EQ(t.by_distance.at(0), 2U);
  EXPECT_EQ(t.by_distance.at(1), 3U);
  EXPECT_EQ(t.by_distance.at(2), 1U);
  EXPECT_EQ(t.total, 6U);
  EXPECT_EQ(t.rooted_total, 2U);
}

TEST(Tally, RootedCounts) {
  const std::uint64_t expect[] = {1, 2, 9, 54, 378};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(rooted_quadrangulation_count(n), expect[n]);
  EXPECT_EQ(tally_two_point(2).rooted_total, 9U);
}

TEST(Tally, MatchesIteratedSeries) {
  const auto R = oracle::r_family(7, 4);
  for (int n = 1; n <= 4; ++n) {
    const TwoPointTally t = tally_two_point(n);
    for (int k = 1; k <= n + 2; ++k) {
      mpq_class expect = R[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(n)] -
                         R[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
      const auto it = t.by_distance.find(k);
      const std::uint64_t got = it == t.by_distance.end() ? 0 : it->second;
      EXPECT_EQ(mpq_class(static_cast<unsigned long>(got)), expect) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Tally, CsvRows) {
  const auto G = qp::assemble_G(qp::solve_R_family(5, 2));
  std::ostringstream os;
  write_tally_csv(os, compare_with_series(tally_two_point(2), G));
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("n,k,count,series_coefficient,match\n", 0), 0U);
  EXPECT_EQ(csv.find("false"), std::string::npos);
}
