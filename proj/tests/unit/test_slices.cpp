#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <sstream>

#include "oracle.hpp"
#include "qp/maps/decomposition.hpp"
#include "qp/maps/dot_export.hpp"
#include "qp/maps/tally.hpp"

using namespace qp::maps;

namespace {

// Pointed rooted maps whose root edge steps towards the pointed vertex.
void for_each_slice(int n, const std::function<void(const CombinatorialMap&, int)>& visit) {
  for_each_pointed_rooted(n, [&](const CombinatorialMap& m) {
    const int ell = root_distance(m);
    if (ell < 1) return;
    const MapTopology t(m);
    const auto d = bfs_distances(m, t, t.vertex_of[m.pointed]);
    if (d[static_cast<std::size_t>(t.target(m, m.root))] == ell - 1) visit(m, ell);
  });
}

}  // namespace

TEST(Slice, OneFaceHasTwoTrivialSlices) {
  int count = 0;
  for_each_slice(1, [&](const CombinatorialMap& m, int ell) {
    if (ell != 1) return;
    const SliceView s = extract_slice(m);
    EXPECT_TRUE(validate_slice(s).valid);
    EXPECT_EQ(s.ell, 1);
    ++count;
  });
  EXPECT_EQ(count, 2);
}

TEST(Slice, CountsFollowDistanceClasses) {
  const auto R = oracle::r_family(6, 4);
  for (int n = 1; n <= 4; ++n) {
    std::map<int, long> by_ell;
    for_each_slice(n, [&](const CombinatorialMap& m, int ell) {
      const SliceView s = extract_slice(m);
      const SliceCheck c = validate_slice(s);
      EXPECT_TRUE(c.valid) << c.reason;
      EXPECT_EQ(s.ell, ell);
      EXPECT_EQ(static_cast<int>(s.boundary.size()), 2 * ell);
      ++by_ell[ell];
    });
    for (int ell = 1; ell <= n + 1; ++ell) {
      const auto& hi = R[static_cast<std::size_t>(ell)];
      const mpq_class expect = ell == 1 ? hi[static_cast<std::size_t>(n)] : hi[static_cast<std::size_t>(n)] - R[static_cast<std::size_t>(ell - 1)][static_cast<std::size_t>(n)];
      EXPECT_EQ(mpq_class(by_ell[ell]), expect) << "n=" << n << " ell=" << ell;
    }
  }
}

TEST(Slice, RightmostCutBreaksUniqueness) {
  std::map<std::string, int> reasons;
  for_each_slice(2, [&](const CombinatorialMap& m, int) {
    const SliceCheck c = validate_slice(cut_along_rightmost(m));
    if (!c.valid) ++reasons[c.reason];
  });
  EXPECT_GT(reasons["right boundary not unique"], 0);
}

TEST(Slice, ValidatorRejectsAClosedMap) {
  CombinatorialMap m;
  m.alpha = {1, 0, 3, 2};
  m.sigma = {0, 2, 1, 3};
  m.root = 0;
  // The path map read as a slice has a degree-4 boundary and no inner face.
  const SliceView s = make_slice_view(m);
  EXPECT_EQ(s.ell, 2);
  EXPECT_FALSE(validate_slice(s).valid);
}

TEST(DividingLine, AlternatesAndSeparates) {
  int through_boundary = 0, total = 0;
  for (int n = 2; n <= 4; ++n) {
    for_each_slice(n, [&](const CombinatorialMap& m, int ell) {
      if (ell < 2) return;
      const SliceView s = extract_slice(m);
      const DividingLine line = dividing_line(s);
      ASSERT_EQ(line.vertices.size(), static_cast<std::size_t>(2 * line.p + 2));
      for (int i = 0; i <= line.p; ++i) {
        EXPECT_EQ(s.dist_to_apex[static_cast<std::size_t>(line.x(i))], ell - 1);
        EXPECT_EQ(s.dist_to_apex[static_cast<std::size_t>(line.v(i))], ell - 2);
      }
      EXPECT_EQ(line.x(0), s.x0);
      EXPECT_TRUE(s.on_boundary(line.v(line.p)));
      EXPECT_EQ(property1_violation(s, line), "");
      if (ell == 2) EXPECT_EQ(line.p, 0);
      through_boundary += line.ends_through_boundary;
      ++total;
    });
  }
  EXPECT_GT(total, 0);
  EXPECT_GT(through_boundary, 0);
}

TEST(Decomposition, BlocksAndUpperSlices) {
  for (int n = 2; n <= 4; ++n) {
    for_each_slice(n, [&](const CombinatorialMap& m, int ell) {
      if (ell < 2) return;
      const SliceView s = extract_slice(m);
      const DividingLine line = dividing_line(s);
      const BlockDecomposition d = decompose(s, line);
      ASSERT_FALSE(d.a_sequence.empty());
      EXPECT_EQ(d.a_sequence.front(), 2);
      EXPECT_EQ(d.blocks.size() + 1, d.a_sequence.size());
      EXPECT_EQ(static_cast<int>(d.upper_slices.size()), line.p);
      int faces = d.leading_bundle_faces;
      for (const auto& b : d.blocks) {
        EXPECT_EQ(property2_violation(b.core), "");
        faces += b.core_faces + b.bundle_faces;
      }
      for (const auto& u : d.upper_slices) {
        EXPECT_TRUE(validate_slice(u).valid);
        EXPECT_LT(u.ell, ell);
        faces += u.topo.faces - 1;
      }
      EXPECT_EQ(faces, n);
    });
  }
}

TEST(DotExport, WellFormedGraph) {
  for_each_slice(2, [&](const CombinatorialMap& m, int ell) {
    std::ostringstream pointed, slice;
    write_pointed_dot(pointed, m, "m");
    const SliceView s = extract_slice(m);
    if (ell >= 2) {
      const DividingLine line = dividing_line(s);
      write_slice_dot(slice, s, &line, "s");
      EXPECT_NE(slice.str().find("red"), std::string::npos);
    }
    const std::string text = pointed.str();
    EXPECT_EQ(text.rfind("graph \"m\" {", 0), 0U);
    EXPECT_EQ(text.back(), '\n');
    std::size_t edges = 0;
    for (std::size_t p = text.find("--"); p != std::string::npos; p = text.find("--", p + 2)) ++edges;
    EXPECT_EQ(edges, static_cast<std::size_t>(m.edge_count()));
    EXPECT_NE(text.find("bold"), std::string::npos);
  });
}
