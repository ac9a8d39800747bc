#pragma once

#include <string>
#include <vector>

#include "qp/maps/slice.hpp"

namespace qp::maps {

/// Path x_0, v_0, x_1, v_1, ..., x_p, v_p inside a slice, with x_i at distance
/// ell-1 and v_i at distance ell-2 from the apex. Walking along it, the part
/// containing the root vertex lies on the left.
struct DividingLine {
  std::vector<int> vertices;  ///< 2p+2 vertex ids of the slice topology
  std::vector<int> darts;     ///< 2p+1 darts, darts[j] from vertices[j] to vertices[j+1]
  int p = 0;
  bool ends_through_boundary = false;  ///< x_p lies on the left boundary

  int x(int i) const { return vertices[static_cast<std::size_t>(2 * i)]; }
  int v(int i) const { return vertices[static_cast<std::size_t>(2 * i + 1)]; }
  /// Dart x_i -> v_i.
  int down_dart(int i) const { return darts[static_cast<std::size_t>(2 * i)]; }
  /// Dart v_{i-1} -> x_i, for i >= 1.
  int up_dart(int i) const { return darts[static_cast<std::size_t>(2 * i - 1)]; }
};

/// Builds the line of a slice with ell >= 2: the single right-boundary edge
/// when ell = 2, otherwise successive leftmost two-step paths from v_0 until
/// the left boundary is reached. Leftmost means lexicographically first in the
/// clockwise scans at v_i (after the reversal of the arrival dart, skipping
/// x_i) and at x_{i+1} (skipping v_i). Checks simplicity, alternation,
/// termination and Property 1; throws MapError on any failure.
DividingLine dividing_line(const SliceView& s);

/// Faces of the part below the line, flood-filled from the inner face next to
/// the root edge without crossing line edges. Indexed by face id.
std::vector<char> lower_faces(const SliceView& s, const DividingLine& line);

/// Empty when both clauses of Property 1 hold, otherwise the violated clause.
std::string property1_violation(const SliceView& s, const DividingLine& line);

}  // namespace qp::maps
