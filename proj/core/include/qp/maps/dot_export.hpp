#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qp/maps/dividing_line.hpp"

namespace qp::maps {

struct DotStyle {
  std::string name = "map";
  std::vector<int> distances;    ///< per vertex; empty hides the annotation
  std::vector<int> highlighted;  ///< darts drawn in red
  int marked_vertex = -1;        ///< drawn as a double circle
};

/// Undirected multigraph in graphviz syntax. The root edge is drawn bold.
void write_dot(std::ostream& os, const CombinatorialMap& m, const DotStyle& style);

/// Pointed rooted map annotated with distances to the pointed vertex.
void write_pointed_dot(std::ostream& os, const CombinatorialMap& m, const std::string& name);

/// Slice annotated with distances to the apex; the line, if given, in red.
void write_slice_dot(std::ostream& os, const SliceView& s, const DividingLine* line, const std::string& name);

}  // namespace qp::maps
