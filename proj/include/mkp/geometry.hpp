#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

struct Point {
  std::int64_t x = 0, y = 0;
};

struct StraightLineInput {
  std::vector<std::string> vertex_names;  // empty: use "0", "1", ...
  std::vector<Point> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> edge_names;  // empty: use "e0", "e1", ...
};

/// Exact topological drawing of straight segments (y axis up, coordinates below 2^28).
/// Throws Error("degenerate-geometry") on collinear overlaps, vertices on edges,
/// or three segments through one point.
TopologicalDrawing straight_line_drawing(const StraightLineInput& input);

/// Exact test for proper crossing of segments ab and cd (interiors meet in one point).
bool segments_cross(Point a, Point b, Point c, Point d);

}  // namespace mkp
