#pragma once

#include <optional>
#include <string>

#include "mkp/analysis.hpp"
#include "mkp/planarization.hpp"

namespace mkp {

struct RenderSpec {
  /// Outer face id; -1 picks a face of maximum degree (lowest id on ties).
  int outer_face = -1;
  int canvas = 1000;
  std::optional<EdgeClassification> classification;
  std::optional<Coloring> coloring;
};

struct RenderResult {
  std::string svg;
  int outer_face = 0;
  /// True when the barycentric layout was unusable and the radial fallback was drawn.
  bool degenerate = false;
};

/// Straight-line SVG of the planarization: one line per segment, real vertices as labeled disks.
RenderResult render_svg(const Planarization& p, const RenderSpec& spec = {});

}  // namespace mkp
