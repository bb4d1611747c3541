#pragma once

#include <string>
#include <vector>

#include "mkp/analysis.hpp"
#include "mkp/drawing.hpp"

namespace mkp {

struct AugmentResult {
  TopologicalDrawing drawing;
  /// Ids of the edges added, in insertion order (all ids above the input's edges).
  std::vector<EdgeId> added;
  /// Colors for the output: input colors preserved, added edges red.
  Coloring coloring;
  /// One "ADD <eid> <u> <v> step1|step2 [crosses <eid>]" line per added edge.
  std::vector<std::string> log;
};

/// Adds crossing-free red chords, then quadrilateral diagonals, until every red face is a triangle.
/// Throws "not-min-1-planar" or "augmentation-stuck".
AugmentResult augment_min1(const TopologicalDrawing& d);

}  // namespace mkp
