#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mkp/drawing.hpp"
#include "mkp/geometry.hpp"

namespace mkp::test {

struct CorpusEntry {
  std::string name;
  TopologicalDrawing drawing;
  /// Budget the drawing is built for; 0 for unconstrained random drawings.
  int k = 0;
};

/// Every generator family over its test range (t <= 20, h <= 10, barrels to n <= 50).
std::vector<CorpusEntry> generator_corpus();
/// Bundled figure drawings and the pentagram.
std::vector<CorpusEntry> asset_corpus();
/// Random straight-line drawings with at most 40 crossings.
std::vector<CorpusEntry> random_corpus(int count, std::uint32_t seed);
/// Random greedy min-1-planar straight-line drawings.
std::vector<CorpusEntry> random_min1_corpus(int count, std::uint32_t seed);

/// Face count from Euler's formula, per connected component of the planarization graph.
int euler_face_count(const TopologicalDrawing& d);

/// Exhaustive search over all owner maps: can every crossing be charged to one of its edges
/// so that no edge owns more than k crossings?
bool brute_force_gap(const TopologicalDrawing& d, int k);

/// Crossing pairs of a straight-line input, by pairwise segment tests.
int brute_force_crossings(const StraightLineInput& in);

/// Per-edge crossing counts of chords inside a convex polygon, by index interleaving.
std::vector<int> interleaving_counts(const std::vector<std::pair<int, int>>& chords);

/// Scratch directory for files written by tests.
std::string scratch_dir();

/// X: two edges crossing once, on four vertices.
TopologicalDrawing x_drawing();

}  // namespace mkp::test
