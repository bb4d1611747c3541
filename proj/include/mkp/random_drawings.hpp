#pragma once

#include <random>

#include "mkp/drawing.hpp"

namespace mkp {

/// Straight-line drawing on random grid points: a Euclidean spanning tree plus random chords.
/// Degenerate point sets and drawings with more than max_crossings crossings are redrawn.
TopologicalDrawing random_straight_line(std::mt19937& rng, int n, int extra_edges, int max_crossings = 40);

/// Greedy growth from a Euclidean spanning tree: random chords are kept while the drawing
/// stays min-k-planar and within max_crossings.
TopologicalDrawing random_min_k_planar(std::mt19937& rng, int n, int k, int tries, int max_crossings = 40);

}  // namespace mkp
