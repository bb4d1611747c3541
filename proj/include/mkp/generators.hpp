#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

/// Builds a crossing-free drawing from a face list; faces are re-oriented consistently.
/// Edges are created in order of first appearance and named "e<k>".
TopologicalDrawing plane_from_faces(const std::vector<std::string>& vertex_names,
                                    std::vector<std::vector<VertexId>> faces);

/// Chords for one face, as pairs of walk positions (corner i is the origin of walk dart i).
using FillRule = std::function<std::vector<std::pair<int, int>>(const std::vector<VertexId>& corners)>;

/// Draws each face's chords straight inside a convex copy of the face. Chords are named "c<k>".
TopologicalDrawing fill_faces(const TopologicalDrawing& plane, const FillRule& rule);

TopologicalDrawing gen_optimal_1planar(int t);
TopologicalDrawing gen_optimal_2planar_dodeca();
/// Barrel pentagonalization with `rings` rings (n = 11 + 9 rings) and a pentagram per face.
TopologicalDrawing gen_optimal_2planar_barrel(int rings);
TopologicalDrawing gen_trunc_icosa_filled();
TopologicalDrawing gen_min3_chain(int h);
/// k = 1: pentagon tiling (reps 0 is the dodecahedron, reps r a barrel with r + 1 rings).
/// k = 2: hexagonal tube with `reps` rings (reps >= 1). k = 3: `reps` pole blocks (reps >= 1).
TopologicalDrawing gen_heavy_lower_bound(int k, int reps);

/// Plane bases, exposed for tests.
TopologicalDrawing dodecahedron();
TopologicalDrawing barrel_pentagonalization(int rings);
TopologicalDrawing truncated_icosahedron();
TopologicalDrawing pole_chains(int h);

struct FamilyInfo {
  std::string name;
  int k = 0;
  int default_size = 0;
  int min_size = 0;
  int max_size = 0;
  bool sized = true;
};

const std::vector<FamilyInfo>& generator_families();
/// Runs a family by name and stamps its EXPECT manifest. Throws "unknown-family" or "bad-size".
TopologicalDrawing generate(const std::string& family, int size);
/// Fills the EXPECT manifest from the drawing's measured counts at budget k.
void stamp_expectation(TopologicalDrawing& d, int k);

}  // namespace mkp
