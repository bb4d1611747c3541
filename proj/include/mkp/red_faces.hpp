#pragma once

#include <vector>

#include "mkp/analysis.hpp"
#include "mkp/planarization.hpp"

namespace mkp {

/// A red dart runs along a red edge, forward meaning from its u end.
struct RedDart {
  EdgeId edge = 0;
  bool forward = true;
  bool operator==(const RedDart&) const = default;
};

/// Faces of the red subgraph, as classes of planarization faces merged across green segments.
struct RedFaces {
  std::vector<int> class_of;                 // planarization face -> red face
  std::vector<std::vector<int>> members;     // red face -> planarization faces
  std::vector<int> degree;                   // red darts plus isolated red vertices
  std::vector<std::vector<RedDart>> walks;   // boundary walks of the red subgraph
  std::vector<int> walk_class;               // red face of each walk
  std::vector<std::vector<VertexId>> isolated;  // red-isolated vertices per red face
  std::vector<std::vector<EdgeId>> green_inside;  // distinct green edges crossing each red face

  int count() const { return static_cast<int>(members.size()); }
};

/// Red corner at a real vertex: walk and index of the red dart arriving there, or isolated.
struct RedCorner {
  int walk = -1;
  int index = -1;
  bool isolated() const { return walk < 0; }
};

class RedStructure {
public:
  RedStructure(const Planarization& p, const Coloring& coloring);

  const RedFaces& faces() const { return faces_; }
  /// Red corner containing the planarization corner entered by dart a (head(a) real).
  RedCorner corner(Dart a) const;
  bool is_red(EdgeId e) const { return coloring_.color[e] == Color::red; }

private:
  int walk_of(RedDart d) const;

  const Planarization& p_;
  const Coloring& coloring_;
  RedFaces faces_;
  std::vector<std::vector<int>> dart_walk_;   // [edge][forward] -> walk
  std::vector<std::vector<int>> dart_index_;  // [edge][forward] -> index in walk
};

}  // namespace mkp
