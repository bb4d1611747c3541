#pragma once

#include <string>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

/// Planarization node: real vertices first (same ids), then one node per crossing.
using NodeId = int;
/// Half-edge 2s runs along segment s in its parent's u-to-v direction, 2s+1 against it.
using Dart = int;

enum class NodeKind { real, crossing };

struct CrossingPoint {
  EdgeId e = 0, f = 0;  // e < f
  int pos_e = 0, pos_f = 0;
};

struct Segment {
  EdgeId parent = 0;
  int index = 0;  // position along the parent, 0 at its u end
  NodeId tail = 0, head = 0;
};

struct FaceRecord {
  int id = 0;
  /// Darts in walking order; the face lies to the left of each.
  std::vector<Dart> walk;
  int deg = 0, deg_r = 0, deg_c = 0;
  std::string label;
};

class Planarization {
public:
  explicit Planarization(TopologicalDrawing d);

  const TopologicalDrawing& drawing() const { return drawing_; }
  int real_count() const { return drawing_.n(); }
  int node_count() const { return real_count() + static_cast<int>(points_.size()); }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  int dart_count() const { return 2 * segment_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  bool is_real(NodeId x) const { return x < real_count(); }
  NodeKind kind(NodeId x) const { return is_real(x) ? NodeKind::real : NodeKind::crossing; }
  const CrossingPoint& crossing_at(NodeId x) const { return points_[x - real_count()]; }
  const std::vector<CrossingPoint>& crossing_points() const { return points_; }
  NodeId crossing_node(EdgeId e, int pos) const;

  static Dart twin(Dart d) { return d ^ 1; }
  static int segment_of(Dart d) { return d >> 1; }
  const Segment& segment(int s) const { return segments_[s]; }
  EdgeId parent(Dart d) const { return segments_[segment_of(d)].parent; }
  NodeId origin(Dart d) const;
  NodeId head(Dart d) const { return origin(twin(d)); }
  Dart next(Dart d) const { return next_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  /// Index of d in its face's walk.
  int walk_index(Dart d) const { return walk_index_[d]; }
  /// Outgoing darts in clockwise order.
  const std::vector<Dart>& rotation(NodeId x) const { return rotation_[x]; }
  /// Position of dart d in its origin's rotation.
  int rotation_index(Dart d) const { return rot_pos_[d]; }
  /// Face across crossing node head(a) from the corner that dart a enters (a in some face walk).
  int opposite_face(Dart a) const;
  /// Segment ids of edge e from its u end.
  const std::vector<int>& segments_of(EdgeId e) const { return edge_segments_[e]; }
  /// Dart leaving real vertex v along edge e.
  Dart dart_from(VertexId v, EdgeId e) const;
  /// Number of real endpoints of a segment (0, 1 or 2).
  int real_ends(int s) const;

  const std::vector<FaceRecord>& faces() const { return faces_; }
  const FaceRecord& face(int f) const { return faces_[f]; }
  int components() const { return components_; }

private:
  TopologicalDrawing drawing_;
  std::vector<CrossingPoint> points_;
  std::vector<Segment> segments_;
  std::vector<std::vector<int>> edge_segments_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> rot_pos_;
  std::vector<Dart> next_;
  std::vector<int> face_of_;
  std::vector<int> walk_index_;
  std::vector<FaceRecord> faces_;
  int components_ = 1;
};

/// Builds the planarization and checks V - E + F = 2 per component ("non-spherical" otherwise).
Planarization build_planarization(const TopologicalDrawing& d);

std::vector<FaceRecord> face_census(const Planarization& p);

std::string face_label(int deg_r, int deg);

}  // namespace mkp
