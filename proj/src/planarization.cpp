#include "mkp/planarization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mkp {

std::string face_label(int deg_r, int deg) {
  return std::to_string(deg_r) + "-real " + std::to_string(deg) + "-gon";
}

Planarization::Planarization(TopologicalDrawing d) : drawing_(std::move(d)) {
  const MultiGraph& g = drawing_.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::map<std::pair<EdgeId, EdgeId>, int> point_of;
  for (EdgeId e = 0; e < m; ++e) {
    for (int i = 0; i < drawing_.crossing_count(e); ++i) {
      EdgeId f = drawing_.crossings[e][i].other;
      auto key = std::minmax(e, f);
      auto [it, fresh] = point_of.try_emplace(key, static_cast<int>(points_.size()));
      if (fresh) points_.push_back({key.first, key.second, 0, 0});
      CrossingPoint& cp = points_[it->second];
      (e == cp.e ? cp.pos_e : cp.pos_f) = i;
    }
  }

  edge_segments_.assign(m, {});
  for (EdgeId e = 0; e < m; ++e) {
    const auto& list = drawing_.crossings[e];
    NodeId prev = g.edge(e).u;
    for (int i = 0; i <= static_cast<int>(list.size()); ++i) {
      NodeId cur = i < static_cast<int>(list.size())
                       ? n + point_of.at(std::minmax(e, list[i].other))
                       : g.edge(e).v;
      edge_segments_[e].push_back(static_cast<int>(segments_.size()));
      segments_.push_back({e, i, prev, cur});
      prev = cur;
    }
  }

  rotation_.assign(node_count(), {});
  for (VertexId v = 0; v < n; ++v)
    for (EdgeId e : drawing_.rotation[v]) rotation_[v].push_back(dart_from(v, e));
  for (int c = 0; c < static_cast<int>(points_.size()); ++c) {
    const CrossingPoint& cp = points_[c];
    Dart e_out = 2 * edge_segments_[cp.e][cp.pos_e + 1];
    Dart e_in = 2 * edge_segments_[cp.e][cp.pos_e] + 1;
    Dart f_out = 2 * edge_segments_[cp.f][cp.pos_f + 1];
    Dart f_in = 2 * edge_segments_[cp.f][cp.pos_f] + 1;
    Sign s = drawing_.crossings[cp.e][cp.pos_e].sign;
    if (s == Sign::plus)
      rotation_[n + c] = {e_out, f_in, e_in, f_out};
    else
      rotation_[n + c] = {e_out, f_out, e_in, f_in};
  }

  rot_pos_.assign(dart_count(), -1);
  for (NodeId x = 0; x < node_count(); ++x)
    for (int i = 0; i < static_cast<int>(rotation_[x].size()); ++i) rot_pos_[rotation_[x][i]] = i;

  next_.assign(dart_count(), -1);
  for (Dart d = 0; d < dart_count(); ++d) {
    Dart t = twin(d);
    NodeId x = origin(t);
    const auto& rot = rotation_[x];
    next_[d] = rot[(rot_pos_[t] + 1) % rot.size()];
  }

  face_of_.assign(dart_count(), -1);
  walk_index_.assign(dart_count(), -1);
  for (Dart start = 0; start < dart_count(); ++start) {
    if (face_of_[start] != -1) continue;
    FaceRecord rec;
    rec.id = static_cast<int>(faces_.size());
    for (Dart d = start; face_of_[d] == -1; d = next_[d]) {
      face_of_[d] = rec.id;
      walk_index_[d] = static_cast<int>(rec.walk.size());
      rec.walk.push_back(d);
      if (is_real(head(d))) ++rec.deg_r;
      else ++rec.deg_c;
    }
    rec.deg = static_cast<int>(rec.walk.size());
    rec.label = face_label(rec.deg_r, rec.deg);
    faces_.push_back(std::move(rec));
  }
  // An isolated vertex (n = 1, m = 0) bounds a single face with no darts.
  if (segments_.empty() && n > 0) faces_.push_back({0, {}, 0, 0, 0, face_label(0, 0)});

  // Component count over the planarization nodes.
  std::vector<int> comp(node_count());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const Segment& s : segments_) comp[find(s.tail)] = find(s.head);
  components_ = 0;
  for (int x = 0; x < node_count(); ++x)
    if (find(x) == x) ++components_;
}

NodeId Planarization::crossing_node(EdgeId e, int pos) const {
  return segments_[edge_segments_[e][pos]].head;
}

NodeId Planarization::origin(Dart d) const {
  const Segment& s = segments_[segment_of(d)];
  return (d & 1) ? s.head : s.tail;
}

Dart Planarization::dart_from(VertexId v, EdgeId e) const {
  const Edge& edge = drawing_.graph.edge(e);
  if (edge.u == v) return 2 * edge_segments_[e].front();
  return 2 * edge_segments_[e].back() + 1;
}

int Planarization::opposite_face(Dart a) const {
  Dart t = twin(a);
  const auto& rot = rotation_[origin(t)];
  return face_of_[rot[(rot_pos_[t] + 3) % rot.size()]];
}

int Planarization::real_ends(int s) const {
  return (is_real(segments_[s].tail) ? 1 : 0) + (is_real(segments_[s].head) ? 1 : 0);
}

Planarization build_planarization(const TopologicalDrawing& d) {
  Planarization p(d);
  long long v = p.node_count();
  long long e = p.segment_count();
  long long f = p.face_count();
  if (v - e + f != 2LL * p.components())
    throw Error("non-spherical", "V - E + F = " + std::to_string(v - e + f) + " (expected " +
                                     std::to_string(2 * p.components()) + ")");
  return p;
}

std::vector<FaceRecord> face_census(const Planarization& p) { return p.faces(); }

}  // namespace mkp
