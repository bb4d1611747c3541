#include "mkp/red_faces.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mkp {

RedStructure::RedStructure(const Planarization& p, const Coloring& coloring) : p_(p), coloring_(coloring) {
  const TopologicalDrawing& d = p.drawing();
  const int F = p.face_count();

  std::vector<int> parent(F);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < p.segment_count(); ++s)
    if (!is_red(p.segment(s).parent)) parent[find(p.face_of(2 * s))] = find(p.face_of(2 * s + 1));

  std::vector<int> index_of(F, -1);
  faces_.class_of.assign(F, -1);
  for (int f = 0; f < F; ++f) {
    int root = find(f);
    if (index_of[root] < 0) {
      index_of[root] = faces_.count();
      faces_.members.emplace_back();
    }
    faces_.class_of[f] = index_of[root];
    faces_.members[index_of[root]].push_back(f);
  }
  const int R = faces_.count();
  faces_.degree.assign(R, 0);
  faces_.isolated.assign(R, {});
  faces_.green_inside.assign(R, {});

  std::vector<std::set<EdgeId>> green(R);
  for (int s = 0; s < p.segment_count(); ++s)
    if (!is_red(p.segment(s).parent)) green[faces_.class_of[p.face_of(2 * s)]].insert(p.segment(s).parent);
  for (int r = 0; r < R; ++r) faces_.green_inside[r].assign(green[r].begin(), green[r].end());

  // Red rotation per vertex.
  std::vector<std::vector<EdgeId>> red_rot(d.n());
  for (VertexId v = 0; v < d.n(); ++v)
    for (EdgeId e : d.rotation[v])
      if (is_red(e)) red_rot[v].push_back(e);

  auto head = [&](RedDart x) { return x.forward ? d.graph.edge(x.edge).v : d.graph.edge(x.edge).u; };
  auto next = [&](RedDart x) {
    VertexId w = head(x);
    const auto& rot = red_rot[w];
    auto it = std::find(rot.begin(), rot.end(), x.edge);
    EdgeId e2 = rot[(it - rot.begin() + 1) % rot.size()];
    return RedDart{e2, d.graph.edge(e2).u == w};
  };
  auto left_face = [&](RedDart x) {
    const auto& segs = p.segments_of(x.edge);
    return x.forward ? p.face_of(2 * segs.front()) : p.face_of(2 * segs.back() + 1);
  };

  dart_walk_.assign(d.m(), std::vector<int>(2, -1));
  dart_index_.assign(d.m(), std::vector<int>(2, -1));
  for (EdgeId e = 0; e < d.m(); ++e) {
    if (!is_red(e)) continue;
    for (bool fwd : {true, false}) {
      if (dart_walk_[e][fwd] >= 0) continue;
      int w = static_cast<int>(faces_.walks.size());
      faces_.walks.emplace_back();
      faces_.walk_class.push_back(faces_.class_of[left_face({e, fwd})]);
      for (RedDart x{e, fwd}; dart_walk_[x.edge][x.forward] < 0; x = next(x)) {
        dart_walk_[x.edge][x.forward] = w;
        dart_index_[x.edge][x.forward] = static_cast<int>(faces_.walks[w].size());
        faces_.walks[w].push_back(x);
      }
      faces_.degree[faces_.walk_class[w]] += static_cast<int>(faces_.walks[w].size());
    }
  }
  for (VertexId v = 0; v < d.n(); ++v) {
    if (!red_rot[v].empty() || d.rotation[v].empty()) continue;
    int r = faces_.class_of[p.face_of(p.dart_from(v, d.rotation[v].front()))];
    faces_.isolated[r].push_back(v);
    ++faces_.degree[r];
  }
}

int RedStructure::walk_of(RedDart x) const { return dart_walk_[x.edge][x.forward]; }

RedCorner RedStructure::corner(Dart a) const {
  const TopologicalDrawing& d = p_.drawing();
  VertexId w = p_.head(a);
  const auto& rot = d.rotation[w];
  int i = static_cast<int>(std::find(rot.begin(), rot.end(), p_.parent(a)) - rot.begin());
  const int deg = static_cast<int>(rot.size());
  for (int step = 0; step < deg; ++step) {
    EdgeId e = rot[((i - step) % deg + deg) % deg];
    if (!is_red(e)) continue;
    RedDart arriving{e, d.graph.edge(e).v == w};
    return {walk_of(arriving), dart_index_[arriving.edge][arriving.forward]};
  }
  return {};
}

}  // namespace mkp
