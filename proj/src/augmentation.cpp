#include "mkp/augmentation.hpp"

#include <algorithm>
#include <optional>

#include "mkp/planarization.hpp"
#include "mkp/red_faces.hpp"

namespace mkp {

namespace {

/// Inserts edge e into v's rotation right after edge `after`.
void insert_after(TopologicalDrawing& d, VertexId v, EdgeId after, EdgeId e) {
  auto& rot = d.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, e);
}

struct Chord {
  Dart at_u, at_v;  // darts entering the two corners
};

/// First Step 1 chord in (face id, vertex pair, occurrence) order.
std::optional<Chord> find_step1(const Planarization& p, const RedStructure& red) {
  const RedFaces& rf = red.faces();
  for (const FaceRecord& f : p.faces()) {
    if (rf.degree[rf.class_of[f.id]] < 4) continue;
    std::vector<std::pair<std::pair<VertexId, VertexId>, std::pair<int, int>>> candidates;
    for (int i = 0; i < f.deg; ++i) {
      NodeId wi = p.head(f.walk[i]);
      if (!p.is_real(wi)) continue;
      for (int j = i + 1; j < f.deg; ++j) {
        NodeId wj = p.head(f.walk[j]);
        if (!p.is_real(wj) || wi == wj) continue;
        candidates.push_back({std::minmax(wi, wj), {i, j}});
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [pair, idx] : candidates) {
      Dart a = f.walk[idx.first], b = f.walk[idx.second];
      RedCorner ca = red.corner(a), cb = red.corner(b);
      bool ok = true;
      if (!ca.isolated() && !cb.isolated() && ca.walk == cb.walk) {
        int len = static_cast<int>(rf.walks[ca.walk].size());
        int dist = ((cb.index - ca.index) % len + len) % len;
        ok = dist >= 2 && dist <= len - 2;
      }
      if (ok) return Chord{a, b};
    }
  }
  return std::nullopt;
}

struct Diagonal {
  Dart at_u, at_v;  // corner darts in the two halves
  int segment;      // green segment crossed
};

/// Step 2: a red quadrilateral split by a single green segment.
std::optional<Diagonal> find_step2(const Planarization& p, const RedStructure& red) {
  const RedFaces& rf = red.faces();
  for (int r = 0; r < rf.count(); ++r) {
    if (rf.degree[r] < 4) continue;
    if (rf.degree[r] != 4 || rf.members[r].size() != 2 || rf.green_inside[r].size() != 1) continue;
    int p1 = rf.members[r][0], p2 = rf.members[r][1];
    int seg = -1, count = 0;
    for (int s = 0; s < p.segment_count(); ++s) {
      if (red.is_red(p.segment(s).parent)) continue;
      if (rf.class_of[p.face_of(2 * s)] != r) continue;
      ++count;
      seg = s;
    }
    if (count != 1) continue;
    std::vector<Dart> c1, c2;
    for (Dart d : p.face(p1).walk)
      if (p.is_real(p.head(d))) c1.push_back(d);
    for (Dart d : p.face(p2).walk)
      if (p.is_real(p.head(d))) c2.push_back(d);
    if (c1.size() != 2 || c2.size() != 2) continue;
    // Opposite corners are not joined by a red edge of the quadrilateral.
    std::optional<Diagonal> best;
    std::pair<VertexId, VertexId> best_key;
    for (Dart x : c1)
      for (Dart y : c2) {
        VertexId u = p.head(x), v = p.head(y);
        if (u == v) continue;
        bool adjacent = false;
        for (const RedDart& rd : rf.walks[red.corner(x).walk]) {
          const Edge& e = p.drawing().graph.edge(rd.edge);
          if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) adjacent = true;
        }
        if (adjacent) continue;
        std::pair<VertexId, VertexId> key = std::minmax(u, v);
        if (!best || key < best_key) {
          best = Diagonal{x, y, seg};
          best_key = key;
        }
      }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

AugmentResult augment_min1(const TopologicalDrawing& input) {
  AugmentResult out;
  out.coloring = red_green_coloring(input);
  out.drawing = input;
  TopologicalDrawing& d = out.drawing;
  d.expect = {};
  const int cap = 3 * input.n();

  for (;;) {
    Planarization p = build_planarization(d);
    RedStructure red(p, out.coloring);
    const RedFaces& rf = red.faces();
    bool open = std::any_of(rf.degree.begin(), rf.degree.end(), [](int deg) { return deg >= 4; });
    if (!open) break;
    if (static_cast<int>(out.added.size()) >= cap)
      throw Error("augmentation-stuck", "added edge ceiling of 3n reached");

    if (auto chord = find_step1(p, red)) {
      VertexId u = p.head(chord->at_u), v = p.head(chord->at_v);
      EdgeId e = d.graph.add_edge(fresh_edge_name(d.graph, "a"), u, v);
      insert_after(d, u, p.parent(chord->at_u), e);
      insert_after(d, v, p.parent(chord->at_v), e);
      d.crossings.emplace_back();
      out.coloring.color.push_back(Color::red);
      out.added.push_back(e);
      out.log.push_back("ADD " + d.graph.edge(e).name + " " + d.graph.vertex_name(u) + " " +
                        d.graph.vertex_name(v) + " step1");
      continue;
    }
    if (auto diag = find_step2(p, red)) {
      VertexId u = p.head(diag->at_u), v = p.head(diag->at_v);
      const Segment& s = p.segment(diag->segment);
      EdgeId g = s.parent;
      EdgeId e = d.graph.add_edge(fresh_edge_name(d.graph, "a"), u, v);
      insert_after(d, u, p.parent(diag->at_u), e);
      insert_after(d, v, p.parent(diag->at_v), e);
      // u's half lies on g's right when it is the face of the reversed dart.
      int u_face = p.face_of(diag->at_u);
      Sign on_g = u_face == p.face_of(2 * diag->segment + 1) ? Sign::plus : Sign::minus;
      d.crossings[g].insert(d.crossings[g].begin() + s.index, CrossingRecord{e, on_g});
      d.crossings.push_back({CrossingRecord{g, flip(on_g)}});
      out.coloring.color.push_back(Color::red);
      out.added.push_back(e);
      out.log.push_back("ADD " + d.graph.edge(e).name + " " + d.graph.vertex_name(u) + " " +
                        d.graph.vertex_name(v) + " step2 crosses " + d.graph.edge(g).name);
      continue;
    }
    throw Error("augmentation-stuck", "a red face of degree at least 4 admits neither step");
  }
  return out;
}

}  // namespace mkp
