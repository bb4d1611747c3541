#include "mkp/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mkp/analysis.hpp"
#include "mkp/assets.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planarization.hpp"

namespace mkp {

namespace {

using Faces = std::vector<std::vector<VertexId>>;
using Chords = std::vector<std::pair<int, int>>;

/// Flips faces so every shared edge is traversed in opposite directions.
void orient_faces(Faces& faces) {
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_edge;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      VertexId a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
      by_edge[std::minmax(a, b)].push_back(f);
    }
  auto has_directed = [&](int f, VertexId a, VertexId b) {
    for (std::size_t i = 0; i < faces[f].size(); ++i)
      if (faces[f][i] == a && faces[f][(i + 1) % faces[f].size()] == b) return true;
    return false;
  };
  std::vector<char> done(faces.size(), 0);
  for (int root = 0; root < static_cast<int>(faces.size()); ++root) {
    if (done[root]) continue;
    done[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (std::size_t i = 0; i < faces[f].size(); ++i) {
        VertexId a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
        for (int g : by_edge[std::minmax(a, b)]) {
          if (g == f || done[g]) continue;
          if (has_directed(g, a, b)) std::reverse(faces[g].begin(), faces[g].end());
          done[g] = 1;
          q.push(g);
        }
      }
    }
  }
}

std::vector<std::string> numbered(int n, const std::string& prefix = "") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Faces icosahedron_faces() {
  Faces faces;
  auto up = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto lo = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, up(i), up(i + 1)});
    faces.push_back({up(i), lo(i), up(i + 1)});
    faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    faces.push_back({11, lo(i + 1), lo(i)});
  }
  orient_faces(faces);
  return faces;
}

/// Neighbours of v in cyclic order, read off consistently oriented triangles.
std::vector<VertexId> link_order(const Faces& tri, VertexId v) {
  std::map<VertexId, VertexId> succ;
  for (const auto& f : tri)
    for (int i = 0; i < 3; ++i)
      if (f[i] == v) succ[f[(i + 1) % 3]] = f[(i + 2) % 3];
  std::vector<VertexId> order{succ.begin()->first};
  while (order.size() < succ.size()) order.push_back(succ.at(order.back()));
  return order;
}

/// Number of chords crossing each chord in a convex polygon.
std::vector<int> interleave_counts(const Chords& chords) {
  auto inside = [](int a, int b, int x) { return std::min(a, b) < x && x < std::max(a, b); };
  std::vector<int> cr(chords.size(), 0);
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (inside(a, b, c) != inside(a, b, d)) {
        ++cr[i];
        ++cr[j];
      }
    }
  return cr;
}

Chords pentagram(int d) {
  Chords c;
  for (int i = 0; i < d; ++i) c.push_back({i, (i + 2) % d});
  return c;
}

// Thirteen diagonals of the pole octagon (corner 0 = u, 1..6 chain, 7 = v); 0-7 is the uv edge.
const Chords kOctagonMin3 = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4},
                             {1, 7}, {2, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}};
// Twelve diagonals with three chords above three crossings.
const Chords kOctagonHeavy3 = {{0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 5},
                               {1, 7}, {2, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}};
const Chords kPentagonHeavy1 = {{0, 2}, {0, 3}, {1, 4}};
const Chords kHexagonHeavy2 = {{0, 2}, {3, 5}, {1, 3}, {1, 4}, {1, 5}, {0, 4}, {2, 4}};

Chords trunc_hexagon() {
  Chords c = pentagram(6);
  c.push_back({0, 3});
  return c;
}

/// Octagon chords re-indexed onto a pole face walk that may run u, v, x6, ..., x1.
Chords pole_octagon(const std::vector<VertexId>& corners, VertexId u, const Chords& base) {
  const int d = static_cast<int>(corners.size());
  int iu = static_cast<int>(std::find(corners.begin(), corners.end(), u) - corners.begin());
  // Vertex 1 is v in pole_chains; the walk runs backwards when v follows u.
  bool forward = corners[(iu + 1) % d] != 1;
  auto pos = [&](int w) { return forward ? (iu + w) % d : ((iu - w) % d + d) % d; };
  Chords out;
  for (auto [a, b] : base) out.push_back({pos(a), pos(b)});
  return out;
}

/// Pole faces are the two octagons around each chain; only they get filled.
FillRule pole_rule(const Chords& base) {
  return [base](const std::vector<VertexId>& corners) {
    if (corners.size() != 8) return Chords{};
    return pole_octagon(corners, 0, base);
  };
}

int total_interleavings(const Chords& c) {
  int sum = 0;
  for (int x : interleave_counts(c)) sum += x;
  return sum / 2;
}

int heavy_interleavings(const Chords& c, int k) {
  auto cr = interleave_counts(c);
  return static_cast<int>(std::count_if(cr.begin(), cr.end(), [k](int x) { return x > k; }));
}

void set_expect(TopologicalDrawing& d, int n, int m, int crossings, int k, int heavy) {
  d.expect = {};
  d.expect.n = n;
  d.expect.m = m;
  d.expect.crossings = crossings;
  d.expect.heavy.emplace_back(k, heavy);
}

}  // namespace

TopologicalDrawing plane_from_faces(const std::vector<std::string>& names, Faces faces) {
  orient_faces(faces);
  TopologicalDrawing d;
  for (const auto& name : names) d.graph.add_vertex(name);
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_of;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      VertexId a = f[i], b = f[(i + 1) % f.size()];
      if (!edge_of.count(std::minmax(a, b)))
        edge_of[std::minmax(a, b)] = d.graph.add_edge("e" + std::to_string(d.graph.edge_count()), a, b);
    }
  // Face p -> v -> q lies left of both darts: clockwise after edge vp comes edge vq.
  std::vector<std::map<EdgeId, EdgeId>> succ(d.n());
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      VertexId p = f[(i + f.size() - 1) % f.size()], v = f[i], q = f[(i + 1) % f.size()];
      succ[v][edge_of.at(std::minmax(v, p))] = edge_of.at(std::minmax(v, q));
    }
  d.rotation.assign(d.n(), {});
  for (VertexId v = 0; v < d.n(); ++v) {
    if (succ[v].empty()) continue;
    EdgeId start = succ[v].begin()->first;
    for (EdgeId e = start;;) {
      d.rotation[v].push_back(e);
      e = succ[v].at(e);
      if (e == start) break;
    }
    if (d.rotation[v].size() != succ[v].size()) throw Error("bad-face-list", "faces around a vertex are not one cycle");
  }
  d.crossings.assign(d.m(), {});
  return d;
}

TopologicalDrawing fill_faces(const TopologicalDrawing& plane, const FillRule& rule) {
  Planarization p = build_planarization(plane);
  TopologicalDrawing out = plane;
  out.expect = {};
  // Blocks of new edges to insert clockwise after an anchor edge at a vertex.
  std::vector<std::map<EdgeId, std::vector<EdgeId>>> blocks(plane.n());
  int chord_count = 0;
  for (const FaceRecord& f : p.faces()) {
    std::vector<VertexId> corners;
    for (Dart d : f.walk) corners.push_back(p.origin(d));
    Chords chords = rule(corners);
    if (chords.empty()) continue;
    const int deg = static_cast<int>(corners.size());

    // Convex position on the parabola; retry with another spacing if three chords meet.
    TopologicalDrawing local;
    for (int attempt = 0;; ++attempt) {
      StraightLineInput in;
      for (int i = 0; i < deg; ++i) {
        std::int64_t x = static_cast<std::int64_t>(i) * (10 + attempt) + (i * i * (attempt + 3)) % 7;
        in.points.push_back({x, x * x});
      }
      for (auto [a, b] : chords) in.edges.push_back({a, b});
      try {
        local = straight_line_drawing(in);
        break;
      } catch (const Error& e) {
        if (e.code() != "degenerate-geometry" || attempt > 50) throw;
      }
    }

    std::vector<EdgeId> global;
    for (auto [a, b] : chords) {
      global.push_back(out.graph.add_edge("c" + std::to_string(chord_count++), corners[a], corners[b]));
      out.crossings.emplace_back();
    }
    for (std::size_t c = 0; c < chords.size(); ++c)
      for (const CrossingRecord& r : local.crossings[c])
        out.crossings[global[c]].push_back({global[r.other], r.sign});

    for (int i = 0; i < deg; ++i) {
      std::vector<std::pair<int, EdgeId>> here;
      for (std::size_t c = 0; c < chords.size(); ++c) {
        auto [a, b] = chords[c];
        if (a == i) here.push_back({((i - b) % deg + deg) % deg, global[c]});
        if (b == i) here.push_back({((i - a) % deg + deg) % deg, global[c]});
      }
      std::sort(here.begin(), here.end());
      EdgeId anchor = p.parent(f.walk[(i + deg - 1) % deg]);
      auto& block = blocks[corners[i]][anchor];
      for (auto [key, e] : here) block.push_back(e);
    }
  }
  for (VertexId v = 0; v < out.n(); ++v) {
    std::vector<EdgeId> rot;
    for (EdgeId e : plane.rotation[v]) {
      rot.push_back(e);
      if (auto it = blocks[v].find(e); it != blocks[v].end()) rot.insert(rot.end(), it->second.begin(), it->second.end());
    }
    out.rotation[v] = rot;
  }
  return out;
}

TopologicalDrawing dodecahedron() {
  Faces ico = icosahedron_faces();
  // Dual: one vertex per icosahedron face, one pentagon per icosahedron vertex.
  std::map<std::vector<VertexId>, int> face_id;
  for (int f = 0; f < 20; ++f) {
    auto key = ico[f];
    std::sort(key.begin(), key.end());
    face_id[key] = f;
  }
  Faces pentagons;
  for (VertexId v = 0; v < 12; ++v) {
    auto ring = link_order(ico, v);
    std::vector<VertexId> pent;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      std::vector<VertexId> key{v, ring[i], ring[(i + 1) % ring.size()]};
      std::sort(key.begin(), key.end());
      pent.push_back(face_id.at(key));
    }
    pentagons.push_back(pent);
  }
  return plane_from_faces(numbered(20, "d"), pentagons);
}

TopologicalDrawing barrel_pentagonalization(int rings) {
  if (rings < 1) throw Error("bad-size", "barrel needs at least one ring");
  std::vector<std::string> names;
  auto vertex = [&](const std::string& name) {
    names.push_back(name);
    return static_cast<VertexId>(names.size() - 1);
  };
  Faces faces;
  VertexId top = vertex("top");
  std::vector<VertexId> cycle;
  for (int i = 0; i < 3; ++i) {
    cycle.push_back(vertex("a" + std::to_string(i)));
    cycle.push_back(vertex("p" + std::to_string(i)));
    cycle.push_back(vertex("q" + std::to_string(i)));
  }
  for (int i = 0; i < 3; ++i) faces.push_back({top, cycle[3 * i], cycle[3 * i + 1], cycle[3 * i + 2], cycle[(3 * i + 3) % 9]});
  const int conn[6] = {1, 2, 4, 5, 7, 8};
  for (int r = 0; r < rings; ++r) {
    std::string tag = "r" + std::to_string(r) + "_";
    std::vector<VertexId> x(6), mid(6, -1);
    std::vector<VertexId> next;
    // New cycle X0 M0 X1 X2 M2 X3 X4 M4 X5.
    for (int j = 0; j < 6; ++j) {
      x[j] = vertex(tag + "x" + std::to_string(j));
      next.push_back(x[j]);
      if (j % 2 == 0) {
        mid[j] = vertex(tag + "m" + std::to_string(j));
        next.push_back(mid[j]);
      }
    }
    for (int j = 0; j < 6; ++j) {
      int a = conn[j], b = conn[(j + 1) % 6];
      std::vector<VertexId> f;
      for (int i = a; i != b; i = (i + 1) % 9) f.push_back(cycle[i]);
      f.push_back(cycle[b]);
      f.push_back(x[(j + 1) % 6]);
      if (j % 2 == 0) f.push_back(mid[j]);
      f.push_back(x[j]);
      faces.push_back(f);
    }
    cycle = next;
  }
  VertexId bottom = vertex("bottom");
  for (int i = 0; i < 3; ++i)
    faces.push_back({bottom, cycle[1 + 3 * i], cycle[2 + 3 * i], cycle[(3 + 3 * i) % 9], cycle[(4 + 3 * i) % 9]});
  return plane_from_faces(names, faces);
}

TopologicalDrawing truncated_icosahedron() {
  Faces ico = icosahedron_faces();
  std::map<std::pair<VertexId, VertexId>, VertexId> t;
  std::vector<std::string> names;
  for (VertexId v = 0; v < 12; ++v)
    for (VertexId w : link_order(ico, v)) {
      t[{v, w}] = static_cast<VertexId>(names.size());
      names.push_back("t" + std::to_string(v) + "_" + std::to_string(w));
    }
  Faces faces;
  for (VertexId v = 0; v < 12; ++v) {
    std::vector<VertexId> pent;
    for (VertexId w : link_order(ico, v)) pent.push_back(t.at({v, w}));
    faces.push_back(pent);
  }
  for (const auto& f : ico) {
    VertexId a = f[0], b = f[1], c = f[2];
    faces.push_back({t.at({a, b}), t.at({b, a}), t.at({b, c}), t.at({c, b}), t.at({c, a}), t.at({a, c})});
  }
  return plane_from_faces(names, faces);
}

TopologicalDrawing pole_chains(int h) {
  if (h < 1) throw Error("bad-size", "pole chains need h >= 1");
  TopologicalDrawing d;
  VertexId u = d.graph.add_vertex("u");
  VertexId v = d.graph.add_vertex("v");
  std::vector<EdgeId> first(h), last(h), pole(h);
  d.rotation.assign(2, {});
  for (int j = 0; j < h; ++j) {
    std::vector<VertexId> xs;
    for (int i = 1; i <= 6; ++i) xs.push_back(d.graph.add_vertex("x" + std::to_string(j) + "_" + std::to_string(i)));
    d.rotation.resize(d.graph.vertex_count());
    first[j] = d.graph.add_edge("g" + std::to_string(j) + "_0", u, xs[0]);
    EdgeId prev = first[j];
    for (int i = 0; i < 5; ++i) {
      EdgeId e = d.graph.add_edge("g" + std::to_string(j) + "_" + std::to_string(i + 1), xs[i], xs[i + 1]);
      d.rotation[xs[i]] = {prev, e};
      prev = e;
    }
    last[j] = d.graph.add_edge("g" + std::to_string(j) + "_6", xs[5], v);
    d.rotation[xs[5]] = {prev, last[j]};
    pole[j] = d.graph.add_edge("uv" + std::to_string(j), u, v);
  }
  for (int j = h - 1; j >= 0; --j) {
    d.rotation[u].push_back(first[j]);
    d.rotation[u].push_back(pole[j]);
  }
  for (int j = 0; j < h; ++j) {
    d.rotation[v].push_back(pole[j]);
    d.rotation[v].push_back(last[j]);
  }
  d.crossings.assign(d.m(), {});
  return d;
}

TopologicalDrawing gen_optimal_1planar(int t) {
  if (t < 3) throw Error("bad-size", "opt1planar needs t >= 3");
  std::vector<std::string> names{"N", "S"};
  for (int i = 0; i < 2 * t; ++i) names.push_back("c" + std::to_string(i));
  auto c = [t](int i) { return 2 + ((i % (2 * t)) + 2 * t) % (2 * t); };
  Faces faces;
  for (int j = 0; j < t; ++j) {
    faces.push_back({0, c(2 * j), c(2 * j + 1), c(2 * j + 2)});
    faces.push_back({1, c(2 * j + 1), c(2 * j + 2), c(2 * j + 3)});
  }
  TopologicalDrawing d = fill_faces(plane_from_faces(names, faces), [](const std::vector<VertexId>&) {
    return Chords{{0, 2}, {1, 3}};
  });
  set_expect(d, 2 * t + 2, 8 * t, 2 * t, 1, 0);
  return d;
}

TopologicalDrawing gen_optimal_2planar_dodeca() {
  TopologicalDrawing d = fill_faces(dodecahedron(), [](const std::vector<VertexId>& c) { return pentagram(c.size()); });
  set_expect(d, 20, 90, 60, 2, 0);
  return d;
}

TopologicalDrawing gen_optimal_2planar_barrel(int rings) {
  TopologicalDrawing d =
      fill_faces(barrel_pentagonalization(rings), [](const std::vector<VertexId>& c) { return pentagram(c.size()); });
  int n = 11 + 9 * rings;
  set_expect(d, n, 5 * n - 10, 5 * (6 + 6 * rings), 2, 0);
  return d;
}

TopologicalDrawing gen_trunc_icosa_filled() {
  TopologicalDrawing d = fill_faces(truncated_icosahedron(), [](const std::vector<VertexId>& c) {
    return c.size() == 5 ? pentagram(5) : trunc_hexagon();
  });
  set_expect(d, 60, 290, 12 * total_interleavings(pentagram(5)) + 20 * total_interleavings(trunc_hexagon()), 2,
             20 * heavy_interleavings(trunc_hexagon(), 2));
  return d;
}

TopologicalDrawing gen_min3_chain(int h) {
  TopologicalDrawing d = fill_faces(pole_chains(h), pole_rule(kOctagonMin3));
  set_expect(d, 6 * h + 2, 34 * h, 2 * h * total_interleavings(kOctagonMin3), 3,
             2 * h * heavy_interleavings(kOctagonMin3, 3));
  return d;
}

TopologicalDrawing gen_heavy_lower_bound(int k, int reps) {
  TopologicalDrawing d;
  if (k == 1) {
    if (reps < 0) throw Error("bad-size", "heavy-lb-k1 needs reps >= 0");
    int rings = reps + 1;
    TopologicalDrawing base = reps == 0 ? dodecahedron() : barrel_pentagonalization(rings);
    d = fill_faces(base, [](const std::vector<VertexId>&) { return kPentagonHeavy1; });
    int faces = 6 + 6 * rings;
    set_expect(d, 11 + 9 * rings, base.m() + 3 * faces, faces * total_interleavings(kPentagonHeavy1), 1,
               faces * heavy_interleavings(kPentagonHeavy1, 1));
  } else if (k == 2) {
    if (reps < 1) throw Error("bad-size", "heavy-lb-k2 needs reps >= 1");
    std::vector<std::string> names;
    auto c = [](int j, int p) { return 6 * j + ((p % 6) + 6) % 6; };
    for (int j = 0; j <= reps; ++j)
      for (int p = 0; p < 6; ++p) names.push_back("h" + std::to_string(j) + "_" + std::to_string(p));
    Faces faces;
    faces.push_back({c(0, 0), c(0, 1), c(0, 2), c(0, 3), c(0, 4), c(0, 5)});
    faces.push_back({c(reps, 0), c(reps, 1), c(reps, 2), c(reps, 3), c(reps, 4), c(reps, 5)});
    for (int j = 0; j < reps; ++j)
      for (int p = j % 2; p < 6; p += 2)
        faces.push_back({c(j, p), c(j, p + 1), c(j, p + 2), c(j + 1, p + 2), c(j + 1, p + 1), c(j + 1, p)});
    TopologicalDrawing base = plane_from_faces(names, faces);
    // Cap hexagons (one ring cycle each) stay empty.
    std::set<std::vector<VertexId>> caps;
    for (int j : {0, reps}) {
      std::vector<VertexId> cap;
      for (int p = 0; p < 6; ++p) cap.push_back(c(j, p));
      caps.insert(cap);
    }
    d = fill_faces(base, [caps](const std::vector<VertexId>& corners) {
      std::vector<VertexId> sorted = corners;
      std::sort(sorted.begin(), sorted.end());
      return caps.count(sorted) ? Chords{} : kHexagonHeavy2;
    });
    set_expect(d, 6 * (reps + 1), base.m() + 7 * 3 * reps, 3 * reps * total_interleavings(kHexagonHeavy2), 2,
               3 * reps * heavy_interleavings(kHexagonHeavy2, 2));
  } else if (k == 3) {
    if (reps < 1) throw Error("bad-size", "heavy-lb-k3 needs reps >= 1");
    d = fill_faces(pole_chains(reps), pole_rule(kOctagonHeavy3));
    set_expect(d, 6 * reps + 2, 8 * reps + 2 * 12 * reps, 2 * reps * total_interleavings(kOctagonHeavy3), 3,
               2 * reps * heavy_interleavings(kOctagonHeavy3, 3));
  } else {
    throw Error("bad-size", "heavy lower bounds exist for k in {1,2,3}");
  }
  return d;
}

const std::vector<FamilyInfo>& generator_families() {
  static const std::vector<FamilyInfo> families = {
      {"opt1planar", 1, 3, 3, 200, true},
      {"opt2planar-dodeca", 2, 0, 0, 0, false},
      {"opt2planar-barrel", 2, 1, 1, 50, true},
      {"opt2planar-trunc-icosa", 2, 0, 0, 0, false},
      {"min3-chain", 3, 1, 1, 100, true},
      {"heavy-lb-k1", 1, 0, 0, 50, true},
      {"heavy-lb-k2", 2, 2, 1, 50, true},
      {"heavy-lb-k3", 3, 1, 1, 100, true},
      {"k55-min2", 2, 0, 0, 0, false},
      {"fig1-pair", 2, 0, 0, 1, true},
  };
  return families;
}

void stamp_expectation(TopologicalDrawing& d, int k) {
  set_expect(d, d.n(), d.m(), d.total_crossings(), k, classify_edges(d, k).heavy);
}

TopologicalDrawing generate(const std::string& family, int size) {
  const auto& families = generator_families();
  auto it = std::find_if(families.begin(), families.end(), [&](const FamilyInfo& f) { return f.name == family; });
  if (it == families.end()) throw Error("unknown-family", "no generator family '" + family + "'");
  if (it->sized && (size < it->min_size || size > it->max_size))
    throw Error("bad-size", family + " takes sizes " + std::to_string(it->min_size) + ".." + std::to_string(it->max_size));
  if (family == "opt1planar") return gen_optimal_1planar(size);
  if (family == "opt2planar-dodeca") return gen_optimal_2planar_dodeca();
  if (family == "opt2planar-barrel") return gen_optimal_2planar_barrel(size);
  if (family == "opt2planar-trunc-icosa") return gen_trunc_icosa_filled();
  if (family == "min3-chain") return gen_min3_chain(size);
  if (family == "heavy-lb-k1") return gen_heavy_lower_bound(1, size);
  if (family == "heavy-lb-k2") return gen_heavy_lower_bound(2, size);
  if (family == "heavy-lb-k3") return gen_heavy_lower_bound(3, size);
  if (family == "k55-min2") return load_asset("k55-min2");
  return load_asset(size == 0 ? "fig1-a" : "fig1-b");
}

}  // namespace mkp
