#include "mkp/random_drawings.hpp"

#include <algorithm>
#include <set>

#include "mkp/analysis.hpp"
#include "mkp/geometry.hpp"

namespace mkp {

namespace {

constexpr int kGrid = 1000;

std::vector<Point> random_points(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coord(0, kGrid);
  std::set<std::pair<int, int>> used;
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    int x = coord(rng), y = coord(rng);
    if (used.insert({x, y}).second) pts.push_back({x, y});
  }
  return pts;
}

/// Prim's algorithm on squared distances.
std::vector<std::pair<VertexId, VertexId>> euclidean_tree(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  auto dist = [&](int a, int b) {
    std::int64_t dx = pts[a].x - pts[b].x, dy = pts[a].y - pts[b].y;
    return dx * dx + dy * dy;
  };
  std::vector<char> in(n, 0);
  std::vector<std::int64_t> best(n, INT64_MAX);
  std::vector<int> from(n, -1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  best[0] = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!in[i] && (v < 0 || best[i] < best[v])) v = i;
    in[v] = 1;
    if (from[v] >= 0) edges.push_back({from[v], v});
    for (int i = 0; i < n; ++i)
      if (!in[i] && dist(v, i) < best[i]) {
        best[i] = dist(v, i);
        from[i] = v;
      }
  }
  return edges;
}

std::vector<std::pair<VertexId, VertexId>> shuffled_non_edges(std::mt19937& rng, int n,
                                                              const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::set<std::pair<VertexId, VertexId>> have;
  for (auto [a, b] : edges) have.insert(std::minmax(a, b));
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!have.count({a, b})) out.push_back({a, b});
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TopologicalDrawing random_straight_line(std::mt19937& rng, int n, int extra_edges, int max_crossings) {
  for (;;) {
    StraightLineInput in;
    in.points = random_points(rng, n);
    in.edges = euclidean_tree(in.points);
    auto pool = shuffled_non_edges(rng, n, in.edges);
    for (int i = 0; i < extra_edges && i < static_cast<int>(pool.size()); ++i) in.edges.push_back(pool[i]);
    try {
      TopologicalDrawing d = straight_line_drawing(in);
      if (d.total_crossings() <= max_crossings) return d;
    } catch (const Error& e) {
      if (e.code() != "degenerate-geometry") throw;
    }
  }
}

TopologicalDrawing random_min_k_planar(std::mt19937& rng, int n, int k, int tries, int max_crossings) {
  for (;;) {
    StraightLineInput in;
    in.points = random_points(rng, n);
    in.edges = euclidean_tree(in.points);
    TopologicalDrawing current;
    try {
      current = straight_line_drawing(in);
    } catch (const Error& e) {
      if (e.code() != "degenerate-geometry") throw;
      continue;
    }
    auto pool = shuffled_non_edges(rng, n, in.edges);
    for (int i = 0; i < tries && i < static_cast<int>(pool.size()); ++i) {
      in.edges.push_back(pool[i]);
      try {
        TopologicalDrawing next = straight_line_drawing(in);
        if (next.total_crossings() <= max_crossings && is_min_k_planar(next, k).holds) {
          current = std::move(next);
          continue;
        }
      } catch (const Error& e) {
        if (e.code() != "degenerate-geometry") throw;
      }
      in.edges.pop_back();
    }
    return current;
  }
}

}  // namespace mkp
