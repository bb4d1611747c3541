#include "mkp/geometry.hpp"

#include <algorithm>
#include <map>

namespace mkp {

namespace {

using Wide = __int128;

Wide cross(Point o, Point a, Point b) {
  return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

Wide cross_dir(Point a, Point b, Point c, Point d) {
  return static_cast<Wide>(b.x - a.x) * (d.y - c.y) - static_cast<Wide>(b.y - a.y) * (d.x - c.x);
}

int sgn(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment(Point a, Point b, Point p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Parameter t = num/den along ab of the crossing with cd, den > 0.
std::pair<Wide, Wide> param(Point a, Point b, Point c, Point d) {
  Wide den = cross_dir(a, b, c, d);
  Wide num = static_cast<Wide>(c.x - a.x) * (d.y - c.y) - static_cast<Wide>(c.y - a.y) * (d.x - c.x);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return {num, den};
}

/// Half-plane index for angular sorting: 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(Point v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace

bool segments_cross(Point a, Point b, Point c, Point d) {
  int d1 = sgn(cross(a, b, c)), d2 = sgn(cross(a, b, d));
  int d3 = sgn(cross(c, d, a)), d4 = sgn(cross(c, d, b));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

TopologicalDrawing straight_line_drawing(const StraightLineInput& in) {
  TopologicalDrawing d;
  const int n = static_cast<int>(in.points.size());
  for (int v = 0; v < n; ++v)
    d.graph.add_vertex(in.vertex_names.empty() ? std::to_string(v) : in.vertex_names[v]);
  const int m = static_cast<int>(in.edges.size());
  for (int e = 0; e < m; ++e) {
    auto [u, v] = in.edges[e];
    d.graph.add_edge(in.edge_names.empty() ? "e" + std::to_string(e) : in.edge_names[e], u, v);
  }
  auto P = [&](VertexId v) { return in.points[v]; };

  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (P(v).x == P(w).x && P(v).y == P(w).y)
        throw Error("degenerate-geometry", "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide");
  for (int e = 0; e < m; ++e) {
    auto [u, v] = in.edges[e];
    for (int w = 0; w < n; ++w)
      if (w != u && w != v && on_segment(P(u), P(v), P(w)))
        throw Error("degenerate-geometry", "vertex " + std::to_string(w) + " lies on edge " + std::to_string(e));
  }

  d.crossings.assign(m, {});
  // Per edge: (parameter, other edge) for sorting along the edge.
  std::vector<std::vector<std::pair<std::pair<Wide, Wide>, CrossingRecord>>> along(m);
  // Crossing points as exact rationals for concurrency detection.
  std::map<std::pair<std::pair<Wide, Wide>, Wide>, int> point_count;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = in.edges[e];
      auto [c, dd] = in.edges[f];
      bool adjacent = a == c || a == dd || b == c || b == dd;
      if (cross(P(a), P(b), P(c)) == 0 && cross(P(a), P(b), P(dd)) == 0) {
        // Collinear edges overlapping beyond a shared endpoint.
        auto [lo1, hi1] = std::minmax({std::make_pair(P(a).x, P(a).y), std::make_pair(P(b).x, P(b).y)});
        auto [lo2, hi2] = std::minmax({std::make_pair(P(c).x, P(c).y), std::make_pair(P(dd).x, P(dd).y)});
        if (std::max(lo1, lo2) < std::min(hi1, hi2))
          throw Error("degenerate-geometry", "edges " + std::to_string(e) + " and " + std::to_string(f) + " overlap");
        continue;
      }
      if (adjacent || !segments_cross(P(a), P(b), P(c), P(dd))) continue;
      Sign s = cross_dir(P(a), P(b), P(c), P(dd)) > 0 ? Sign::plus : Sign::minus;
      auto te = param(P(a), P(b), P(c), P(dd));
      auto tf = param(P(c), P(dd), P(a), P(b));
      along[e].push_back({te, {f, s}});
      along[f].push_back({tf, {e, flip(s)}});
      // Crossing point a + t (b - a) as a reduced triple (x num, y num, den).
      Wide den = te.second;
      Wide xn = static_cast<Wide>(P(a).x) * den + te.first * (P(b).x - P(a).x);
      Wide yn = static_cast<Wide>(P(a).y) * den + te.first * (P(b).y - P(a).y);
      // Normalise by gcd of the three values.
      auto gcd = [](Wide x, Wide y) {
        if (x < 0) x = -x;
        if (y < 0) y = -y;
        while (y != 0) {
          Wide t = x % y;
          x = y;
          y = t;
        }
        return x;
      };
      Wide g = gcd(gcd(xn, yn), den);
      if (++point_count[{{xn / g, yn / g}, den / g}] > 1)
        throw Error("degenerate-geometry", "three edges through one crossing point");
    }
  }
  for (int e = 0; e < m; ++e) {
    std::sort(along[e].begin(), along[e].end(), [](const auto& x, const auto& y) {
      return x.first.first * y.first.second < y.first.first * x.first.second;
    });
    for (const auto& [t, rec] : along[e]) d.crossings[e].push_back(rec);
  }

  // Clockwise rotation: sort by decreasing angle.
  d.rotation.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<Point, EdgeId>> out;
    for (int e = 0; e < m; ++e) {
      auto [a, b] = in.edges[e];
      if (a == v) out.push_back({{P(b).x - P(a).x, P(b).y - P(a).y}, e});
      else if (b == v) out.push_back({{P(a).x - P(b).x, P(a).y - P(b).y}, e});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      int hx = half(x.first), hy = half(y.first);
      if (hx != hy) return hx > hy;
      Wide c = static_cast<Wide>(x.first.x) * y.first.y - static_cast<Wide>(x.first.y) * y.first.x;
      return c < 0;
    });
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      const Point& x = out[i].first;
      const Point& y = out[i + 1].first;
      if (half(x) == half(y) && static_cast<Wide>(x.x) * y.y - static_cast<Wide>(x.y) * y.x == 0)
        throw Error("degenerate-geometry", "overlapping edges at vertex " + std::to_string(v));
    }
    for (const auto& [dir, e] : out) d.rotation[v].push_back(e);
  }
  return d;
}

}  // namespace mkp
