#include "mkp/render.hpp"

#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <sstream>

namespace mkp {

namespace {

struct XY {
  double x = 0, y = 0;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int pick_outer(const Planarization& p) {
  int best = 0;
  for (const FaceRecord& f : p.faces())
    if (f.deg > p.face(best).deg) best = f.id;
  return best;
}

std::vector<std::vector<NodeId>> neighbours(const Planarization& p) {
  std::vector<std::vector<NodeId>> adj(p.node_count());
  for (NodeId x = 0; x < p.node_count(); ++x)
    for (Dart d : p.rotation(x)) adj[x].push_back(p.head(d));
  return adj;
}

/// Boundary on a circle, interior nodes at the average of their neighbours.
std::optional<std::vector<XY>> barycentric(const Planarization& p, const std::vector<NodeId>& boundary) {
  const int n = p.node_count();
  std::set<NodeId> seen(boundary.begin(), boundary.end());
  if (seen.size() != boundary.size() || boundary.size() < 3) return std::nullopt;
  std::vector<XY> pos(n);
  std::vector<char> fixed(n, 0);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    double t = 2 * pi * static_cast<double>(i) / static_cast<double>(boundary.size());
    pos[boundary[i]] = {std::cos(t), -std::sin(t)};
    fixed[boundary[i]] = 1;
  }
  auto adj = neighbours(p);
  for (int iter = 0; iter < 20000; ++iter) {
    double change = 0;
    for (NodeId x = 0; x < n; ++x) {
      if (fixed[x] || adj[x].empty()) continue;
      XY s;
      for (NodeId y : adj[x]) {
        s.x += pos[y].x;
        s.y += pos[y].y;
      }
      s.x /= static_cast<double>(adj[x].size());
      s.y /= static_cast<double>(adj[x].size());
      change = std::max(change, std::abs(s.x - pos[x].x) + std::abs(s.y - pos[x].y));
      pos[x] = s;
    }
    if (change < 1e-12) break;
  }
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (std::abs(pos[a].x - pos[b].x) + std::abs(pos[a].y - pos[b].y) < 1e-6) return std::nullopt;
  return pos;
}

/// Breadth-first rings around node 0.
std::vector<XY> radial(const Planarization& p) {
  const int n = p.node_count();
  auto adj = neighbours(p);
  std::vector<int> depth(n, -1);
  std::vector<std::vector<NodeId>> rings;
  for (NodeId root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    std::queue<NodeId> q;
    q.push(root);
    depth[root] = 0;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      if (static_cast<int>(rings.size()) <= depth[x]) rings.resize(depth[x] + 1);
      rings[depth[x]].push_back(x);
      for (NodeId y : adj[x])
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          q.push(y);
        }
    }
  }
  std::vector<XY> pos(n);
  const double pi = std::acos(-1.0);
  for (std::size_t r = 0; r < rings.size(); ++r)
    for (std::size_t i = 0; i < rings[r].size(); ++i) {
      double radius = static_cast<double>(r + 1) / static_cast<double>(rings.size() + 1);
      double t = 2 * pi * static_cast<double>(i) / static_cast<double>(rings[r].size()) + 0.3 * static_cast<double>(r);
      pos[rings[r][i]] = {radius * std::cos(t), radius * std::sin(t)};
    }
  return pos;
}

}  // namespace

RenderResult render_svg(const Planarization& p, const RenderSpec& spec) {
  RenderResult result;
  std::vector<XY> pos;
  if (p.face_count() > 0) {
    result.outer_face = spec.outer_face >= 0 ? spec.outer_face : pick_outer(p);
    std::vector<NodeId> boundary;
    for (Dart d : p.face(result.outer_face).walk) boundary.push_back(p.origin(d));
    if (auto layout = barycentric(p, boundary)) pos = *layout;
  }
  if (pos.empty()) {
    result.degenerate = true;
    pos = radial(p);
  }

  const TopologicalDrawing& d = p.drawing();
  const double c = spec.canvas, half = c / 2, scale = c * 0.45;
  auto sx = [&](NodeId x) { return num(half + scale * pos[x].x); };
  auto sy = [&](NodeId x) { return num(half + scale * pos[x].y); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.canvas << "\" height=\""
      << spec.canvas << "\" viewBox=\"0 0 " << spec.canvas << " " << spec.canvas << "\" data-layout=\""
      << (result.degenerate ? "degenerate-layout" : "barycentric") << "\">\n";
  svg << "<metadata>layout=" << (result.degenerate ? "degenerate-layout" : "barycentric")
      << " outer-face=" << result.outer_face << " nodes=" << p.node_count() << " segments=" << p.segment_count()
      << "</metadata>\n";
  svg << "<style>line{stroke:#333;stroke-width:2}.light{stroke:#1f77b4}.heavy{stroke:#d62728;stroke-width:3}"
         ".free{stroke:#555}.red{stroke:#c0392b}.green{stroke:#27ae60;stroke-dasharray:6 3}"
         "circle{fill:#fff;stroke:#000}text{font:12px sans-serif;text-anchor:middle}</style>\n";
  svg << "<g class=\"segments\">\n";
  for (int s = 0; s < p.segment_count(); ++s) {
    const Segment& seg = p.segment(s);
    std::string cls = "segment";
    if (spec.classification) cls += std::string(" ") + label_name(spec.classification->label[seg.parent]);
    if (spec.coloring) cls += spec.coloring->color[seg.parent] == Color::red ? " red" : " green";
    svg << "<line class=\"" << cls << "\" data-edge=\"" << escape(d.graph.edge(seg.parent).name)
        << "\" data-segment=\"" << s << "\" x1=\"" << sx(seg.tail) << "\" y1=\"" << sy(seg.tail) << "\" x2=\""
        << sx(seg.head) << "\" y2=\"" << sy(seg.head) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"vertices\">\n";
  for (VertexId v = 0; v < d.n(); ++v) {
    svg << "<circle data-vertex=\"" << escape(d.graph.vertex_name(v)) << "\" cx=\"" << sx(v) << "\" cy=\"" << sy(v)
        << "\" r=\"9\"/>";
    svg << "<text x=\"" << sx(v) << "\" y=\"" << num(half + scale * pos[v].y + 4) << "\">"
        << escape(d.graph.vertex_name(v)) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  result.svg = svg.str();
  return result;
}

}  // namespace mkp
