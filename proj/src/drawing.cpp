#include "mkp/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mkp/planarization.hpp"

namespace mkp {

VertexId MultiGraph::add_vertex(std::string name) {
  vertex_names_.push_back(std::move(name));
  return vertex_count() - 1;
}

EdgeId MultiGraph::add_edge(std::string name, VertexId u, VertexId v) {
  edges_.push_back({std::move(name), u, v});
  return edge_count() - 1;
}

std::optional<VertexId> MultiGraph::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<EdgeId> MultiGraph::find_edge(std::string_view name) const {
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edges_[e].name == name) return e;
  return std::nullopt;
}

bool MultiGraph::shares_endpoint(EdgeId a, EdgeId b) const {
  const Edge& x = edges_[a];
  const Edge& y = edges_[b];
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  return edges_[e].u == v ? edges_[e].v : edges_[e].u;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(vertex_count(), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool MultiGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<std::vector<VertexId>> adj(vertex_count());
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertex_count();
}

bool MultiGraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : edges_)
    if (!pairs.insert(std::minmax(e.u, e.v)).second) return false;
  return true;
}

int TopologicalDrawing::total_crossings() const {
  std::size_t total = 0;
  for (const auto& list : crossings) total += list.size();
  return static_cast<int>(total / 2);
}

std::vector<std::pair<EdgeId, EdgeId>> TopologicalDrawing::crossing_pairs() const {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e = 0; e < m(); ++e)
    for (const CrossingRecord& r : crossings[e])
      if (e < r.other) pairs.emplace_back(e, r.other);
  return pairs;
}

std::string fresh_edge_name(const MultiGraph& g, const std::string& prefix) {
  for (int i = g.edge_count();; ++i) {
    std::string name = prefix + std::to_string(i);
    if (!g.find_edge(name)) return name;
  }
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  int number = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used == s.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error("syntax-error", "expected integer, got '" + s + "'", line);
}

void parse_expect(const Line& line, Expectation& out) {
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const std::string& tok = line.tokens[i];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("syntax-error", "bad EXPECT field '" + tok + "'", line.number);
    std::string key = tok.substr(0, eq);
    int value = parse_int(tok.substr(eq + 1), line.number);
    if (key == "n") out.n = value;
    else if (key == "m") out.m = value;
    else if (key == "crossings") out.crossings = value;
    else if (key.rfind("heavy@", 0) == 0) out.heavy.emplace_back(parse_int(key.substr(6), line.number), value);
    else throw Error("syntax-error", "unknown EXPECT field '" + key + "'", line.number);
  }
}

}  // namespace

TopologicalDrawing parse_drawing(std::string_view text, const ParseOptions& options) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"mkpd", "1"})
    throw Error("syntax-error", "missing 'mkpd 1' header", lines.empty() ? 1 : lines[0].number);

  TopologicalDrawing d;
  MultiGraph& g = d.graph;
  // First pass: declarations.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) throw Error("syntax-error", "expected 'vertex <vid>'", line.number);
      if (g.find_vertex(t[1])) throw Error("duplicate-id", "vertex '" + t[1] + "' declared twice", line.number);
      g.add_vertex(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 4) throw Error("syntax-error", "expected 'edge <eid> <vid> <vid>'", line.number);
      if (g.find_edge(t[1])) throw Error("duplicate-id", "edge '" + t[1] + "' declared twice", line.number);
    } else if (t[0] == "EXPECT") {
      parse_expect(line, d.expect);
    } else if (t[0] != "rot" && t[0] != "cross") {
      throw Error("syntax-error", "unknown keyword '" + t[0] + "'", line.number);
    }
  }
  auto vertex = [&](const std::string& name, int line) {
    auto v = g.find_vertex(name);
    if (!v) throw Error("unknown-id", "unknown vertex '" + name + "'", line);
    return *v;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t[0] != "edge") continue;
    VertexId u = vertex(t[2], lines[i].number);
    VertexId v = vertex(t[3], lines[i].number);
    if (u == v) throw Error("self-loop", "edge '" + t[1] + "' is a self-loop", lines[i].number);
    g.add_edge(t[1], u, v);
  }
  auto edge = [&](const std::string& name, int line) {
    auto e = g.find_edge(name);
    if (!e) throw Error("unknown-id", "unknown edge '" + name + "'", line);
    return *e;
  };

  // Second pass: rotations and crossing lists.
  d.rotation.assign(g.vertex_count(), {});
  d.crossings.assign(g.edge_count(), {});
  std::vector<char> has_rot(g.vertex_count(), 0), has_cross(g.edge_count(), 0);
  std::vector<int> cross_line(g.edge_count(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "rot") {
      if (t.size() < 2) throw Error("syntax-error", "expected 'rot <vid> <eid>...'", line.number);
      VertexId v = vertex(t[1], line.number);
      if (has_rot[v]) throw Error("duplicate-id", "second rot line for '" + t[1] + "'", line.number);
      has_rot[v] = 1;
      for (std::size_t j = 2; j < t.size(); ++j) d.rotation[v].push_back(edge(t[j], line.number));
    } else if (t[0] == "cross") {
      if (t.size() < 2) throw Error("syntax-error", "expected 'cross <eid> ...'", line.number);
      EdgeId e = edge(t[1], line.number);
      if (has_cross[e]) throw Error("duplicate-id", "second cross line for '" + t[1] + "'", line.number);
      has_cross[e] = 1;
      cross_line[e] = line.number;
      for (std::size_t j = 2; j < t.size(); ++j) {
        const std::string& tok = t[j];
        auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon + 2 != tok.size() || (tok.back() != '+' && tok.back() != '-'))
          throw Error("syntax-error", "expected '<eid>:<+|->', got '" + tok + "'", line.number);
        EdgeId f = edge(tok.substr(0, colon), line.number);
        d.crossings[e].push_back({f, tok.back() == '+' ? Sign::plus : Sign::minus});
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!has_cross[e])
      throw Error("syntax-error", "edge '" + g.edge(e).name + "' has no cross line", lines.back().number);

  if (options.raw) return d;

  // Record matching and antisymmetry are reported against the line that states them.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (const CrossingRecord& r : d.crossings[e]) {
      if (r.other == e) continue;
      auto it = std::find_if(d.crossings[r.other].begin(), d.crossings[r.other].end(),
                             [&](const CrossingRecord& x) { return x.other == e; });
      if (it == d.crossings[r.other].end())
        throw Error("unmatched-crossing",
                    "'" + g.edge(e).name + "' lists '" + g.edge(r.other).name + "' but not conversely",
                    cross_line[e]);
      if (it->sign == r.sign)
        throw Error("sign-mismatch",
                    "'" + g.edge(e).name + "' and '" + g.edge(r.other).name + "' record the same sign",
                    cross_line[e]);
    }
  }
  if (!options.allow_disconnected && !is_connected_drawing(d))
    throw Error("disconnected", "graph is not connected", lines[0].number);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!has_rot[v] && !d.rotation[v].empty())
      throw Error("bad-rotation", "vertex '" + g.vertex_name(v) + "' has no rot line", lines.back().number);
  if (auto report = validate_rotation(d); !report.empty())
    throw Error("bad-rotation", report.front().rule + " at " + report.front().ids.front(), lines.back().number);
  if (auto report = validate_simplicity(d); !report.empty()) {
    std::string ids;
    for (const auto& id : report.front().ids) ids += " " + id;
    throw Error("not-simple", report.front().rule + ids);
  }
  build_planarization(d);
  return d;
}

std::string serialize_drawing(const TopologicalDrawing& d) {
  std::ostringstream out;
  const MultiGraph& g = d.graph;
  out << "mkpd 1\n";
  if (!d.expect.empty()) {
    out << "EXPECT";
    if (d.expect.n) out << " n=" << *d.expect.n;
    if (d.expect.m) out << " m=" << *d.expect.m;
    if (d.expect.crossings) out << " crossings=" << *d.expect.crossings;
    for (auto [k, count] : d.expect.heavy) out << " heavy@" << k << "=" << count;
    out << "\n";
  }
  for (const auto& name : g.vertex_names()) out << "vertex " << name << "\n";
  for (const Edge& e : g.edges())
    out << "edge " << e.name << " " << g.vertex_name(e.u) << " " << g.vertex_name(e.v) << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << g.vertex_name(v);
    for (EdgeId e : d.rotation[v]) out << " " << g.edge(e).name;
    out << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "cross " << g.edge(e).name;
    for (const CrossingRecord& r : d.crossings[e]) out << " " << g.edge(r.other).name << ":" << sign_char(r.sign);
    out << "\n";
  }
  return out.str();
}

ViolationReport validate_rotation(const TopologicalDrawing& d) {
  ViolationReport report;
  const MultiGraph& g = d.graph;
  if (static_cast<int>(d.rotation.size()) != g.vertex_count()) {
    report.push_back({"rotation-size", {"*"}});
    return report;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::multiset<EdgeId> want, have(d.rotation[v].begin(), d.rotation[v].end());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).u == v || g.edge(e).v == v) want.insert(e);
    if (want != have) report.push_back({"rotation-incidence", {g.vertex_name(v)}});
  }
  return report;
}

ViolationReport validate_simplicity(const TopologicalDrawing& d) {
  ViolationReport report;
  const MultiGraph& g = d.graph;
  auto name = [&](EdgeId e) { return g.edge(e).name; };
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).u == g.edge(e).v) report.push_back({"self-loop", {name(e)}});
  if (static_cast<int>(d.crossings.size()) != g.edge_count()) {
    report.push_back({"crossing-list-size", {"*"}});
    return report;
  }
  std::map<std::pair<EdgeId, EdgeId>, int> seen;
  std::set<std::pair<EdgeId, EdgeId>> adjacent;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::set<EdgeId> listed;
    for (const CrossingRecord& r : d.crossings[e]) {
      EdgeId f = r.other;
      if (f < 0 || f >= g.edge_count()) {
        report.push_back({"unknown-edge", {name(e)}});
        continue;
      }
      if (f == e) {
        report.push_back({"self-crossing", {name(e)}});
        continue;
      }
      if (!listed.insert(f).second) report.push_back({"double-crossing", {name(e), name(f)}});
      if (g.shares_endpoint(e, f) && adjacent.insert(std::minmax(e, f)).second) report.push_back({"adjacent-crossing", {name(e), name(f)}});
      ++seen[std::minmax(e, f)];
      auto it = std::find_if(d.crossings[f].begin(), d.crossings[f].end(),
                             [&](const CrossingRecord& x) { return x.other == e; });
      if (it == d.crossings[f].end()) {
        report.push_back({"unmatched-crossing", {name(e), name(f)}});
      } else if (it->sign == r.sign && e < f) {
        report.push_back({"sign-mismatch", {name(e), name(f)}});
      }
    }
  }
  for (auto [pair, count] : seen)
    if (count > 2) report.push_back({"double-crossing", {name(pair.first), name(pair.second)}});
  return report;
}

bool is_connected_drawing(const TopologicalDrawing& d) {
  if (d.n() == 0) return true;
  std::vector<std::vector<VertexId>> adj(d.n());
  auto link = [&](VertexId a, VertexId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (const Edge& e : d.graph.edges()) link(e.u, e.v);
  for (auto [e, f] : d.crossing_pairs()) link(d.graph.edge(e).u, d.graph.edge(f).u);
  std::vector<char> seen(d.n(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == d.n();
}

}  // namespace mkp
