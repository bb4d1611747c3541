#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mkp/error.hpp"

namespace mkp {

/// Vertices and edges are addressed by their index; names are kept for I/O.
using VertexId = int;
using EdgeId = int;

struct Edge {
  std::string name;
  VertexId u = 0;
  VertexId v = 0;
  bool operator==(const Edge&) const = default;
};

class MultiGraph {
public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  bool shares_endpoint(EdgeId a, EdgeId b) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  std::vector<int> degrees() const;
  bool is_connected() const;
  /// True when no two edges join the same vertex pair.
  bool is_simple() const;

  bool operator==(const MultiGraph&) const = default;

private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
};

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// `plus` on e's record for f: f crosses e from e's right to e's left.
struct CrossingRecord {
  EdgeId other = 0;
  Sign sign = Sign::plus;
  bool operator==(const CrossingRecord&) const = default;
};

/// Optional generator manifest carried through the file format.
struct Expectation {
  std::optional<int> n, m, crossings;
  std::vector<std::pair<int, int>> heavy;  // (k, count)
  bool empty() const { return !n && !m && !crossings && heavy.empty(); }
  bool operator==(const Expectation&) const = default;
};

struct TopologicalDrawing {
  MultiGraph graph;
  /// Clockwise incident edge ids per vertex.
  std::vector<std::vector<EdgeId>> rotation;
  /// Crossing records per edge, ordered from u toward v.
  std::vector<std::vector<CrossingRecord>> crossings;
  Expectation expect;

  int n() const { return graph.vertex_count(); }
  int m() const { return graph.edge_count(); }
  int crossing_count(EdgeId e) const { return static_cast<int>(crossings[e].size()); }
  int total_crossings() const;
  /// Each crossing once, as (smaller id, larger id).
  std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs() const;

  bool operator==(const TopologicalDrawing&) const = default;
};

struct Violation {
  std::string rule;
  std::vector<std::string> ids;
};

using ViolationReport = std::vector<Violation>;

struct ParseOptions {
  bool allow_disconnected = false;
  /// Skip simplicity and Euler checks; used to build deliberately broken drawings.
  bool raw = false;
};

/// Parses an mkpd 1 document. Errors carry the offending line number.
TopologicalDrawing parse_drawing(std::string_view text, const ParseOptions& options = {});
std::string serialize_drawing(const TopologicalDrawing& d);

ViolationReport validate_simplicity(const TopologicalDrawing& d);

/// Checks the rotation system lists each incidence exactly once.
ViolationReport validate_rotation(const TopologicalDrawing& d);

/// Connected once crossings are counted as contacts (the planarization is connected).
bool is_connected_drawing(const TopologicalDrawing& d);

/// Fresh name not used by any edge, of the form prefix + number.
std::string fresh_edge_name(const MultiGraph& g, const std::string& prefix);

}  // namespace mkp
