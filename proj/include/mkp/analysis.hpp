#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mkp/drawing.hpp"
#include "mkp/rational.hpp"

namespace mkp {

enum class EdgeLabel { free, light, heavy };
const char* label_name(EdgeLabel l);

struct EdgeClassification {
  int k = 0;
  std::vector<int> cr;
  std::vector<EdgeLabel> label;
  int free_count = 0, light = 0, heavy = 0;
};

EdgeClassification classify_edges(const TopologicalDrawing& d, int k);

struct MinKResult {
  bool holds = true;
  std::optional<std::pair<EdgeId, EdgeId>> witness;
};
MinKResult is_min_k_planar(const TopologicalDrawing& d, int k);

struct KPlanarResult {
  bool holds = true;
  std::optional<EdgeId> witness;
};
KPlanarResult is_k_planar(const TopologicalDrawing& d, int k);

enum class Color { red, green };

struct Coloring {
  std::vector<Color> color;
  int red_count() const;
  int green_count() const;
};

/// Throws Error("not-min-1-planar") when some crossing pair has both edges crossed twice or more.
Coloring red_green_coloring(const TopologicalDrawing& d);

enum class GapStrategy { exact, greedy };

struct GapAssignment {
  int k = 0;
  bool success = false;
  /// Crossing pairs in TopologicalDrawing::crossing_pairs order.
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  /// Owner per crossing; -1 where unassigned.
  std::vector<EdgeId> owner;
  /// On failure: indices of crossings whose candidate owners cannot absorb them.
  std::vector<int> violating;
};

GapAssignment gap_assignment(const TopologicalDrawing& d, int k, GapStrategy strategy = GapStrategy::exact);

/// q pairwise-crossing edges if present. Throws Error("search-cutoff") past the node budget.
std::optional<std::vector<EdgeId>> quasiplanar_witness(const TopologicalDrawing& d, int q,
                                                       long long node_budget = 10'000'000);

struct BundleReport {
  bool proper = true;
  ViolationReport violations;
};
BundleReport bundle_proper_check(const TopologicalDrawing& d);

struct FormulaLine {
  std::string name;
  Rational lhs, rhs;
  bool pass = true;
};

struct BoundReport {
  int n = 0, m = 0, k = 0, crossings = 0, light = 0, heavy = 0;
  bool min_k_planar = true;
  bool simple = true;
  bool bundle_proper = true;
  /// m > 5.5n - 11, the multigraph 3-planar bound.
  bool exceeds_3planar_multigraph = false;
  std::vector<FormulaLine> formulas;
  bool all_pass() const;
};

BoundReport audit_bounds(const TopologicalDrawing& d, int k);

}  // namespace mkp
