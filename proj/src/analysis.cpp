#include "mkp/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mkp/planarization.hpp"

namespace mkp {

const char* label_name(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::free: return "free";
    case EdgeLabel::light: return "light";
    case EdgeLabel::heavy: return "heavy";
  }
  return "?";
}

EdgeClassification classify_edges(const TopologicalDrawing& d, int k) {
  EdgeClassification c;
  c.k = k;
  for (EdgeId e = 0; e < d.m(); ++e) {
    int cr = d.crossing_count(e);
    c.cr.push_back(cr);
    EdgeLabel l = cr == 0 ? EdgeLabel::free : (cr <= k ? EdgeLabel::light : EdgeLabel::heavy);
    c.label.push_back(l);
    if (l == EdgeLabel::free) ++c.free_count;
    else if (l == EdgeLabel::light) ++c.light;
    else ++c.heavy;
  }
  return c;
}

MinKResult is_min_k_planar(const TopologicalDrawing& d, int k) {
  for (auto [e, f] : d.crossing_pairs())
    if (std::min(d.crossing_count(e), d.crossing_count(f)) > k) return {false, std::make_pair(e, f)};
  return {};
}

KPlanarResult is_k_planar(const TopologicalDrawing& d, int k) {
  EdgeId worst = -1;
  for (EdgeId e = 0; e < d.m(); ++e)
    if (worst < 0 || d.crossing_count(e) > d.crossing_count(worst)) worst = e;
  if (worst >= 0 && d.crossing_count(worst) > k) return {false, worst};
  return {};
}

int Coloring::red_count() const { return static_cast<int>(std::count(color.begin(), color.end(), Color::red)); }
int Coloring::green_count() const { return static_cast<int>(color.size()) - red_count(); }

Coloring red_green_coloring(const TopologicalDrawing& d) {
  if (auto r = is_min_k_planar(d, 1); !r.holds)
    throw Error("not-min-1-planar", "edges '" + d.graph.edge(r.witness->first).name + "' and '" +
                                        d.graph.edge(r.witness->second).name + "' both cross twice or more");
  Coloring c;
  c.color.assign(d.m(), Color::red);
  for (auto [e, f] : d.crossing_pairs()) {
    // e < f, so on a tie f (the larger id) is green.
    EdgeId green = d.crossing_count(e) > d.crossing_count(f) ? e : f;
    c.color[green] = Color::green;
  }
  return c;
}

namespace {

GapAssignment greedy_gap(const TopologicalDrawing& d, int k, GapAssignment g) {
  std::map<std::pair<EdgeId, EdgeId>, int> index;
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) index[g.crossings[i]] = i;
  for (EdgeId e = 0; e < d.m(); ++e) {
    int cr = d.crossing_count(e);
    if (cr == 0 || cr > k) continue;
    for (const CrossingRecord& r : d.crossings[e]) {
      int i = index.at(std::minmax(e, r.other));
      if (g.owner[i] < 0) g.owner[i] = e;
    }
  }
  for (int i = 0; i < static_cast<int>(g.owner.size()); ++i)
    if (g.owner[i] < 0) g.violating.push_back(i);
  g.success = g.violating.empty();
  return g;
}

/// Capacitated bipartite matching: crossings on the left, edges with capacity k on the right.
GapAssignment exact_gap(const TopologicalDrawing& d, int k, GapAssignment g) {
  const int c = static_cast<int>(g.crossings.size());
  std::vector<std::vector<int>> owned(d.m());
  std::vector<char> visited_edge;
  std::vector<char> visited_cross;

  std::function<bool(int)> augment = [&](int i) -> bool {
    visited_cross[i] = 1;
    for (EdgeId e : {g.crossings[i].first, g.crossings[i].second}) {
      if (visited_edge[e]) continue;
      visited_edge[e] = 1;
      if (static_cast<int>(owned[e].size()) < k) {
        owned[e].push_back(i);
        g.owner[i] = e;
        return true;
      }
      for (std::size_t j = 0; j < owned[e].size(); ++j) {
        int other = owned[e][j];
        if (!visited_cross[other] && augment(other)) {
          owned[e][j] = i;
          g.owner[i] = e;
          return true;
        }
      }
    }
    return false;
  };

  for (int i = 0; i < c; ++i) {
    visited_edge.assign(d.m(), 0);
    visited_cross.assign(c, 0);
    if (augment(i)) continue;
    // The crossings reached by the failed search only have owners among the visited edges,
    // which are all full: a Hall violator.
    for (int j = 0; j < c; ++j)
      if (visited_cross[j]) g.violating.push_back(j);
    g.success = false;
    return g;
  }
  g.success = true;
  return g;
}

}  // namespace

GapAssignment gap_assignment(const TopologicalDrawing& d, int k, GapStrategy strategy) {
  GapAssignment g;
  g.k = k;
  g.crossings = d.crossing_pairs();
  g.owner.assign(g.crossings.size(), -1);
  return strategy == GapStrategy::exact ? exact_gap(d, k, std::move(g)) : greedy_gap(d, k, std::move(g));
}

std::optional<std::vector<EdgeId>> quasiplanar_witness(const TopologicalDrawing& d, int q, long long node_budget) {
  if (q <= 0) return std::vector<EdgeId>{};
  std::vector<std::set<EdgeId>> adj(d.m());
  for (auto [e, f] : d.crossing_pairs()) {
    adj[e].insert(f);
    adj[f].insert(e);
  }
  if (q == 1) {
    if (d.m() == 0) return std::nullopt;
    return std::vector<EdgeId>{0};
  }
  std::vector<EdgeId> clique;
  long long nodes = 0;
  std::function<bool(const std::vector<EdgeId>&)> grow = [&](const std::vector<EdgeId>& candidates) -> bool {
    if (static_cast<int>(clique.size()) == q) return true;
    if (static_cast<int>(clique.size() + candidates.size()) < q) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (++nodes > node_budget) throw Error("search-cutoff", "quasiplanar search exceeded its node budget");
      EdgeId v = candidates[i];
      std::vector<EdgeId> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (adj[v].count(candidates[j])) next.push_back(candidates[j]);
      clique.push_back(v);
      if (grow(next)) return true;
      clique.pop_back();
    }
    return false;
  };
  std::vector<EdgeId> all;
  for (EdgeId e = 0; e < d.m(); ++e)
    if (static_cast<int>(adj[e].size()) >= q - 1) all.push_back(e);
  if (grow(all)) return clique;
  return std::nullopt;
}

BundleReport bundle_proper_check(const TopologicalDrawing& d) {
  BundleReport r;
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (EdgeId e = 0; e < d.m(); ++e) bundles[std::minmax(d.graph.edge(e).u, d.graph.edge(e).v)].push_back(e);
  for (const auto& [key, members] : bundles) {
    if (members.size() < 2) continue;
    std::vector<std::string> crossed;
    for (EdgeId e : members)
      if (d.crossing_count(e) > 0) crossed.push_back(d.graph.edge(e).name);
    if (crossed.size() > 1) r.violations.push_back({"bundle-crossing", crossed});
  }
  if (d.graph.is_connected() && d.m() > 0) {
    Planarization p(d);
    for (const FaceRecord& f : p.faces()) {
      if (f.deg != 2 || f.deg_r != 2) continue;
      EdgeId a = p.parent(f.walk[0]), b = p.parent(f.walk[1]);
      if (a != b) r.violations.push_back({"homotopic-bigon", {d.graph.edge(a).name, d.graph.edge(b).name}});
    }
  }
  r.proper = r.violations.empty();
  return r;
}

bool BoundReport::all_pass() const {
  return std::all_of(formulas.begin(), formulas.end(), [](const FormulaLine& f) { return f.pass; });
}

BoundReport audit_bounds(const TopologicalDrawing& d, int k) {
  BoundReport r;
  EdgeClassification c = classify_edges(d, k);
  r.n = d.n();
  r.m = d.m();
  r.k = k;
  r.crossings = d.total_crossings();
  r.light = c.light;
  r.heavy = c.heavy;
  r.min_k_planar = is_min_k_planar(d, k).holds;
  r.simple = d.graph.is_simple();
  r.bundle_proper = bundle_proper_check(d).proper;
  r.exceeds_3planar_multigraph = Rational(r.m) > Rational(11, 2) * r.n - 11;

  auto add = [&](std::string name, Rational lhs, Rational rhs) {
    r.formulas.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };
  const Rational n(r.n), m(r.m);
  add("crossings_vs_kl", r.crossings, Rational(k) * r.light);
  add("heavy_fraction", r.heavy, Rational(k, 2 * k + 1) * m);
  if (k >= 2) {
    // m <= 5.39 sqrt(k) n and m <= (3.81 sqrt(k) + 3) n, squared to stay exact.
    Rational a = Rational(539, 100);
    Rational b = Rational(381, 100);
    add("density_general_a_sq", m * m, a * a * k * n * n);
    Rational excess = std::max(Rational(0), m - 3 * n);
    add("density_general_b_sq", excess * excess, b * b * k * n * n);
  }
  if (r.n >= 3) {
    if (k == 1 && r.simple) {
      add("density_min1", m, 4 * n - 8);
      add("heavy_min1", r.heavy, Rational(2, 3) * n - 1);
    } else if (k == 2 && r.bundle_proper) {
      add("density_min2", m, 5 * n - 10);
      add("heavy_min2", r.heavy, Rational(6, 5) * (n - 2));
    } else if (k == 3 && r.bundle_proper) {
      add("density_min3", m, 6 * n - 12);
      add("heavy_min3", r.heavy, 2 * (n - 2));
    }
  }
  return r;
}

}  // namespace mkp
