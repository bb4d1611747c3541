#include "mkp/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mkp/red_faces.hpp"

namespace mkp {

Rational ChargeLedger::total() const {
  Rational sum;
  for (const Rational& c : charge) sum += c;
  return sum;
}

ChargeLedger initial_charges(const Planarization& p) {
  ChargeLedger ledger;
  ledger.n = p.real_count();
  ledger.phase = "initial";
  for (const FaceRecord& f : p.faces()) ledger.charge.emplace_back(2 * f.deg_r + f.deg_c - 4);
  if (ledger.total() != Rational(4 * ledger.n - 8))
    throw Error("charge-identity-failure",
                "sum of charges " + ledger.total().str() + " != " + std::to_string(4 * ledger.n - 8));
  return ledger;
}

namespace {

bool is_type(const FaceRecord& f, int deg_r, int deg) { return f.deg_r == deg_r && f.deg == deg; }

bool zero_real(const Planarization& p, Dart d) { return p.real_ends(Planarization::segment_of(d)) == 0; }

/// The unique real vertex on a 1-real face walk.
NodeId real_vertex(const Planarization& p, const FaceRecord& f) {
  for (Dart d : f.walk)
    if (p.is_real(p.head(d))) return p.head(d);
  return -1;
}

bool face_has_node(const Planarization& p, const FaceRecord& f, NodeId x) {
  return std::any_of(f.walk.begin(), f.walk.end(), [&](Dart d) { return p.head(d) == x; });
}

std::vector<int> path_segments(const DemandPath& path) {
  std::vector<int> segs;
  for (Dart d : path.edges) segs.push_back(Planarization::segment_of(d));
  return segs;
}

/// Applies transfers to a ledger copy and appends them to the log.
void apply(ChargeLedger& ledger, std::vector<Transfer>& log, std::vector<Transfer> batch) {
  for (Transfer& t : batch) {
    ledger.charge[t.src] -= t.amount;
    ledger.charge[t.dst] += t.amount;
    log.push_back(std::move(t));
  }
}

void finish(const Planarization& p, DischargeOutcome& out) {
  for (const FaceRecord& f : p.faces()) {
    Rational lhs = out.final_ledger.charge[f.id];
    Rational rhs = out.alpha * f.deg_r;
    out.c1.push_back({"c1_face_" + std::to_string(f.id), lhs, rhs, lhs >= rhs});
  }
}

void check_class(const Planarization& p, int k, const DischargeOptions& options, DischargeOutcome& out) {
  const TopologicalDrawing& d = p.drawing();
  std::string code = "not-min-" + std::to_string(k) + "-planar";
  if (!is_min_k_planar(d, k).holds) {
    if (options.strict) throw Error(code, "drawing is not min-" + std::to_string(k) + "-planar");
    out.waived.push_back(code);
  }
  BundleReport bundles = bundle_proper_check(d);
  if (!bundles.proper) {
    std::string detail = bundles.violations.front().rule;
    for (const auto& id : bundles.violations.front().ids) detail += " " + id;
    if (options.strict) throw Error("not-bundle-proper", detail);
    out.waived.push_back("not-bundle-proper: " + detail);
  }
}

DischargeOutcome start(const Planarization& p, Rational alpha) {
  DischargeOutcome out;
  out.alpha = alpha;
  out.n = p.real_count();
  out.m = p.drawing().m();
  out.initial = initial_charges(p);
  out.final_ledger = out.initial;
  return out;
}

}  // namespace

DemandPath demand_path(const Planarization& p, int f0, Dart e0) {
  if (e0 < 0 || e0 >= p.dart_count() || p.face_of(e0) != f0 || !zero_real(p, e0))
    throw Error("bad-demand-edge", "dart " + std::to_string(e0) + " is not a 0-real edge of face " + std::to_string(f0));
  DemandPath path;
  path.faces.push_back(f0);
  std::set<std::pair<int, Dart>> seen;
  Dart d = e0;
  for (;;) {
    path.edges.push_back(d);
    Dart entry = Planarization::twin(d);
    int f = p.face_of(entry);
    path.faces.push_back(f);
    if (!seen.insert({f, entry}).second)
      throw Error("cyclic-channel", "demand path from face " + std::to_string(f0) + " revisits face " + std::to_string(f));
    const FaceRecord& rec = p.face(f);
    if (!is_type(rec, 0, 4)) break;
    d = rec.walk[(p.walk_index(entry) + 2) % 4];
  }
  return path;
}

bool DischargeOutcome::c1_pass() const {
  return std::all_of(c1.begin(), c1.end(), [](const FormulaLine& l) { return l.pass; });
}

DischargeOutcome run_min2_discharging(const Planarization& p, const DischargeOptions& options) {
  DischargeOutcome out = start(p, Rational(2, 5));
  check_class(p, 2, options, out);
  ChargeLedger& ledger = out.final_ledger;

  // Rule 1: 0-real triangles draw 4/5 from the 2-real quadrilateral across one side
  // and 1/5 from the 2-real triangle at the opposite crossing.
  for (const FaceRecord& t : p.faces()) {
    if (!is_type(t, 0, 3)) continue;
    bool fixed = false;
    for (int i = 0; i < 3 && !fixed; ++i) {
      Dart side = t.walk[i];
      int f1 = p.face_of(Planarization::twin(side));
      Dart to_apex = t.walk[(i + 1) % 3];
      int f2 = p.opposite_face(to_apex);
      if (!is_type(p.face(f1), 2, 4) || !is_type(p.face(f2), 2, 3)) continue;
      apply(ledger, out.log,
            {{"min2.zero-real-triangle", f1, t.id, Rational(4, 5), {Planarization::segment_of(side)}, -1},
             {"min2.zero-real-triangle", f2, t.id, Rational(1, 5), {}, p.head(to_apex)}});
      fixed = true;
    }
    if (!fixed)
      out.violations.push_back({"min2.zero-real-triangle", t.id, "no 2-real quadrilateral and 2-real triangle pair"});
  }

  // Rule 2: 1-real triangles demand 2/5 from the end of their demand path.
  std::map<std::pair<int, Dart>, int> demanders;  // (terminal face, entering dart) -> triangle
  for (const FaceRecord& t : p.faces()) {
    if (!is_type(t, 1, 3) || ledger.charge[t.id] >= Rational(2, 5)) continue;
    auto it = std::find_if(t.walk.begin(), t.walk.end(), [&](Dart d) { return zero_real(p, d); });
    DemandPath path;
    try {
      path = demand_path(p, t.id, *it);
    } catch (const Error& e) {
      out.violations.push_back({"min2.one-real-triangle", t.id, e.code()});
      continue;
    }
    const FaceRecord& end = p.face(path.terminal());
    if (end.deg == 3) {
      out.violations.push_back({"min2.one-real-triangle", t.id, "demand path ends at triangle " + end.label});
      continue;
    }
    Rational amount = Rational(2, 5) - ledger.charge[t.id];
    apply(ledger, out.log, {{"min2.one-real-triangle", end.id, t.id, amount, path_segments(path), -1}});
    demanders[{end.id, Planarization::twin(path.edges.back())}] = t.id;
  }

  // Rule 3: a face demanded through two consecutive edges receives 1/5 from the supporting
  // face reached through the shared crossing and the 1-real triangles around v2.
  std::vector<Transfer> leaks;
  for (const FaceRecord& f : p.faces()) {
    if (!(is_type(f, 1, 4) || is_type(f, 0, 5) || is_type(f, 0, 6))) continue;
    for (int j = 0; j < f.deg; ++j) {
      Dart first = f.walk[j];
      Dart second = f.walk[(j + 1) % f.deg];
      if (!demanders.count({f.id, first}) || !demanders.count({f.id, second})) continue;
      NodeId z = p.head(first);
      if (p.is_real(z)) {
        out.violations.push_back({"min2.supporting-face", f.id, "consecutive demand edges meet at a real vertex"});
        continue;
      }
      NodeId v2 = real_vertex(p, p.face(demanders.at({f.id, second})));
      int cur = p.opposite_face(first);
      std::vector<int> crossed;
      std::set<int> visited;
      bool found = false;
      while (visited.insert(cur).second) {
        const FaceRecord& c = p.face(cur);
        if ((is_type(c, 2, 3) || is_type(c, 2, 4)) && face_has_node(p, c, v2)) {
          found = true;
          break;
        }
        if (!is_type(c, 1, 3) || real_vertex(p, c) != v2) break;
        // Leave through the 1-real edge that does not touch z and was not used to enter.
        int next = -1;
        for (Dart d : c.walk) {
          int s = Planarization::segment_of(d);
          if (p.real_ends(s) != 1) continue;
          if (p.head(d) == z || p.origin(d) == z) continue;
          if (!crossed.empty() && s == crossed.back()) continue;
          next = p.face_of(Planarization::twin(d));
          crossed.push_back(s);
          break;
        }
        if (next < 0) break;
        cur = next;
      }
      if (!found) {
        out.violations.push_back({"min2.supporting-face", f.id, "no supporting face around the second demander"});
        continue;
      }
      leaks.push_back({"min2.supporting-face", cur, f.id, Rational(1, 5), crossed, z});
    }
  }
  apply(ledger, out.log, std::move(leaks));
  ledger.phase = "final";
  finish(p, out);
  return out;
}

DischargeOutcome run_min3_discharging(const Planarization& p, const DischargeOptions& options) {
  DischargeOutcome out = start(p, Rational(1, 3));
  check_class(p, 3, options, out);
  ChargeLedger& ledger = out.final_ledger;
  const Rational third(1, 3), sixth(1, 6);

  // Step 1.
  std::vector<Transfer> batch;
  for (const FaceRecord& t : p.faces()) {
    if (!is_type(t, 0, 3)) continue;
    for (Dart d : t.walk) {
      DemandPath path = demand_path(p, t.id, d);
      batch.push_back({"min3.step1", path.terminal(), t.id, third, path_segments(path), -1});
    }
  }
  apply(ledger, out.log, std::move(batch));
  batch.clear();

  // Step 2.
  for (const FaceRecord& f : p.faces()) {
    if (ledger.charge[f.id] <= Rational(0) || is_type(f, 1, 4)) continue;
    std::vector<std::pair<Dart, int>> shared;
    int one_real_edges = 0;
    for (Dart d : f.walk) {
      if (p.real_ends(Planarization::segment_of(d)) != 1) continue;
      ++one_real_edges;
      int g = p.face_of(Planarization::twin(d));
      if (g != f.id && is_type(p.face(g), 1, 3)) shared.emplace_back(d, g);
    }
    bool special = is_type(f, 2, 3) && one_real_edges == 2 && shared.size() == 1;
    for (auto [d, g] : shared)
      batch.push_back({"min3.step2", f.id, g, special ? third : sixth, {Planarization::segment_of(d)}, -1});
  }
  apply(ledger, out.log, std::move(batch));
  batch.clear();

  // Step 3.
  for (const FaceRecord& t : p.faces()) {
    if (!is_type(t, 1, 3) || ledger.charge[t.id] >= third) continue;
    auto it = std::find_if(t.walk.begin(), t.walk.end(), [&](Dart d) { return zero_real(p, d); });
    DemandPath path = demand_path(p, t.id, *it);
    batch.push_back({"min3.step3", path.terminal(), t.id, third - ledger.charge[t.id], path_segments(path), -1});
  }
  apply(ledger, out.log, std::move(batch));
  batch.clear();

  // Step 4.
  for (const FaceRecord& f : p.faces()) {
    Rational excess = ledger.charge[f.id] - third * f.deg_r;
    if (excess <= Rational(0)) continue;
    std::map<int, NodeId> pentagons;  // face -> first crossing node reaching it
    for (Dart a : f.walk) {
      if (p.is_real(p.head(a))) continue;
      int g = p.opposite_face(a);
      if (g != f.id && is_type(p.face(g), 0, 5)) pentagons.try_emplace(g, p.head(a));
    }
    if (pentagons.empty()) continue;
    Rational share = excess / static_cast<std::int64_t>(pentagons.size());
    for (auto [g, x] : pentagons) batch.push_back({"min3.step4", f.id, g, share, {}, x});
  }
  apply(ledger, out.log, std::move(batch));
  ledger.phase = "final";

  Min3LogChecks checks;
  for (const Transfer& t : out.log) {
    for (int s : t.segments) {
      int ends = p.real_ends(s);
      if (ends == 2) checks.no_two_real = false;
      if ((t.rule == "min3.step1" || t.rule == "min3.step3") && ends != 0) checks.zero_real_channels = false;
      if (t.rule == "min3.step2" && ends != 1) checks.one_real_channels = false;
    }
    if (t.rule == "min3.step3" && t.amount > third) checks.step3_bounded = false;
  }
  out.log_checks = checks;
  finish(p, out);
  return out;
}

DensityBound density_bound_from_ledger(const DischargeOutcome& outcome, const Rational& alpha) {
  if (!outcome.c1_pass() || !outcome.conserved())
    throw Error("certificate-invalid", "C1 or conservation fails for this ledger");
  DensityBound b;
  b.bound = Rational(2) / alpha * (outcome.n - 2);
  b.holds = Rational(outcome.m) <= b.bound;
  return b;
}

bool Min1Audit::all_pass() const {
  return std::all_of(formulas.begin(), formulas.end(), [](const FormulaLine& f) { return f.pass; });
}

Min1Audit min1_face_audits(const TopologicalDrawing& d) {
  Coloring coloring = red_green_coloring(d);
  Planarization p = build_planarization(d);
  RedStructure red(p, coloring);
  const RedFaces& rf = red.faces();
  for (int r = 0; r < rf.count(); ++r)
    if (rf.degree[r] != 3)
      throw Error("red-not-triangulated", "red face " + std::to_string(r) + " has degree " + std::to_string(rf.degree[r]));
  Min1Audit a;
  a.n = d.n();
  a.red_faces = rf.count();
  a.green = coloring.green_count();
  a.heavy = classify_edges(d, 1).heavy;
  for (const auto& g : rf.green_inside) a.max_green_per_face = std::max<int>(a.max_green_per_face, g.size());
  const int n = a.n;
  a.formulas.push_back({"red_faces", a.red_faces, 2 * n - 4, a.red_faces == 2 * n - 4});
  a.formulas.push_back({"green_per_red_face", a.max_green_per_face, 1, a.max_green_per_face <= 1});
  a.formulas.push_back({"green_count", a.green, n - 2, a.green <= n - 2});
  int heavy_cap = (2 * n - 4) / 3;
  a.formulas.push_back({"heavy_count", a.heavy, heavy_cap, a.heavy <= heavy_cap});
  return a;
}

}  // namespace mkp
