#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "mkp/assets.hpp"
#include "mkp/discharging.hpp"
#include "mkp/generators.hpp"
#include "mkp/geometry.hpp"
#include "support.hpp"

using namespace mkp;

namespace {

TopologicalDrawing three_mutual() {
  StraightLineInput in;
  in.points = {{0, 0}, {40, -10}, {90, 10}, {100, 60}, {50, 80}, {-10, 50}};
  in.edges = {{0, 3}, {1, 4}, {2, 5}};
  return straight_line_drawing(in);
}

TopologicalDrawing plane_k4() {
  StraightLineInput in;
  in.points = {{0, 0}, {100, 0}, {50, 90}, {50, 30}};
  in.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return straight_line_drawing(in);
}

/// 0-real dart of a face, or -1.
Dart zero_real_dart(const Planarization& p, const FaceRecord& f) {
  for (Dart d : f.walk)
    if (p.real_ends(Planarization::segment_of(d)) == 0) return d;
  return -1;
}

std::map<std::string, std::set<Rational>> final_by_label(const Planarization& p, const DischargeOutcome& o) {
  std::map<std::string, std::set<Rational>> out;
  for (const FaceRecord& f : p.faces()) out[f.label].insert(o.final_ledger.charge[f.id]);
  return out;
}

bool allowed_amount(const Transfer& t) {
  static const std::set<Rational> fixed = {Rational(1, 6), Rational(1, 5), Rational(1, 3),
                                           Rational(2, 5), Rational(4, 5), Rational(1)};
  if (t.amount <= Rational(0)) return false;
  if (t.rule == "min3.step4") return true;
  if (t.rule == "min3.step3") return t.amount <= Rational(1, 3);
  return fixed.count(t.amount) > 0;
}

}  // namespace

TEST_CASE("initial charges by face type") {
  Planarization mutual = build_planarization(three_mutual());
  ChargeLedger l = initial_charges(mutual);
  std::map<std::string, Rational> by_label;
  for (const FaceRecord& f : mutual.faces()) by_label[f.label] = l.charge[f.id];
  CHECK(by_label.at("0-real 3-gon") == Rational(-1));

  Planarization pent = build_planarization(load_asset("pentagon-pentagram"));
  ChargeLedger lp = initial_charges(pent);
  for (const FaceRecord& f : pent.faces()) {
    if (f.label == "1-real 3-gon") CHECK(lp.charge[f.id] == Rational(0));
    if (f.label == "2-real 3-gon") CHECK(lp.charge[f.id] == Rational(1));
    if (f.label == "0-real 5-gon") CHECK(lp.charge[f.id] == Rational(1));
  }
  Planarization k4 = build_planarization(plane_k4());
  for (const FaceRecord& f : k4.faces()) CHECK(initial_charges(k4).charge[f.id] == Rational(2));

  CHECK(initial_charges(build_planarization(gen_optimal_2planar_dodeca())).total() == Rational(72));
}

TEST_CASE("charge identity on the corpus and 500 random drawings") {
  auto corpus = test::generator_corpus();
  for (auto& e : test::asset_corpus()) corpus.push_back(e);
  for (auto& e : test::random_corpus(500, 99)) corpus.push_back(e);
  for (const auto& entry : corpus) {
    CAPTURE(entry.name);
    CHECK(entry.drawing.total_crossings() <= (entry.k == 0 ? 40 : 1 << 20));
    CHECK(initial_charges(build_planarization(entry.drawing)).total() == Rational(4 * entry.drawing.n() - 8));
  }
}

TEST_CASE("demand paths") {
  SUBCASE("pentagram corner triangle reaches the centre in one step") {
    Planarization p = build_planarization(load_asset("pentagon-pentagram"));
    int checked = 0;
    for (const FaceRecord& f : p.faces()) {
      if (f.label != "1-real 3-gon") continue;
      DemandPath path = demand_path(p, f.id, zero_real_dart(p, f));
      CHECK(path.length() == 1);
      CHECK(p.face(path.terminal()).label == "0-real 5-gon");
      ++checked;
    }
    CHECK(checked == 5);
  }
  SUBCASE("the chain has paths through 0-real quadrilaterals") {
    Planarization p = build_planarization(gen_min3_chain(1));
    int longest = 0;
    for (const FaceRecord& f : p.faces()) {
      if (f.deg_r != 1 || f.deg != 3) continue;
      DemandPath path = demand_path(p, f.id, zero_real_dart(p, f));
      longest = std::max(longest, path.length());
      for (int i = 1; i < path.length(); ++i) CHECK(p.face(path.faces[i]).label == "0-real 4-gon");
      CHECK(p.face(path.terminal()).label != "0-real 4-gon");
    }
    CHECK(longest >= 2);
  }
  SUBCASE("a dart touching a real vertex is refused") {
    Planarization p = build_planarization(load_asset("pentagon-pentagram"));
    const FaceRecord& f = p.face(0);
    Dart real = -1;
    for (Dart d : f.walk)
      if (p.real_ends(Planarization::segment_of(d)) > 0) real = d;
    REQUIRE(real >= 0);
    CHECK_THROWS_WITH_AS(demand_path(p, f.id, real), doctest::Contains("bad-demand-edge"), Error);
  }
}

TEST_CASE("min-2 discharging") {
  SUBCASE("dodecahedron filling is tight") {
    TopologicalDrawing d = gen_optimal_2planar_dodeca();
    Planarization p = build_planarization(d);
    DischargeOutcome o = run_min2_discharging(p);
    CHECK(o.violations.empty());
    CHECK(o.conserved());
    CHECK(o.c1_pass());
    CHECK(o.final_ledger.total() == Rational(72));
    auto finals = final_by_label(p, o);
    CHECK(finals["2-real 3-gon"] == std::set<Rational>{Rational(4, 5)});
    CHECK(finals["1-real 3-gon"] == std::set<Rational>{Rational(2, 5)});
    CHECK(finals["0-real 5-gon"] == std::set<Rational>{Rational(0)});
    DensityBound b = density_bound_from_ledger(o, Rational(2, 5));
    CHECK(b.bound == Rational(90));
    CHECK(b.holds);
    for (const Transfer& t : o.log) CHECK(allowed_amount(t));
  }
  SUBCASE("barrels up to fifty vertices") {
    for (int r = 1; r <= 4; ++r) {
      TopologicalDrawing d = gen_optimal_2planar_barrel(r);
      DischargeOutcome o = run_min2_discharging(build_planarization(d));
      CHECK(o.violations.empty());
      CHECK(o.c1_pass());
      CHECK(density_bound_from_ledger(o, Rational(2, 5)).bound == Rational(d.m()));
    }
  }
  SUBCASE("X has nothing to move") {
    DischargeOutcome o = run_min2_discharging(build_planarization(test::x_drawing()));
    CHECK(o.log.empty());
    CHECK(o.conserved());
    CHECK(o.c1_pass());
  }
  SUBCASE("a lone 0-real triangle is reported, not fixed") {
    DischargeOutcome o = run_min2_discharging(build_planarization(three_mutual()));
    REQUIRE(!o.violations.empty());
    CHECK(o.violations.front().rule == "min2.zero-real-triangle");
    CHECK(o.conserved());
    CHECK(!o.c1_pass());
    CHECK_THROWS_WITH_AS(density_bound_from_ledger(o, Rational(2, 5)), doctest::Contains("certificate-invalid"), Error);
  }
  SUBCASE("class preconditions") {
    CHECK_THROWS_WITH_AS(run_min2_discharging(build_planarization(gen_min3_chain(1))),
                         doctest::Contains("not-min-2-planar"), Error);
  }
}

TEST_CASE("min-3 discharging") {
  SUBCASE("conservation and log predicates on bundle-proper min-3 drawings") {
    auto corpus = test::generator_corpus();
    for (auto& e : test::asset_corpus()) corpus.push_back(e);
    for (auto& e : test::random_corpus(120, 13)) corpus.push_back(e);
    int runs = 0;
    for (const auto& entry : corpus) {
      const TopologicalDrawing& d = entry.drawing;
      if (!is_min_k_planar(d, 3).holds || !bundle_proper_check(d).proper) continue;
      CAPTURE(entry.name);
      DischargeOutcome o = run_min3_discharging(build_planarization(d));
      CHECK(o.conserved());
      REQUIRE(o.log_checks);
      CHECK(o.log_checks->all());
      for (const Transfer& t : o.log) CHECK(allowed_amount(t));
      ++runs;
    }
    CHECK(runs > 50);
  }
  SUBCASE("the chain runs in relaxed mode") {
    Planarization p = build_planarization(gen_min3_chain(2));
    CHECK_THROWS_WITH_AS(run_min3_discharging(p), doctest::Contains("not-bundle-proper"), Error);
    DischargeOutcome o = run_min3_discharging(p, {.strict = false});
    CHECK(!o.waived.empty());
    CHECK(o.conserved());
    CHECK(o.log_checks->all());
  }
  SUBCASE("the 1/3 certificate bound is 6n - 12") {
    TopologicalDrawing d = gen_optimal_2planar_dodeca();
    DischargeOutcome o = run_min3_discharging(build_planarization(d));
    REQUIRE(o.c1_pass());
    CHECK(density_bound_from_ledger(o, Rational(1, 3)).bound == Rational(6 * d.n() - 12));
  }
}

TEST_CASE("min-1 face audits") {
  SUBCASE("optimal 1-planar, t = 3") {
    Min1Audit a = min1_face_audits(gen_optimal_1planar(3));
    CHECK(a.n == 8);
    CHECK(a.red_faces == 12);
    CHECK(a.green == 6);
    CHECK(a.all_pass());
  }
  SUBCASE("pentagon tiling with one heavy edge per pentagon") {
    Min1Audit a = min1_face_audits(gen_heavy_lower_bound(1, 0));
    CHECK(a.heavy == 12);
    CHECK(a.all_pass());
  }
  SUBCASE("crossing-free triangulation") {
    Min1Audit a = min1_face_audits(plane_k4());
    CHECK(a.green == 0);
    CHECK(a.all_pass());
  }
  SUBCASE("untriangulated red faces are refused") {
    CHECK_THROWS_WITH_AS(min1_face_audits(test::x_drawing()), doctest::Contains("red-not-triangulated"), Error);
  }
}
