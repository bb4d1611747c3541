#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "mkp/analysis.hpp"
#include "mkp/assets.hpp"
#include "mkp/generators.hpp"
#include "mkp/planarization.hpp"
#include "mkp/report.hpp"
#include "support.hpp"

using namespace mkp;

namespace {

std::map<std::string, int> labels(const TopologicalDrawing& d) {
  std::map<std::string, int> out;
  for (const FaceRecord& f : face_census(build_planarization(d))) ++out[f.label];
  return out;
}

/// Crossing counts of chords c<first>..c<first+count-1>, sorted.
std::vector<int> chord_counts(const TopologicalDrawing& d, int first, int count) {
  std::vector<int> out;
  for (int i = first; i < first + count; ++i) out.push_back(d.crossing_count(*d.graph.find_edge("c" + std::to_string(i))));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool heavy_pairwise_disjoint(const TopologicalDrawing& d, int k) {
  EdgeClassification c = classify_edges(d, k);
  for (auto [e, f] : d.crossing_pairs())
    if (c.label[e] == EdgeLabel::heavy && c.label[f] == EdgeLabel::heavy) return false;
  return true;
}

const std::vector<std::pair<int, int>> kMin3Fill = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4},
                                                    {1, 7}, {2, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}};

}  // namespace

TEST_CASE("every generator output is valid, min-k-planar and matches its manifest") {
  for (const auto& entry : test::generator_corpus()) {
    CAPTURE(entry.name);
    const TopologicalDrawing& d = entry.drawing;
    CHECK(validate_simplicity(d).empty());
    CHECK(validate_rotation(d).empty());
    CHECK(build_planarization(d).face_count() == test::euler_face_count(d));
    CHECK(is_min_k_planar(d, entry.k).holds);
    CHECK(!d.expect.empty());
    for (const ExpectCheck& c : check_expectation(d)) {
      CAPTURE(c.field);
      CHECK(c.pass());
    }
  }
}

TEST_CASE("optimal 1-planar family") {
  for (int t = 3; t <= 20; ++t) {
    TopologicalDrawing d = gen_optimal_1planar(t);
    CHECK(d.n() == 2 * t + 2);
    CHECK(d.m() == 4 * d.n() - 8);
    CHECK(is_k_planar(d, 1).holds);
    Coloring c = red_green_coloring(d);
    for (EdgeId e = 0; e < d.m(); ++e)
      if (c.color[e] == Color::green) CHECK(d.crossing_count(e) == 1);
  }
  CHECK_THROWS_WITH_AS(generate("opt1planar", 2), doctest::Contains("bad-size"), Error);
}

TEST_CASE("dodecahedron and barrels with pentagrams") {
  TopologicalDrawing d = gen_optimal_2planar_dodeca();
  CHECK(d.n() == 20);
  CHECK(d.m() == 90);
  CHECK(d.total_crossings() == 60);
  CHECK(is_k_planar(d, 2).holds);
  auto census = labels(d);
  CHECK(census["2-real 3-gon"] == 60);
  CHECK(census["1-real 3-gon"] == 60);
  CHECK(census["0-real 5-gon"] == 12);
  CHECK(census.size() == 3);

  CHECK(labels(dodecahedron()) == std::map<std::string, int>{{"5-real 5-gon", 12}});
  for (int r = 1; r <= 4; ++r) {
    TopologicalDrawing base = barrel_pentagonalization(r);
    CHECK(base.n() == 11 + 9 * r);
    CHECK(labels(base) == std::map<std::string, int>{{"5-real 5-gon", 6 + 6 * r}});
    TopologicalDrawing filled = gen_optimal_2planar_barrel(r);
    CHECK(filled.m() == 5 * filled.n() - 10);
    CHECK(is_k_planar(filled, 2).holds);
  }
}

TEST_CASE("filled truncated icosahedron") {
  TopologicalDrawing base = truncated_icosahedron();
  CHECK(base.n() == 60);
  CHECK(base.m() == 90);
  auto census = labels(base);
  CHECK(census["5-real 5-gon"] == 12);
  CHECK(census["6-real 6-gon"] == 20);

  TopologicalDrawing d = gen_trunc_icosa_filled();
  CHECK(d.n() == 60);
  CHECK(d.m() == 290);
  std::set<int> degrees;
  for (int deg : d.graph.degrees()) degrees.insert(deg);
  CHECK(std::includes(std::set<int>{9, 10, 11}.begin(), std::set<int>{9, 10, 11}.end(), degrees.begin(), degrees.end()));
  CHECK(std::any_of(degrees.begin(), degrees.end(), [](int x) { return x % 3 != 0; }));
  CHECK(is_min_k_planar(d, 2).holds);
  CHECK(!is_k_planar(d, 2).holds);
  EdgeClassification c = classify_edges(d, 2);
  CHECK(c.heavy == 40);
  for (EdgeId e = 0; e < d.m(); ++e)
    if (c.label[e] == EdgeLabel::heavy) CHECK(c.cr[e] == 3);
  CHECK(heavy_pairwise_disjoint(d, 2));
}

TEST_CASE("min-3 chain") {
  for (int h = 1; h <= 10; ++h) {
    TopologicalDrawing d = gen_min3_chain(h);
    CHECK(d.n() == 6 * h + 2);
    CHECK(d.m() == 34 * h);
    CHECK(Rational(d.m()) > Rational(11, 2) * d.n() - 11);
    CHECK(classify_edges(d, 3).heavy == 4 * h);
    CHECK(heavy_pairwise_disjoint(d, 3));
  }
  TopologicalDrawing five = gen_min3_chain(5);
  Rational ratio(five.m(), five.n());
  CHECK(ratio == Rational(170, 32));
  Rational formula = Rational(17, 3) - Rational(34, 3) / five.n();
  Rational gap = ratio > formula ? ratio - formula : formula - ratio;
  CHECK(gap <= Rational(1, 32));

  // Chord crossings inside each octagon match index interleaving.
  TopologicalDrawing one = gen_min3_chain(1);
  auto expected = sorted(test::interleaving_counts(kMin3Fill));
  CHECK(chord_counts(one, 0, 13) == expected);
  CHECK(chord_counts(one, 13, 13) == expected);
}

TEST_CASE("heavy-edge lower bound tilings") {
  SUBCASE("k = 1") {
    TopologicalDrawing d = gen_heavy_lower_bound(1, 0);
    EdgeClassification c = classify_edges(d, 1);
    CHECK(d.n() == 20);
    CHECK(c.heavy == 12);
    CHECK(3 * c.heavy == 2 * d.n() - 4);
    for (auto [e, f] : d.crossing_pairs()) {
      if (c.label[e] == EdgeLabel::heavy) CHECK(c.cr[f] == 1);
      if (c.label[f] == EdgeLabel::heavy) CHECK(c.cr[e] == 1);
    }
    for (int r = 1; r <= 4; ++r) {
      TopologicalDrawing big = gen_heavy_lower_bound(1, r);
      CHECK(classify_edges(big, 1).heavy == 6 + 6 * (r + 1));
      CHECK(Rational(classify_edges(big, 1).heavy) <= Rational(2, 3) * big.n() - 1);
    }
  }
  SUBCASE("k = 2") {
    for (int r = 1; r <= 10; ++r) {
      TopologicalDrawing d = gen_heavy_lower_bound(2, r);
      int hexagons = 3 * r;
      CHECK(classify_edges(d, 2).heavy == 2 * hexagons);
      CHECK(heavy_pairwise_disjoint(d, 2));
      CHECK(Rational(classify_edges(d, 2).heavy) <= Rational(6, 5) * (d.n() - 2));
    }
  }
  SUBCASE("k = 3") {
    for (int r = 1; r <= 10; ++r) {
      TopologicalDrawing d = gen_heavy_lower_bound(3, r);
      int heavy = classify_edges(d, 3).heavy;
      CHECK(heavy == 6 * r);
      CHECK(heavy <= 2 * (d.n() - 2));
      CHECK(heavy_pairwise_disjoint(d, 3));
      if (r == 10) MESSAGE("heavy-lb k=3 reps=10 heavy/n=" << Rational(heavy, d.n()));
    }
  }
}

TEST_CASE("plane_from_faces orients faces itself") {
  std::vector<std::string> names{"0", "1", "2", "3", "4", "5", "6", "7"};
  std::vector<std::vector<VertexId>> cube = {{0, 1, 2, 3}, {4, 7, 6, 5}, {0, 4, 5, 1},
                                             {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}};
  auto flipped = cube;
  std::reverse(flipped[2].begin(), flipped[2].end());
  std::reverse(flipped[4].begin(), flipped[4].end());
  for (const auto& faces : {cube, flipped}) {
    TopologicalDrawing d = plane_from_faces(names, faces);
    CHECK(d.m() == 12);
    CHECK(labels(d) == std::map<std::string, int>{{"4-real 4-gon", 6}});
  }
}

TEST_CASE("family table and errors") {
  CHECK(generator_families().size() == 10);
  CHECK_THROWS_WITH_AS(generate("opt9planar", 1), doctest::Contains("unknown-family"), Error);
  CHECK_THROWS_WITH_AS(generate("min3-chain", 0), doctest::Contains("bad-size"), Error);
}

TEST_CASE("bundled assets") {
  SUBCASE("K5,5") {
    TopologicalDrawing d = load_asset("k55-min2");
    CHECK(d.n() == 10);
    CHECK(d.m() == 25);
    for (const Edge& e : d.graph.edges()) CHECK(d.graph.vertex_name(e.u)[0] != d.graph.vertex_name(e.v)[0]);
    CHECK(d.graph.is_simple());
    CHECK(is_min_k_planar(d, 2).holds);
    MESSAGE("k55-min2 is 2-planar: " << std::string(is_k_planar(d, 2).holds ? "yes" : "no"));
  }
  SUBCASE("fig1 pair") {
    auto pair = load_fig1_pair();
    CHECK(pair[0].total_crossings() == 10);
    CHECK(is_k_planar(pair[0], 2).holds);
    CHECK(pair[1].total_crossings() == 12);
    CHECK(classify_edges(pair[1], 2).heavy == 2);
    CHECK(pair[0].graph == pair[1].graph);
  }
  SUBCASE("unknown name") { CHECK_THROWS_WITH_AS(load_asset("k33"), doctest::Contains("unknown-asset"), Error); }
  SUBCASE("directory override") {
    std::string dir = test::scratch_dir() + "/assets_override";
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/pentagon-pentagram.mkpd") << serialize_drawing(test::x_drawing());
    setenv("MKP_ASSET_DIR", dir.c_str(), 1);
    TopologicalDrawing d = load_asset("pentagon-pentagram");
    unsetenv("MKP_ASSET_DIR");
    CHECK(d.m() == 2);
    CHECK(load_asset("pentagon-pentagram").m() == 10);
  }
}
