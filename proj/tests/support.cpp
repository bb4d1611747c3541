#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <random>

#include "mkp/assets.hpp"
#include "mkp/generators.hpp"
#include "mkp/random_drawings.hpp"

namespace mkp::test {

std::vector<CorpusEntry> generator_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& family, int size, int k) {
    out.push_back({family + ":" + std::to_string(size), generate(family, size), k});
  };
  for (int t = 3; t <= 20; ++t) add("opt1planar", t, 1);
  add("opt2planar-dodeca", 0, 2);
  for (int r = 1; r <= 4; ++r) add("opt2planar-barrel", r, 2);
  add("opt2planar-trunc-icosa", 0, 2);
  for (int h = 1; h <= 10; ++h) add("min3-chain", h, 3);
  for (int r = 0; r <= 4; ++r) add("heavy-lb-k1", r, 1);
  for (int r = 1; r <= 10; ++r) add("heavy-lb-k2", r, 2);
  for (int r = 1; r <= 10; ++r) add("heavy-lb-k3", r, 3);
  return out;
}

std::vector<CorpusEntry> asset_corpus() {
  return {{"k55-min2", load_asset("k55-min2"), 2},
          {"fig1-a", load_asset("fig1-a"), 2},
          {"fig1-b", load_asset("fig1-b"), 2},
          {"pentagon-pentagram", load_asset("pentagon-pentagram"), 2}};
}

std::vector<CorpusEntry> random_corpus(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(3, 14)(rng);
    int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    out.push_back({"random:" + std::to_string(i), random_straight_line(rng, n, extra, 40), 0});
  }
  return out;
}

std::vector<CorpusEntry> random_min1_corpus(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(4, 14)(rng);
    out.push_back({"random-min1:" + std::to_string(i), random_min_k_planar(rng, n, 1, 3 * n, 40), 1});
  }
  return out;
}

int euler_face_count(const TopologicalDrawing& d) {
  // Planarization nodes: vertices plus crossings; edges: each edge split at its crossings.
  const int c = d.total_crossings();
  const int nodes = d.n() + c;
  const int edges = d.m() + 2 * c;
  std::vector<int> parent(d.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : d.graph.edges()) parent[find(e.u)] = find(e.v);
  for (auto [e, f] : d.crossing_pairs()) parent[find(d.graph.edge(e).u)] = find(d.graph.edge(f).u);
  int components = 0;
  for (int v = 0; v < d.n(); ++v) components += find(v) == v;
  if (edges == 0) return 1;
  // V - E + F = 1 + C for a plane graph with C components.
  return 1 + components - nodes + edges;
}

bool brute_force_gap(const TopologicalDrawing& d, int k) {
  auto pairs = d.crossing_pairs();
  const int c = static_cast<int>(pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<int> load(d.m(), 0);
    bool ok = true;
    for (int i = 0; i < c && ok; ++i) {
      EdgeId owner = (mask >> i) & 1 ? pairs[i].second : pairs[i].first;
      ok = ++load[owner] <= k;
    }
    if (ok) return true;
  }
  return false;
}

int brute_force_crossings(const StraightLineInput& in) {
  int count = 0;
  for (std::size_t i = 0; i < in.edges.size(); ++i)
    for (std::size_t j = i + 1; j < in.edges.size(); ++j) {
      auto [a, b] = in.edges[i];
      auto [c, e] = in.edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      count += segments_cross(in.points[a], in.points[b], in.points[c], in.points[e]);
    }
  return count;
}

std::vector<int> interleaving_counts(const std::vector<std::pair<int, int>>& chords) {
  std::vector<int> cr(chords.size(), 0);
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = 0; j < chords.size(); ++j) {
      if (i == j) continue;
      auto [a, b] = std::minmax(chords[i].first, chords[i].second);
      int c = chords[j].first, e = chords[j].second;
      if (c == a || c == b || e == a || e == b) continue;
      bool c_in = a < c && c < b, e_in = a < e && e < b;
      cr[i] += c_in != e_in;
    }
  return cr;
}

std::string scratch_dir() {
  const char* env = std::getenv("MKP_TEST_TMP");
  std::filesystem::path dir = env && *env ? env : std::filesystem::temp_directory_path() / "mkp_test";
  std::filesystem::create_directories(dir);
  return dir.string();
}

TopologicalDrawing x_drawing() {
  return parse_drawing(
      "mkpd 1\n"
      "vertex a\nvertex b\nvertex c\nvertex d\n"
      "edge e a c\nedge f b d\n"
      "rot a e\nrot b f\nrot c e\nrot d f\n"
      "cross e f:+\n"
      "cross f e:-\n");
}

}  // namespace mkp::test
