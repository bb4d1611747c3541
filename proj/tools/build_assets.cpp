// Regenerates the bundled figure drawings from straight-line coordinates.
// Usage: mkp_build_assets <asset-dir>
#include <fstream>
#include <iostream>

#include "mkp/geometry.hpp"

using namespace mkp;

namespace {

const std::vector<std::pair<VertexId, VertexId>> kFig1Edges = {
    {3, 9}, {0, 2}, {0, 6}, {2, 7}, {2, 6}, {1, 9}, {3, 7}, {6, 9}, {4, 7}, {0, 7}, {2, 3}, {6, 8}, {0, 8},
    {4, 6}, {3, 8}, {1, 4}, {5, 9}, {2, 4}, {1, 6}, {1, 5}, {5, 8}, {0, 3}, {1, 3}, {1, 7}, {5, 6}};

void write(const std::string& path, const std::string& header, TopologicalDrawing d) {
  std::ofstream out(path);
  out << header << serialize_drawing(d);
  std::cout << path << ": n=" << d.n() << " m=" << d.m() << " crossings=" << d.total_crossings() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mkp_build_assets <asset-dir>\n";
    return 2;
  }
  std::string dir = argv[1];

  StraightLineInput k55;
  k55.points = {{335, 47}, {3433, 264}, {710, 886}, {-1123, -1008}, {1291, 393},
                {104, -269}, {2343, 473}, {1393, 318}, {-699, 2606}, {214, 1195}};
  for (int i = 0; i < 5; ++i) k55.vertex_names.push_back("a" + std::to_string(i));
  for (int i = 0; i < 5; ++i) k55.vertex_names.push_back("b" + std::to_string(i));
  for (int a = 0; a < 5; ++a)
    for (int b = 5; b < 10; ++b) {
      k55.edges.push_back({a, b});
      k55.edge_names.push_back(k55.vertex_names[a] + k55.vertex_names[b]);
    }
  TopologicalDrawing d = straight_line_drawing(k55);
  d.expect.n = 10;
  d.expect.m = 25;
  write(dir + "/k55-min2.mkpd", "# Min-2-planar drawing of K5,5 (sides a*, b*).\n", d);

  StraightLineInput fig;
  fig.edges = kFig1Edges;
  fig.points = {{243, 606}, {557, 133}, {378, 937}, {618, 485}, {640, 594},
                {67, 620}, {13, 930}, {857, 480}, {265, 564}, {239, 196}};
  d = straight_line_drawing(fig);
  d.expect.crossings = 10;
  d.expect.heavy = {{2, 0}};
  write(dir + "/fig1-a.mkpd", "# 2-planar drawing of the fig1 graph with 10 crossings.\n", d);

  fig.points = {{315, 886}, {577, 116}, {501, 831}, {154, 729}, {701, 466},
                {-246, 236}, {-243, 1220}, {1476, 663}, {48, 812}, {328, -312}};
  d = straight_line_drawing(fig);
  d.expect.crossings = 12;
  d.expect.heavy = {{2, 2}};
  write(dir + "/fig1-b.mkpd", "# Min-2-planar drawing of the same graph with 12 crossings and two heavy edges.\n", d);
  return 0;
}
