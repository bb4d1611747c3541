#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "mkp/assets.hpp"
#include "mkp/cli.hpp"
#include "mkp/generators.hpp"
#include "mkp/geometry.hpp"
#include "mkp/planarization.hpp"
#include "mkp/render.hpp"
#include "support.hpp"

using namespace mkp;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string path(const std::string& name) { return test::scratch_dir() + "/" + name; }

std::string write(const std::string& name, const std::string& text) {
  std::ofstream(path(name)) << text;
  return path(name);
}

std::string slurp(const std::string& file) {
  std::ifstream in(file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_with(const std::string& text, const std::string& prefix) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) out.push_back(line);
  return out;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::set<std::string> edges_with_class(const std::string& svg, const std::string& cls) {
  std::set<std::string> out;
  std::regex line_re("<line class=\"([^\"]*)\" data-edge=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
    std::string classes = " " + (*it)[1].str() + " ";
    if (classes.find(" " + cls + " ") != std::string::npos) out.insert((*it)[2].str());
  }
  return out;
}

}  // namespace

TEST_CASE("gen then audit the dodecahedron filling") {
  Run g = cli({"gen", "opt2planar-dodeca", "--out", path("dodeca.mkpd")});
  CHECK(g.code == 0);
  CHECK(g.out == "EXPECT n=20 m=90 crossings=60 heavy@2=0\n");
  Run a = cli({"audit", path("dodeca.mkpd"), "--k", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FORMULA density_min2 lhs=90 rhs=90 PASS\n") != std::string::npos);
  for (const auto& line : lines_with(a.out, "FORMULA"))
    CHECK(std::regex_match(line, std::regex("FORMULA \\S+ lhs=-?\\d+(/\\d+)? rhs=-?\\d+(/\\d+)? (PASS|FAIL)")));
  CHECK(cli({"audit", path("dodeca.mkpd"), "--k", "2"}).out == a.out);
}

TEST_CASE("classify fig1-b") {
  std::string file = write("fig1b.mkpd", asset_text("fig1-b"));
  Run r = cli({"classify", file, "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("CLASSIFY k=2 crossings=12 ", 0) == 0);
  CHECK(r.out.find(" heavy=2 ") != std::string::npos);
  CHECK(lines_with(r.out, "EDGE").size() == 25);
}

TEST_CASE("validate") {
  SUBCASE("malformed input exits 2 with a line number") {
    Run r = cli({"validate", write("bad.mkpd", "mkpd 1\nvertex a\nedge e a q\n")});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
  }
  SUBCASE("missing file is an input error") { CHECK(cli({"validate", path("nope.mkpd")}).code == 2); }
  SUBCASE("simplicity violations exit 1") {
    Run r = cli({"validate", write("adjacent.mkpd",
                                   "mkpd 1\nvertex a\nvertex b\nvertex c\nedge e a b\nedge f a c\nrot a e f\nrot b e\n"
                                   "rot c f\ncross e f:+\ncross f e:-\n")});
    CHECK(r.code == 1);
    CHECK(r.out.find("VIOLATION adjacent-crossing e f") != std::string::npos);
  }
  SUBCASE("manifest mismatch exits 1") {
    TopologicalDrawing d = load_asset("pentagon-pentagram");
    d.expect.m = 11;
    Run r = cli({"validate", write("wrong.mkpd", serialize_drawing(d))});
    CHECK(r.code == 1);
    CHECK(r.out.find("EXPECT m expected=11 measured=10 FAIL") != std::string::npos);
  }
  SUBCASE("bundled assets validate") {
    for (const std::string name : {"pentagon-pentagram", "k55-min2", "fig1-a", "fig1-b"}) {
      CAPTURE(name);
      CHECK(cli({"validate", write(name + ".mkpd", asset_text(name))}).code == 0);
    }
  }
}

TEST_CASE("charges and discharging reports") {
  cli({"gen", "opt2planar-dodeca", "--out", path("dodeca.mkpd")});
  Run r = cli({"charges", path("dodeca.mkpd"), "--discharge", "min2"});
  CHECK(r.code == 0);
  CHECK(lines_with(r.out, "CHARGE").size() == 132);
  CHECK(r.out.find("FORMULA charge_identity lhs=72 rhs=72 PASS") != std::string::npos);
  CHECK(r.out.find("FORMULA density_certificate lhs=90 rhs=90 PASS") != std::string::npos);
  auto xfers = lines_with(r.out, "XFER");
  CHECK(!xfers.empty());
  for (const auto& line : xfers) CHECK(std::regex_match(line, std::regex("XFER \\S+ \\d+ \\d+ \\d+/\\d+")));

  StraightLineInput in;
  in.points = {{0, 0}, {40, -10}, {90, 10}, {100, 60}, {50, 80}, {-10, 50}};
  in.edges = {{0, 3}, {1, 4}, {2, 5}};
  std::string mutual = write("mutual.mkpd", serialize_drawing(straight_line_drawing(in)));
  Run bad = cli({"charges", mutual, "--discharge", "min2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("PRECONDITION min2.zero-real-triangle") != std::string::npos);

  cli({"gen", "min3-chain", "--size", "1", "--out", path("chain.mkpd")});
  Run chain = cli({"charges", path("chain.mkpd"), "--discharge", "min3"});
  CHECK(chain.code == 1);
  CHECK(chain.out.find("WAIVED not-bundle-proper") != std::string::npos);
  CHECK(chain.out.find("FORMULA conservation lhs=24 rhs=24 PASS") != std::string::npos);
  CHECK(cli({"charges", path("chain.mkpd"), "--discharge", "min4"}).code == 2);
}

TEST_CASE("augment writes a drawing and a log") {
  cli({"gen", "random-min1", "--size", "12", "--seed", "5", "--out", path("r.mkpd")});
  Run r = cli({"augment", path("r.mkpd"), "--out", path("r_aug.mkpd")});
  CHECK(r.code == 0);
  for (const auto& line : lines_with(r.out, "ADD"))
    CHECK(std::regex_match(line, std::regex("ADD \\S+ \\S+ \\S+ step[12]( crosses \\S+)?")));
  TopologicalDrawing before = parse_drawing(slurp(path("r.mkpd")));
  TopologicalDrawing after = parse_drawing(slurp(path("r_aug.mkpd")));
  CHECK(after.m() == before.m() + static_cast<int>(lines_with(r.out, "ADD").size()));
  CHECK(r.out.find("FORMULA red_faces lhs=20 rhs=20 PASS") != std::string::npos);
  CHECK(cli({"augment", write("pent.mkpd", asset_text("pentagon-pentagram")), "--out", path("x.mkpd")}).code == 2);
}

TEST_CASE("gen is deterministic and seeded") {
  cli({"gen", "random-min1", "--size", "10", "--seed", "3", "--out", path("s1.mkpd")});
  cli({"gen", "random-min1", "--size", "10", "--seed", "3", "--out", path("s2.mkpd")});
  cli({"gen", "random-min1", "--size", "10", "--seed", "4", "--out", path("s3.mkpd")});
  CHECK(slurp(path("s1.mkpd")) == slurp(path("s2.mkpd")));
  CHECK(slurp(path("s1.mkpd")) != slurp(path("s3.mkpd")));
  cli({"gen", "opt2planar-trunc-icosa", "--out", path("t1.mkpd")});
  cli({"gen", "opt2planar-trunc-icosa", "--out", path("t2.mkpd")});
  CHECK(slurp(path("t1.mkpd")) == slurp(path("t2.mkpd")));
  CHECK(cli({"gen", "nonsense", "--out", path("n.mkpd")}).code == 2);
  CHECK(cli({"gen", "min3-chain", "--size", "0", "--out", path("n.mkpd")}).code == 2);
}

TEST_CASE("render") {
  SUBCASE("X") {
    std::string file = write("x.mkpd", serialize_drawing(test::x_drawing()));
    Run r = cli({"render", file, "--out", path("x.svg")});
    CHECK(r.code == 0);
    std::string svg = slurp(path("x.svg"));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<line ") == 4);
    CHECK(count(svg, "<circle ") == 4);
  }
  SUBCASE("pentagram chords are light") {
    std::string file = write("pent.mkpd", asset_text("pentagon-pentagram"));
    CHECK(cli({"render", file, "--out", path("pent.svg"), "--k", "2"}).code == 0);
    std::string svg = slurp(path("pent.svg"));
    CHECK(edges_with_class(svg, "light") == std::set<std::string>{"ac", "ad", "bd", "be", "ce"});
    CHECK(edges_with_class(svg, "free").size() == 5);
    CHECK(count(svg, "<line ") == 20);
  }
  SUBCASE("truncated icosahedron heavy edges") {
    cli({"gen", "opt2planar-trunc-icosa", "--out", path("t.mkpd")});
    CHECK(cli({"render", path("t.mkpd"), "--out", path("t.svg"), "--k", "2"}).code == 0);
    CHECK(edges_with_class(slurp(path("t.svg")), "heavy").size() == 40);
  }
  SUBCASE("red and green styling") {
    cli({"gen", "opt1planar", "--size", "4", "--out", path("o.mkpd")});
    CHECK(cli({"render", path("o.mkpd"), "--out", path("o.svg"), "--color"}).code == 0);
    CHECK(edges_with_class(slurp(path("o.svg")), "green").size() == 8);
  }
  SUBCASE("a single edge falls back to the radial layout") {
    TopologicalDrawing d = parse_drawing("mkpd 1\nvertex a\nvertex b\nedge e a b\nrot a e\nrot b e\ncross e\n");
    RenderResult r = render_svg(build_planarization(d));
    CHECK(r.degenerate);
    CHECK(r.svg.find("degenerate-layout") != std::string::npos);
  }
}

TEST_CASE("assets subcommand") {
  Run list = cli({"assets", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("k55-min2\n") != std::string::npos);
  CHECK(list.out.find("fig1-pair\n") != std::string::npos);
  Run emit = cli({"assets", "emit", "pentagon-pentagram"});
  CHECK(emit.code == 0);
  CHECK(parse_drawing(emit.out).m() == 10);
  CHECK(cli({"assets", "emit", "nothing"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"classify", "x.mkpd"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}
