#include "mkp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "mkp/assets.hpp"
#include "mkp/augmentation.hpp"
#include "mkp/generators.hpp"
#include "mkp/planarization.hpp"
#include "mkp/random_drawings.hpp"
#include "mkp/render.hpp"
#include "mkp/report.hpp"

namespace mkp {

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io-error", "cannot write '" + path + "'");
  out << text;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  ParseOptions raw;
  raw.raw = true;
  TopologicalDrawing d = parse_drawing(read_file(file), raw);
  ViolationReport bad = validate_rotation(d);
  for (const Violation& v : validate_simplicity(d)) bad.push_back(v);
  if (!is_connected_drawing(d)) bad.push_back({"disconnected", {}});
  if (bad.empty()) {
    try {
      build_planarization(d);
    } catch (const Error& e) {
      bad.push_back({e.code(), {}});
    }
  }
  for (const Violation& v : bad) {
    out << "VIOLATION " << v.rule;
    for (const auto& id : v.ids) out << " " << id;
    out << "\n";
  }
  if (!bad.empty()) return kCheckFailed;
  Planarization p = build_planarization(d);
  out << "VALID n=" << d.n() << " m=" << d.m() << " crossings=" << d.total_crossings() << " faces=" << p.face_count()
      << "\n";
  bool ok = true;
  for (const ExpectCheck& c : check_expectation(d)) {
    out << expect_check_line(c) << "\n";
    ok = ok && c.pass();
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_classify(const std::string& file, int k, std::ostream& out) {
  TopologicalDrawing d = parse_drawing(read_file(file));
  EdgeClassification c = classify_edges(d, k);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "CLASSIFY k=" << k << " crossings=" << d.total_crossings() << " free=" << c.free_count << " light=" << c.light
      << " heavy=" << c.heavy << " min_k_planar=" << yn(is_min_k_planar(d, k).holds)
      << " k_planar=" << yn(is_k_planar(d, k).holds) << "\n";
  for (EdgeId e = 0; e < d.m(); ++e)
    out << "EDGE " << d.graph.edge(e).name << " cr=" << c.cr[e] << " " << label_name(c.label[e]) << "\n";
  return kOk;
}

int cmd_audit(const std::string& file, int k, std::ostream& out) {
  TopologicalDrawing d = parse_drawing(read_file(file));
  BoundReport r = audit_bounds(d, k);
  for (const auto& line : bound_report_lines(r)) out << line << "\n";
  return r.min_k_planar && r.all_pass() ? kOk : kCheckFailed;
}

int cmd_charges(const std::string& file, const std::string& mode, std::ostream& out) {
  TopologicalDrawing d = parse_drawing(read_file(file));
  Planarization p = build_planarization(d);
  ChargeLedger ledger = initial_charges(p);
  for (const FaceRecord& f : p.faces())
    out << "CHARGE " << f.id << " " << f.label << " " << ledger.charge[f.id].str() << "\n";
  out << formula_line({"charge_identity", ledger.total(), Rational(4 * d.n() - 8), true}) << "\n";
  if (mode.empty()) return kOk;

  DischargeOptions relaxed;
  relaxed.strict = false;
  DischargeOutcome o = mode == "min2" ? run_min2_discharging(p, relaxed) : run_min3_discharging(p, relaxed);
  bool ok = o.waived.empty() && o.violations.empty();
  for (const auto& w : o.waived) out << "WAIVED " << w << "\n";
  for (const Transfer& t : o.log) out << xfer_line(t) << "\n";
  for (const auto& v : o.violations) out << "PRECONDITION " << v.rule << " " << v.face << " " << v.reason << "\n";
  for (const FormulaLine& f : o.c1) {
    out << formula_line(f) << "\n";
    ok = ok && f.pass;
  }
  out << formula_line({"conservation", o.final_ledger.total(), o.initial.total(), o.conserved()}) << "\n";
  ok = ok && o.conserved();
  if (o.log_checks) {
    const Min3LogChecks& c = *o.log_checks;
    auto line = [&](const char* name, bool pass) {
      out << "CHECK " << name << (pass ? " PASS" : " FAIL") << "\n";
      ok = ok && pass;
    };
    line("zero_real_channels", c.zero_real_channels);
    line("one_real_channels", c.one_real_channels);
    line("no_two_real", c.no_two_real);
    line("step3_bounded", c.step3_bounded);
  }
  if (ok && o.c1_pass()) {
    DensityBound b = density_bound_from_ledger(o, o.alpha);
    out << formula_line({"density_certificate", Rational(d.m()), b.bound, b.holds}) << "\n";
    ok = b.holds;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_augment(const std::string& file, const std::string& dest, std::ostream& out) {
  TopologicalDrawing d = parse_drawing(read_file(file));
  AugmentResult r = augment_min1(d);
  write_file(dest, serialize_drawing(r.drawing));
  for (const auto& line : r.log) out << line << "\n";
  Min1Audit a = min1_face_audits(r.drawing);
  out << "MIN1 n=" << a.n << " red_faces=" << a.red_faces << " green=" << a.green << " heavy=" << a.heavy
      << " max_green_per_face=" << a.max_green_per_face << "\n";
  for (const FormulaLine& f : a.formulas) out << formula_line(f) << "\n";
  return a.all_pass() ? kOk : kCheckFailed;
}

int cmd_gen(const std::string& family, std::optional<int> size, int seed, const std::string& dest, std::ostream& out) {
  TopologicalDrawing d;
  int k = 2;
  if (family == "random" || family == "random-min1") {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    int n = size.value_or(10);
    if (n < 3 || n > 60) throw Error("bad-size", family + " takes sizes 3..60");
    d = family == "random" ? random_straight_line(rng, n, n) : random_min_k_planar(rng, n, 1, 3 * n);
    k = 1;
  } else {
    int chosen = 0;
    for (const FamilyInfo& f : generator_families())
      if (f.name == family) {
        chosen = size.value_or(f.default_size);
        k = f.k;
      }
    d = generate(family, chosen);
  }
  if (d.expect.empty()) stamp_expectation(d, k);
  write_file(dest, serialize_drawing(d));
  out << expect_line(d, k) << "\n";
  return kOk;
}

int cmd_render(const std::string& file, const std::string& dest, std::optional<int> k, bool color, std::ostream& out) {
  TopologicalDrawing d = parse_drawing(read_file(file));
  Planarization p = build_planarization(d);
  RenderSpec spec;
  if (k) spec.classification = classify_edges(d, *k);
  if (color) spec.coloring = red_green_coloring(d);
  RenderResult r = render_svg(p, spec);
  write_file(dest, r.svg);
  out << "RENDER layout=" << (r.degenerate ? "degenerate-layout" : "barycentric") << " outer-face=" << r.outer_face
      << " segments=" << p.segment_count() << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for min-k-planar drawings", "mkp"};
  app.require_subcommand(1);

  std::string file, dest, mode, family, name;
  int k = 1, seed = 1;
  std::optional<int> size, render_k;
  bool color = false;

  auto* validate = app.add_subcommand("validate", "Check a drawing and its EXPECT manifest");
  validate->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify", "Free/light/heavy labels at budget k");
  classify->add_option("file", file)->required();
  classify->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  auto* audit = app.add_subcommand("audit", "Evaluate the density and counting bounds");
  audit->add_option("file", file)->required();
  audit->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  auto* charges = app.add_subcommand("charges", "Face charges and optional discharging");
  charges->add_option("file", file)->required();
  charges->add_option("--discharge", mode)->check(CLI::IsMember({"min2", "min3"}));
  auto* augment = app.add_subcommand("augment", "Red triangulation of a min-1-planar drawing");
  augment->add_option("file", file)->required();
  augment->add_option("--out", dest)->required();
  auto* gen = app.add_subcommand("gen", "Write a generated drawing");
  gen->add_option("family", family)->required();
  gen->add_option("--size", size);
  gen->add_option("--seed", seed);
  gen->add_option("--out", dest)->required();
  auto* render = app.add_subcommand("render", "SVG of the planarization");
  render->add_option("file", file)->required();
  render->add_option("--out", dest)->required();
  render->add_option("--k", render_k)->check(CLI::PositiveNumber);
  render->add_flag("--color", color, "Style red/green edges of a min-1-planar drawing");
  auto* assets = app.add_subcommand("assets", "Bundled drawings");
  assets->require_subcommand(1);
  auto* emit = assets->add_subcommand("emit", "Print a bundled drawing");
  emit->add_option("name", name)->required();
  auto* list = assets->add_subcommand("list", "List bundled drawings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage-error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (classify->parsed()) return cmd_classify(file, k, out);
    if (audit->parsed()) return cmd_audit(file, k, out);
    if (charges->parsed()) return cmd_charges(file, mode, out);
    if (augment->parsed()) return cmd_augment(file, dest, out);
    if (gen->parsed()) return cmd_gen(family, size, seed, dest, out);
    if (render->parsed()) return cmd_render(file, dest, render_k, color, out);
    if (list->parsed()) {
      for (const auto& n : asset_names()) out << n << "\n";
      return kOk;
    }
    if (emit->parsed()) {
      if (name == "fig1-pair") {
        out << asset_text("fig1-a") << asset_text("fig1-b");
      } else {
        out << asset_text(name);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mkp
