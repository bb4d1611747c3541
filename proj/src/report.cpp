#include "mkp/report.hpp"

#include <sstream>

namespace mkp {

std::string formula_line(const FormulaLine& f) {
  return "FORMULA " + f.name + " lhs=" + f.lhs.str() + " rhs=" + f.rhs.str() + (f.pass ? " PASS" : " FAIL");
}

std::string xfer_line(const Transfer& t) {
  return "XFER " + t.rule + " " + std::to_string(t.src) + " " + std::to_string(t.dst) + " " + t.amount.fraction_str();
}

std::string expect_line(const TopologicalDrawing& d, int k) {
  std::ostringstream out;
  out << "EXPECT n=" << d.n() << " m=" << d.m() << " crossings=" << d.total_crossings() << " heavy@" << k << "="
      << classify_edges(d, k).heavy;
  return out.str();
}

std::vector<ExpectCheck> check_expectation(const TopologicalDrawing& d) {
  std::vector<ExpectCheck> out;
  if (d.expect.n) out.push_back({"n", *d.expect.n, d.n()});
  if (d.expect.m) out.push_back({"m", *d.expect.m, d.m()});
  if (d.expect.crossings) out.push_back({"crossings", *d.expect.crossings, d.total_crossings()});
  for (auto [k, count] : d.expect.heavy) out.push_back({"heavy@" + std::to_string(k), count, classify_edges(d, k).heavy});
  return out;
}

std::string expect_check_line(const ExpectCheck& c) {
  return "EXPECT " + c.field + " expected=" + std::to_string(c.expected) + " measured=" + std::to_string(c.measured) +
         (c.pass() ? " PASS" : " FAIL");
}

std::vector<std::string> bound_report_lines(const BoundReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream head;
  head << "AUDIT n=" << r.n << " m=" << r.m << " k=" << r.k << " crossings=" << r.crossings << " light=" << r.light
       << " heavy=" << r.heavy << " min_k_planar=" << yn(r.min_k_planar) << " simple=" << yn(r.simple)
       << " bundle_proper=" << yn(r.bundle_proper) << " exceeds_3planar_multigraph=" << yn(r.exceeds_3planar_multigraph);
  std::vector<std::string> lines{head.str()};
  for (const FormulaLine& f : r.formulas) lines.push_back(formula_line(f));
  return lines;
}

}  // namespace mkp
