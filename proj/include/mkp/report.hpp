#pragma once

#include <string>
#include <vector>

#include "mkp/analysis.hpp"
#include "mkp/discharging.hpp"

namespace mkp {

/// `FORMULA <name> lhs=<p/q> rhs=<p/q> PASS|FAIL`
std::string formula_line(const FormulaLine& f);
/// `XFER <rule> <src-face> <dst-face> <p>/<q>`
std::string xfer_line(const Transfer& t);
/// `EXPECT n=<int> m=<int> crossings=<int> heavy@k=<int>` from measured counts.
std::string expect_line(const TopologicalDrawing& d, int k);

struct ExpectCheck {
  std::string field;
  int expected = 0, measured = 0;
  bool pass() const { return expected == measured; }
};

/// Compares a drawing's EXPECT manifest against measured counts.
std::vector<ExpectCheck> check_expectation(const TopologicalDrawing& d);
/// `EXPECT <field> expected=<int> measured=<int> PASS|FAIL`
std::string expect_check_line(const ExpectCheck& c);

std::vector<std::string> bound_report_lines(const BoundReport& r);

}  // namespace mkp
