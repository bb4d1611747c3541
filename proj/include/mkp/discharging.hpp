#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mkp/analysis.hpp"
#include "mkp/planarization.hpp"
#include "mkp/rational.hpp"

namespace mkp {

struct ChargeLedger {
  std::vector<Rational> charge;  // indexed by face id
  int n = 0;
  std::string phase;
  Rational total() const;
};

/// ch(f) = 2 deg_r + deg_c - 4; throws "charge-identity-failure" if the sum is not 4n - 8.
ChargeLedger initial_charges(const Planarization& p);

struct DemandPath {
  std::vector<int> faces;  // f_0 .. f_p
  std::vector<Dart> edges;  // e_i as a dart of faces[i]
  int terminal() const { return faces.back(); }
  int length() const { return static_cast<int>(edges.size()); }
};

/// Walks from f0 across its 0-real edge e0 through 0-real quadrilaterals.
/// Throws "bad-demand-edge" if e0 is not a 0-real dart of f0, "cyclic-channel" on a repeat.
DemandPath demand_path(const Planarization& p, int f0, Dart e0);

struct Transfer {
  std::string rule;
  int src = 0, dst = 0;
  Rational amount;
  /// Planarization segments the charge is moved across, in order.
  std::vector<int> segments;
  /// Crossing node the charge is moved through, or -1.
  NodeId vertex = -1;
};

struct PreconditionViolation {
  std::string rule;
  int face = 0;
  std::string reason;
};

/// Log predicates for the min-3 pipeline.
struct Min3LogChecks {
  bool zero_real_channels = true;  // steps 1 and 3 cross only 0-real segments
  bool one_real_channels = true;   // step 2 crosses only 1-real segments
  bool no_two_real = true;         // nothing crosses a 2-real segment
  bool step3_bounded = true;       // step 3 amounts are at most 1/3
  bool all() const { return zero_real_channels && one_real_channels && no_two_real && step3_bounded; }
};

struct DischargeOutcome {
  Rational alpha;
  int n = 0, m = 0;
  ChargeLedger initial;
  ChargeLedger final_ledger;
  std::vector<Transfer> log;
  /// One entry per face: lhs = ch'(f), rhs = alpha deg_r(f), pass iff lhs >= rhs.
  std::vector<FormulaLine> c1;
  std::vector<PreconditionViolation> violations;
  /// Preconditions that were waived in relaxed mode.
  std::vector<std::string> waived;
  std::optional<Min3LogChecks> log_checks;
  bool conserved() const { return initial.total() == final_ledger.total(); }
  bool c1_pass() const;
};

struct DischargeOptions {
  /// Relaxed mode reports failed class preconditions in `waived` instead of throwing.
  bool strict = true;
};

DischargeOutcome run_min2_discharging(const Planarization& p, const DischargeOptions& options = {});
DischargeOutcome run_min3_discharging(const Planarization& p, const DischargeOptions& options = {});

struct DensityBound {
  Rational bound;
  bool holds = false;
};

/// (2/alpha)(n - 2) and whether m stays within it; "certificate-invalid" if C1 or C2 fails.
DensityBound density_bound_from_ledger(const DischargeOutcome& outcome, const Rational& alpha);

struct Min1Audit {
  int n = 0;
  int red_faces = 0;
  int green = 0;
  int heavy = 0;
  /// Largest number of distinct green edges crossing one red face.
  int max_green_per_face = 0;
  std::vector<FormulaLine> formulas;
  bool all_pass() const;
};

/// Counting audit behind the min-1 density and heavy-edge bounds.
/// Throws "red-not-triangulated" if some red face does not have degree three.
Min1Audit min1_face_audits(const TopologicalDrawing& d);

}  // namespace mkp
