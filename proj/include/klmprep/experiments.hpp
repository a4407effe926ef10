#pragma once

#include <string>
#include <vector>

#include "klmprep/planner.hpp"

namespace klm {

/// Row of the ratio-versus-phase sweep.
struct RatioSweepRow {
  double phi;
  double max_ratio;
  double p_cphase;
};

/// Row of the success-versus-ratio sweep.
struct SuccessSweepRow {
  double r;
  double p_opt;
  double phi_opt;
  double theta_s_opt;
};

/// Samples [phi_min, phi_max] uniformly. Requires
/// 0 <= phi_min < phi_max <= pi and points >= 2.
std::vector<RatioSweepRow> sweep_ratio(double phi_min, double phi_max,
                                       int points);

/// Samples [r_min, r_max] uniformly. Requires 0 < r_min < r_max and
/// points >= 2.
std::vector<SuccessSweepRow> sweep_success(double r_min, double r_max,
                                           int points);

/// CSV with header "phi,max_ratio,p_cphase". Unbounded ratios print as
/// "inf".
std::string ratio_sweep_csv(const std::vector<RatioSweepRow>& rows);

/// CSV with header "r,p_opt,phi_opt,theta_s_opt".
std::string success_sweep_csv(const std::vector<SuccessSweepRow>& rows);

/// Outcome of planning plus end-to-end simulation of one target.
struct VerifyReport {
  double fidelity;
  double total;
  double baseline;
  double improvement_percent;  // 100 * (total / baseline - 1)
};

VerifyReport verify_spec(const KlmSpec& spec, Strategy strategy);

/// {"fidelity", "total", "baseline", "improvement_percent"}; the percentage
/// carries 2 significant digits, everything else 12.
std::string verify_report_json(const VerifyReport& report);

/// Computed strategy switchover next to the 0.54 estimate quoted in the
/// literature.
struct ThresholdReport {
  double r_star;
  double paper_value = 0.54;
};

ThresholdReport threshold_report();
std::string threshold_report_json(const ThresholdReport& report);

}  // namespace klm
