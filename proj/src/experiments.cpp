#include "klmprep/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "klmprep/spec_io.hpp"

namespace klm {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = lo + (hi - lo) * i / (points - 1);
  }
  xs.back() = hi;
  return xs;
}

}  // namespace

std::vector<RatioSweepRow> sweep_ratio(double phi_min, double phi_max,
                                       int points) {
  if (!(phi_min >= 0.0 && phi_min < phi_max && phi_max <= kPi)) {
    throw ValidationError("need 0 <= phi_min < phi_max <= pi");
  }
  if (points < 2) throw ValidationError("need at least 2 sweep points");
  std::vector<RatioSweepRow> rows;
  rows.reserve(points);
  for (double phi : linspace(phi_min, phi_max, points)) {
    rows.push_back({phi, max_ratio(phi), p_cphase(phi)});
  }
  return rows;
}

std::vector<SuccessSweepRow> sweep_success(double r_min, double r_max,
                                           int points) {
  if (!(r_min > 0.0 && r_min < r_max) || !std::isfinite(r_max)) {
    throw ValidationError("need 0 < r_min < r_max");
  }
  if (points < 2) throw ValidationError("need at least 2 sweep points");
  std::vector<SuccessSweepRow> rows;
  rows.reserve(points);
  for (double r : linspace(r_min, r_max, points)) {
    const PhaseChoice choice = optimal_phase(r);
    const QubitParams signal = step_params(r, choice.phase);
    rows.push_back({r, choice.p, choice.phase, signal.theta});
  }
  return rows;
}

std::string ratio_sweep_csv(const std::vector<RatioSweepRow>& rows) {
  std::ostringstream out;
  out << "phi,max_ratio,p_cphase\n";
  for (const RatioSweepRow& row : rows) {
    out << format_number(row.phi) << "," << format_number(row.max_ratio) << ","
        << format_number(row.p_cphase) << "\n";
  }
  return out.str();
}

std::string success_sweep_csv(const std::vector<SuccessSweepRow>& rows) {
  std::ostringstream out;
  out << "r,p_opt,phi_opt,theta_s_opt\n";
  for (const SuccessSweepRow& row : rows) {
    out << format_number(row.r) << "," << format_number(row.p_opt) << ","
        << format_number(row.phi_opt) << "," << format_number(row.theta_s_opt)
        << "\n";
  }
  return out.str();
}

VerifyReport verify_spec(const KlmSpec& spec, Strategy strategy) {
  const PrepPlan prep_plan = plan(spec, strategy);
  const SimulationResult sim = simulate_plan(prep_plan);
  const double baseline = franson_baseline(spec.qubit_count());
  return VerifyReport{
      sim.fidelity,
      prep_plan.report.total,
      baseline,
      100.0 * (prep_plan.report.total / baseline - 1.0),
  };
}

std::string verify_report_json(const VerifyReport& report) {
  char percent[32];
  std::snprintf(percent, sizeof(percent), "%.2g", report.improvement_percent);
  std::ostringstream out;
  out << "{\n";
  out << "  \"fidelity\": " << format_number(report.fidelity) << ",\n";
  out << "  \"total\": " << format_number(report.total) << ",\n";
  out << "  \"baseline\": " << format_number(report.baseline) << ",\n";
  out << "  \"improvement_percent\": " << percent << "\n";
  out << "}\n";
  return out.str();
}

ThresholdReport threshold_report() { return ThresholdReport{strategy_threshold()}; }

std::string threshold_report_json(const ThresholdReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"r_star\": " << format_number(report.r_star) << ",\n";
  out << "  \"paper_value\": " << format_number(report.paper_value) << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace klm
