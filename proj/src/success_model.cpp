#include "klmprep/success_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace klm {

namespace {
constexpr double kPi = std::numbers::pi;
}

double p_cphase(double phase) {
  if (!(phase >= 0.0 && phase <= kPi)) {
    throw ValidationError("gate phase must lie in [0, pi], got " +
                          std::to_string(phase));
  }
  const double s = std::abs(std::sin(phase / 2.0));
  const double root =
      1.0 + 2.0 * s + std::pow(2.0, 1.5) * std::sin((kPi - phase) / 4.0) * std::sqrt(s);
  return 1.0 / (root * root);
}

SuccessReport plan_success(std::span<const double> phases) {
  SuccessReport report;
  report.per_step.reserve(phases.size());
  for (double phase : phases) {
    const double p = p_cphase(phase);
    report.per_step.push_back({phase, p});
    report.total *= p;
  }
  report.baseline = std::pow(p_cphase(kPi), static_cast<double>(phases.size()));
  return report;
}

double franson_baseline(int n) {
  if (n < 1) {
    throw ValidationError("qubit count must be at least 1, got " +
                          std::to_string(n));
  }
  return std::pow(p_cphase(kPi), static_cast<double>(n - 1));
}

}  // namespace klm
