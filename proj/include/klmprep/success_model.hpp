#pragma once

#include <span>
#include <vector>

#include "klmprep/errors.hpp"

namespace klm {

/// Success probability of one preparation gate at a given phase.
struct StepSuccess {
  double phase;
  double p;
};

/// Success accounting for a whole preparation plan. total is the product of
/// the per-step probabilities; baseline is the all-pi plan of the same
/// length, p_cphase(pi)^steps = (1/9)^steps.
struct SuccessReport {
  std::vector<StepSuccess> per_step;
  double total = 1.0;
  double baseline = 1.0;
};

/// Best heralded success probability of a post-selected linear-optical
/// controlled-phase gate at the given phase shift:
///
///   (1 + 2|sin(phase/2)| + 2^{3/2} sin((pi-phase)/4) |sin(phase/2)|^{1/2})^{-2}
///
/// Equals 1 at phase 0 and 1/9 at phase pi, and is not monotone in between:
/// its minimum (~0.0858 near phase 2.05) lies below 1/9.
double p_cphase(double phase);

/// Per-step and total success for a list of gate phases. An empty list is a
/// zero-gate plan with total 1.
SuccessReport plan_success(std::span<const double> phases);

/// Success of the fixed-phase (all pi) scheme on n qubits: (1/9)^(n-1).
double franson_baseline(int n);

}  // namespace klm
