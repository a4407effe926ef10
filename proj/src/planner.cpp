#include "klmprep/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace klm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroAmp = 1e-14;

double min_feasible_phase(double r) {
  if (r == 0.0) return 0.0;
  if (std::isinf(r)) return kPi;
  return 2.0 * std::atan(r);
}

double pick_phase(double r, Strategy strategy) {
  switch (strategy) {
    case Strategy::kOptimal:
      return optimal_phase(r).phase;
    case Strategy::kFransonPi:
      return kPi;
    case Strategy::kMinPhase:
      return min_feasible_phase(r);
  }
  throw ValidationError("unknown strategy");
}

}  // namespace

Strategy strategy_from_name(std::string_view name) {
  if (name == "optimal") return Strategy::kOptimal;
  if (name == "franson-pi") return Strategy::kFransonPi;
  if (name == "min-phase") return Strategy::kMinPhase;
  throw ValidationError("unknown strategy '" + std::string(name) +
                        "'; expected optimal, franson-pi or min-phase");
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kOptimal:
      return "optimal";
    case Strategy::kFransonPi:
      return "franson-pi";
    case Strategy::kMinPhase:
      return "min-phase";
  }
  return "unknown";
}

std::vector<double> required_ratios(const KlmSpec& spec) {
  const int n = spec.qubit_count();
  std::vector<double> ratios;
  ratios.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    const double tail = tail_norm(spec, i + 1);
    const double mag = std::abs(spec.alpha(i));
    if (tail == 0.0) {
      ratios.push_back(0.0);
    } else if (mag == 0.0) {
      ratios.push_back(std::numeric_limits<double>::infinity());
    } else {
      ratios.push_back(tail / mag);
    }
  }
  return ratios;
}

PhaseChoice optimal_phase(double r) {
  if (std::isnan(r) || r < 0.0) {
    throw ValidationError("split ratio must be nonnegative");
  }
  if (r == 0.0) return {0.0, 1.0};
  const double p_pi = p_cphase(kPi);
  if (std::isinf(r)) return {kPi, p_pi};
  const double phase_min = 2.0 * std::atan(r);
  const double p_min = p_cphase(phase_min);
  if (p_pi >= p_min) return {kPi, p_pi};
  return {phase_min, p_min};
}

double strategy_threshold() {
  const double p_pi = p_cphase(kPi);
  const auto excess = [p_pi](double r) {
    return p_cphase(2.0 * std::atan(r)) - p_pi;
  };
  double lo = 0.3;
  double hi = 0.9;
  // excess is positive at lo and negative at hi; halve until 1e-10 wide.
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

QubitParams step_params(double r, double phase) {
  if (std::isnan(r) || r < 0.0) {
    throw ValidationError("split ratio must be nonnegative");
  }
  const double cap = max_ratio(phase);
  if (!(r <= cap * (1.0 + 1e-9) + 1e-12)) {
    throw FeasibilityError("ratio " + std::to_string(r) +
                           " is not reachable at gate phase " +
                           std::to_string(phase));
  }
  if (r == 0.0) return QubitParams(0.0, 0.0);
  const double u = std::isinf(r) ? 1.0 : r / std::sqrt(1.0 + r * r);
  double x = std::clamp(u / std::sin(phase / 2.0), 0.0, 1.0);
  // asin is steep at 1; land exactly on pi/4 when the phase sits at the
  // feasibility boundary 2 atan(r).
  if (x > 1.0 - 1e-13) x = 1.0;
  return QubitParams(0.5 * std::asin(x), 0.0);
}

std::vector<double> phase_fix_deltas(const KlmSpec& target,
                                     std::span<const Amp> achieved) {
  const int n = target.qubit_count();
  if (achieved.size() != static_cast<std::size_t>(n) + 1) {
    throw SizeError("achieved amplitude count must be n+1");
  }
  std::vector<double> deltas(n);
  double applied = 0.0;  // cumulative phase on |1>^j after gates 1..j
  for (int j = 1; j <= n; ++j) {
    double want = applied;
    if (std::abs(target.alpha(j)) > kZeroAmp &&
        std::abs(achieved[j]) > kZeroAmp) {
      want = std::arg(target.alpha(j)) - std::arg(achieved[j]);
    }
    deltas[j - 1] = wrap_angle(want - applied);
    applied += deltas[j - 1];
  }
  return deltas;
}

PrepPlan plan(const KlmSpec& spec, Strategy strategy) {
  const int n = spec.qubit_count();
  if (n > kMaxQubits) {
    throw SizeError("planning supports at most " + std::to_string(kMaxQubits) +
                    " qubits, got " + std::to_string(n));
  }

  const double mag0 = std::min(1.0, std::abs(spec.alpha(0)));
  const QubitParams first_qubit(std::acos(mag0), 0.0);

  const std::vector<double> ratios = required_ratios(spec);
  std::vector<double> phases(ratios.size());
  std::vector<PrepStep> steps;
  steps.reserve(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    phases[i] = pick_phase(ratios[i], strategy);
    const QubitParams signal = step_params(ratios[i], phases[i]);
    steps.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 2,
                     phases[i], signal,
                     signal_basis_rotation(signal.theta, signal.phi)});
  }

  // Closed-form amplitudes the steps produce before any phase repair. The
  // carry tracks the all-ones prefix component that later steps keep
  // splitting.
  std::vector<Amp> achieved(n + 1);
  achieved[0] = Amp{mag0};
  Amp carry{std::sin(first_qubit.theta)};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TauEpsilon te =
        tau_epsilon(steps[i].signal.theta, steps[i].signal.phi, phases[i]);
    achieved[i + 1] = carry * te.tau;
    carry *= te.epsilon;
  }
  achieved[n] = carry;

  return PrepPlan{n,
                  first_qubit,
                  std::move(steps),
                  phase_fix_deltas(spec, achieved),
                  plan_success(phases),
                  spec};
}

SimulationResult simulate_plan(const PrepPlan& prep_plan) {
  std::vector<QubitParams> init;
  init.reserve(prep_plan.n);
  init.push_back(prep_plan.first_qubit);
  for (const PrepStep& step : prep_plan.steps) init.push_back(step.signal);

  StateVector state = product_state(init);
  for (const PrepStep& step : prep_plan.steps) {
    state = apply_cphase(std::move(state), step.control_qubit, step.new_qubit,
                         step.gate_phase);
    state = apply_1q(std::move(state), step.new_qubit, step.post_rotation);
  }
  for (int k = 1; k <= prep_plan.n; ++k) {
    state = apply_1q(std::move(state), k, phase_gate(prep_plan.phase_fix[k - 1]));
  }
  const double fid = fidelity_to_spec(state, prep_plan.target);
  return {std::move(state), fid};
}

SplitExtension extend_equal_split(const KlmSpec& spec) {
  const int n = spec.qubit_count();
  const Amp last = spec.alpha(n);
  if (std::abs(last) == 0.0) {
    throw DegenerateSplitError("cannot split a vanishing last amplitude");
  }
  if (n + 1 > kMaxQubits) {
    throw SizeError("split would exceed the supported register size");
  }

  std::vector<Amp> amps = spec.alphas();
  const Amp half = last / std::sqrt(2.0);
  amps.back() = half;
  amps.push_back(half);
  KlmSpec new_spec = make_spec(std::move(amps));

  const QubitParams signal(kPi / 4.0, 0.0);
  const PrepStep step{n, n + 1, kPi / 2.0, signal,
                      signal_basis_rotation(signal.theta, signal.phi)};

  // tau and epsilon of the pi/2 gate at theta_s = pi/4 are (1+i)/2 and
  // (1-i)/2: equal magnitudes 1/sqrt(2), but with phases the corrections
  // below must undo.
  const TauEpsilon te = tau_epsilon(signal.theta, signal.phi, step.gate_phase);
  std::vector<Amp> achieved(spec.alphas().begin(), spec.alphas().end() - 1);
  achieved.push_back(last * te.tau);
  achieved.push_back(last * te.epsilon);

  std::vector<double> fix = phase_fix_deltas(new_spec, achieved);
  return SplitExtension{std::move(new_spec), step, std::move(fix)};
}

SimulationResult simulate_split(const KlmSpec& spec, const SplitExtension& ext) {
  const int n = spec.qubit_count();
  StateVector state = to_state_vector(spec, n + 1);
  // Fresh qubit leaves |0> for the step's signal state.
  state = apply_1q(std::move(state), n + 1, adjoint(ext.step.post_rotation));
  state = apply_cphase(std::move(state), ext.step.control_qubit,
                       ext.step.new_qubit, ext.step.gate_phase);
  state = apply_1q(std::move(state), ext.step.new_qubit, ext.step.post_rotation);
  for (int k = 1; k <= n + 1; ++k) {
    state = apply_1q(std::move(state), k, phase_gate(ext.phase_fix[k - 1]));
  }
  const double fid = fidelity_to_spec(state, ext.new_spec);
  return {std::move(state), fid};
}

}  // namespace klm
