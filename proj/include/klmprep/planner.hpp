#pragma once

#include <string_view>
#include <vector>

#include "klmprep/core_state.hpp"
#include "klmprep/gate_algebra.hpp"
#include "klmprep/klm_model.hpp"
#include "klmprep/success_model.hpp"

namespace klm {

/// How per-step gate phases are chosen.
enum class Strategy {
  kOptimal,    // best of the minimal feasible phase and pi, per step
  kFransonPi,  // every gate at pi
  kMinPhase,   // always the minimal feasible phase, even inside the dip
};

Strategy strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy strategy);

/// One preparation step: a controlled-phase gate between the last prepared
/// qubit and a freshly added one, followed by a basis rotation on the new
/// qubit that returns the register to KLM form.
struct PrepStep {
  int control_qubit;
  int new_qubit;
  double gate_phase;
  QubitParams signal;
  Unitary2 post_rotation;
};

/// Executable recipe for preparing a target KLM state from a product input.
/// Holds n-1 steps plus a final layer of n phase gates diag(1, e^{i delta_k})
/// that repairs every relative amplitude phase at once.
struct PrepPlan {
  int n;
  QubitParams first_qubit;
  std::vector<PrepStep> steps;
  std::vector<double> phase_fix;
  SuccessReport report;
  KlmSpec target;
};

/// Per-step amplitude split demands r_i = tail_norm(spec, i+1) / |alpha_i|
/// for i = 1..n-1. A zero tail gives 0; a vanishing alpha_i under a nonzero
/// tail gives +infinity.
std::vector<double> required_ratios(const KlmSpec& spec);

/// A gate phase together with its success probability.
struct PhaseChoice {
  double phase;
  double p;
};

/// Most successful gate phase able to realize split ratio r. The feasible
/// set is [2 atan(r), pi]; because p_cphase dips below its endpoint value
/// 1/9 inside that interval, the optimum is whichever endpoint wins.
PhaseChoice optimal_phase(double r);

/// Split ratio at which the all-pi choice starts to beat the minimal
/// feasible phase, found by bisection to 1e-10. Published estimates put it
/// near 0.54; the bisection lands on 1/sqrt(3) ~ 0.5774.
double strategy_threshold();

/// Signal-qubit parameters realizing |epsilon/tau| = r at the given gate
/// phase: theta_s = asin(u / sin(phase/2)) / 2 with u = r / sqrt(1 + r^2),
/// on the branch theta_s in [0, pi/4]. phi_s is always 0; amplitude phases
/// are handled by the plan's final phase-fix layer.
QubitParams step_params(double r, double phase);

/// Builds the full preparation plan for a target spec.
PrepPlan plan(const KlmSpec& spec, Strategy strategy);

struct SimulationResult {
  StateVector state;
  double fidelity;
};

/// Runs a plan on the dense simulator: qubit 1 starts in first_qubit, every
/// later qubit in its step's signal state; each step applies its gate and
/// post rotation, then the phase-fix layer runs. Returns the final state and
/// its fidelity to the plan's target.
SimulationResult simulate_plan(const PrepPlan& prep_plan);

/// Exhaustive-search oracle for small registers (n <= 4). Gate phases are
/// enumerated on a `grid`-point lattice over [0, pi] per step; for each
/// phase tuple the signal angles are scanned on the same-size lattice over
/// [0, pi/2] and polished by golden-section ascent, keeping only parameter
/// sets whose simulated state reaches fidelity >= 1 - 1e-6 after a
/// per-candidate phase fix. Returns the feasible plan of maximal success,
/// ties broken toward the lexicographically smallest parameter tuple.
PrepPlan brute_force_plan(const KlmSpec& spec, int grid);

/// Result of splitting the last amplitude of a KLM state in two.
struct SplitExtension {
  KlmSpec new_spec;
  PrepStep step;
  std::vector<double> phase_fix;
};

/// Grows an n-qubit KLM state by one qubit, splitting alpha_n into two
/// equal-magnitude halves alpha_n/sqrt(2). The step is a pi/2 gate
/// conjugated by Hadamard-like rotations (signal at theta_s = pi/4) plus
/// the phase corrections listed in phase_fix; its success is p_cphase(pi/2).
SplitExtension extend_equal_split(const KlmSpec& spec);

/// Verifies a split extension on the simulator: embeds the original state
/// on n+1 qubits, runs the step and its phase corrections, and reports
/// fidelity to the extended spec.
SimulationResult simulate_split(const KlmSpec& spec, const SplitExtension& ext);

/// Phase-gate angles delta_1..delta_n solving the triangular system
/// sum_{k<=j} delta_k = arg(target_j) - arg(achieved_j), wrapped into
/// [-pi, pi). Amplitudes smaller than 1e-14 on either side impose no
/// constraint.
std::vector<double> phase_fix_deltas(const KlmSpec& target,
                                     std::span<const Amp> achieved);

}  // namespace klm
