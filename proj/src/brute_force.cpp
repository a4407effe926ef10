#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "klmprep/optimize.hpp"
#include "klmprep/planner.hpp"

namespace klm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFidelityFloor = 1.0 - 1e-6;
constexpr int kMaxBruteForceQubits = 4;
constexpr int kMaxSteps = kMaxBruteForceQubits - 1;

/// Magnitudes of the conditional split a gate at `phase` produces on a
/// signal qubit prepared at (theta, 0), measured end to end on the
/// simulator rather than read off any closed form.
struct StepResponse {
  double t_mag;  // weight staying on the previous all-ones component
  double e_mag;  // weight moved onto the new all-ones component
};

StepResponse measure_step_response(double theta, double phase) {
  const std::array<QubitParams, 2> init{QubitParams(kPi / 4.0, 0.0),
                                        QubitParams(theta, 0.0)};
  StateVector s = product_state(init);
  s = apply_cphase(std::move(s), 1, 2, phase);
  s = apply_1q(std::move(s), 2, signal_basis_rotation(theta, 0.0));
  // Control weight was sin(pi/4); rescale the conditional branch back to 1.
  return {std::abs(s.amp(2)) * std::numbers::sqrt2,
          std::abs(s.amp(3)) * std::numbers::sqrt2};
}

struct ResponseTable {
  int grid = 0;
  std::vector<double> phi;
  std::vector<double> theta;
  std::vector<StepResponse> data;  // [iphi * grid + itheta]

  const StepResponse* row(int iphi) const { return data.data() + std::size_t(iphi) * grid; }
};

/// The table depends only on the lattice size, so consecutive oracle calls
/// at the same grid share one copy.
std::shared_ptr<const ResponseTable> response_table(int grid) {
  static std::mutex mutex;
  static std::shared_ptr<const ResponseTable> cached;
  std::lock_guard<std::mutex> lock(mutex);
  if (cached && cached->grid == grid) return cached;

  auto table = std::make_shared<ResponseTable>();
  table->grid = grid;
  table->phi.resize(grid);
  table->theta.resize(grid);
  for (int i = 0; i < grid; ++i) {
    table->phi[i] = kPi * i / (grid - 1);
    table->theta[i] = (kPi / 2.0) * i / (grid - 1);
  }
  table->phi.back() = kPi;
  table->theta.back() = kPi / 2.0;
  table->data.resize(std::size_t(grid) * grid);
  for (int ip = 0; ip < grid; ++ip) {
    for (int it = 0; it < grid; ++it) {
      table->data[std::size_t(ip) * grid + it] =
          measure_step_response(table->theta[it], table->phi[ip]);
    }
  }
  cached = table;
  return cached;
}

/// Search state for one target spec.
struct Search {
  const KlmSpec& spec;
  const ResponseTable& table;
  int steps;
  double mag0;             // |alpha_0|
  double carry0;           // sqrt(1 - mag0^2)
  std::vector<double> alpha_mag;  // |alpha_j|
  std::vector<double> rem;        // rem[i] = tail_norm(spec, i + 2)
  std::vector<double> cap;        // cap[iphi]: largest split angle on the row

  // Best lattice point of the current phase tuple.
  double lattice_dot = -1.0;
  std::array<int, kMaxSteps> lattice_idx{};
  std::array<int, kMaxSteps> cur_idx{};
  double trigger_dot = 0.0;

  const StepResponse* rows[kMaxSteps] = {nullptr, nullptr, nullptr};

  explicit Search(const KlmSpec& s, const ResponseTable& t)
      : spec(s), table(t), steps(s.qubit_count() - 1) {
    mag0 = std::min(1.0, std::abs(spec.alpha(0)));
    carry0 = std::sqrt(std::max(0.0, 1.0 - mag0 * mag0));
    for (int j = 0; j <= s.qubit_count(); ++j) {
      alpha_mag.push_back(std::abs(spec.alpha(j)));
    }
    for (int i = 0; i < steps; ++i) rem.push_back(tail_norm(spec, i + 2));
    // A perfectly feasible phase tuple always has a lattice point whose
    // overlap angle is within 2*steps*spacing of zero; the trigger widens
    // that bound twofold before a tuple is dismissed without polishing.
    const double spacing = (kPi / 2.0) / (t.grid - 1);
    trigger_dot = std::cos(std::min(1.0, 4.0 * steps * spacing));

    cap.resize(t.grid);
    // The polish step leaves the lattice, where the split weight can sit up
    // to spacing^2/2 above the sampled row maximum (quadratic peak bound).
    const double cap_slack = spacing * spacing;
    for (int ip = 0; ip < t.grid; ++ip) {
      double e_max = 0.0;
      const StepResponse* row = t.row(ip);
      for (int it = 0; it < t.grid; ++it) e_max = std::max(e_max, row[it].e_mag);
      cap[ip] = std::asin(std::clamp(e_max + cap_slack, 0.0, 1.0));
    }
  }

  /// Upper bound on the overlap any signal angles can reach for a given
  /// phase tuple. Each step moves weight along a unit arc whose opening is
  /// capped by the phase; maximizing stage by stage from the back gives the
  /// arc maximum of a linear functional.
  double reachable_dot_bound(const std::array<int, kMaxSteps>& idx) const {
    double g = alpha_mag[steps + 1];  // alpha_n against the final carry
    for (int i = steps - 1; i >= 0; --i) {
      const double a = alpha_mag[i + 1];
      const double c = cap[idx[i]];
      if (std::atan2(g, a) <= c) {
        g = std::sqrt(a * a + g * g);
      } else {
        g = a * std::cos(c) + g * std::sin(c);
      }
    }
    return mag0 * mag0 + carry0 * g;
  }

  /// Depth-first lattice scan. `dot` and `carry` summarize stages < stage.
  /// Prunes with the Cauchy-Schwarz bound dot + carry * rem, which no
  /// completion of the branch can exceed.
  void scan(int stage, double dot, double carry) {
    const StepResponse* row = rows[stage];
    const bool last = stage == steps - 1;
    for (int it = 0; it < table.grid; ++it) {
      const double new_dot = dot + alpha_mag[stage + 1] * carry * row[it].t_mag;
      const double new_carry = carry * row[it].e_mag;
      const double bound = new_dot + new_carry * rem[stage];
      if (bound <= std::max(lattice_dot, trigger_dot)) continue;
      cur_idx[stage] = it;
      if (last) {
        lattice_dot = bound;  // bound is exact at the final stage
        lattice_idx = cur_idx;
      } else {
        scan(stage + 1, new_dot, new_carry);
      }
    }
  }

  double dot_for(const std::array<double, kMaxSteps>& thetas,
                 const std::array<double, kMaxSteps>& phases) const {
    double dot = mag0 * mag0;
    double carry = carry0;
    for (int i = 0; i < steps; ++i) {
      const StepResponse resp = measure_step_response(thetas[i], phases[i]);
      dot += alpha_mag[i + 1] * carry * resp.t_mag;
      carry *= resp.e_mag;
    }
    return dot + alpha_mag[steps + 1] * carry;
  }

  /// Golden-section coordinate ascent from the best lattice point; the
  /// phase tuple stays fixed. Returns the polished overlap and angles.
  double refine(const std::array<double, kMaxSteps>& phases,
                std::array<double, kMaxSteps>& thetas) const {
    const double spacing = (kPi / 2.0) / (table.grid - 1);
    for (int i = 0; i < steps; ++i) thetas[i] = table.theta[lattice_idx[i]];
    double best = dot_for(thetas, phases);
    for (int sweep = 0; sweep < 3; ++sweep) {
      for (int axis = 0; axis < steps; ++axis) {
        const double lo = std::max(0.0, thetas[axis] - spacing);
        const double hi = std::min(kPi / 2.0, thetas[axis] + spacing);
        auto slice = [&](double x) {
          std::array<double, kMaxSteps> probe = thetas;
          probe[axis] = x;
          return dot_for(probe, phases);
        };
        const ScalarMaximum m = golden_section_maximize(slice, lo, hi, 1e-9);
        if (m.value > best) {
          best = m.value;
          thetas[axis] = m.x;
        }
      }
    }
    return best;
  }
};

PrepPlan assemble_plan(const KlmSpec& spec, std::span<const double> phases,
                       std::span<const double> thetas) {
  const int n = spec.qubit_count();
  const double mag0 = std::min(1.0, std::abs(spec.alpha(0)));
  const QubitParams first_qubit(std::acos(mag0), 0.0);

  std::vector<PrepStep> steps;
  std::vector<QubitParams> init{first_qubit};
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const QubitParams signal(thetas[i], 0.0);
    steps.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 2,
                     phases[i], signal,
                     signal_basis_rotation(signal.theta, signal.phi)});
    init.push_back(signal);
  }

  // Amplitudes before phase repair, read from a bare run of the steps.
  StateVector state = product_state(init);
  for (const PrepStep& step : steps) {
    state = apply_cphase(std::move(state), step.control_qubit, step.new_qubit,
                         step.gate_phase);
    state = apply_1q(std::move(state), step.new_qubit, step.post_rotation);
  }
  std::vector<Amp> achieved(n + 1);
  for (int j = 0; j <= n; ++j) achieved[j] = state.amp(klm_basis_index(j, n));

  return PrepPlan{n,
                  first_qubit,
                  std::move(steps),
                  phase_fix_deltas(spec, achieved),
                  plan_success(phases),
                  spec};
}

}  // namespace

PrepPlan brute_force_plan(const KlmSpec& spec, int grid) {
  const int n = spec.qubit_count();
  if (n > kMaxBruteForceQubits) {
    throw SizeError("brute force search supports at most " +
                    std::to_string(kMaxBruteForceQubits) + " qubits, got " +
                    std::to_string(n));
  }
  if (grid < 2) {
    throw ValidationError("grid needs at least 2 points per axis");
  }
  if (n == 1) {
    return assemble_plan(spec, {}, {});
  }

  const std::shared_ptr<const ResponseTable> table = response_table(grid);
  Search search(spec, *table);
  const int steps = n - 1;

  std::vector<double> p_phi(grid);
  for (int i = 0; i < grid; ++i) p_phi[i] = p_cphase(table->phi[i]);

  double best_success = -1.0;
  std::array<int, kMaxSteps> best_phase_idx{};
  std::array<double, kMaxSteps> best_thetas{};

  // Odometer over all phase tuples, lexicographically. Success depends on
  // the phases alone, so a tuple that cannot beat the incumbent is skipped
  // before any signal-angle work; ties keep the earlier (smaller) tuple.
  const double dot_floor = std::sqrt(kFidelityFloor) - 1e-9;
  std::array<int, kMaxSteps> idx{};
  while (true) {
    double success = 1.0;
    for (int i = 0; i < steps; ++i) success *= p_phi[idx[i]];
    if (success > best_success &&
        search.reachable_dot_bound(idx) >= dot_floor) {
      for (int i = 0; i < steps; ++i) search.rows[i] = table->row(idx[i]);
      search.lattice_dot = -1.0;
      search.scan(0, search.mag0 * search.mag0, search.carry0);
      if (search.lattice_dot >= search.trigger_dot) {
        std::array<double, kMaxSteps> phases{};
        for (int i = 0; i < steps; ++i) phases[i] = table->phi[idx[i]];
        std::array<double, kMaxSteps> thetas{};
        const double dot = search.refine(phases, thetas);
        if (dot * dot >= kFidelityFloor) {
          best_success = success;
          best_phase_idx = idx;
          best_thetas = thetas;
        }
      }
    }
    int axis = steps - 1;
    while (axis >= 0 && ++idx[axis] == grid) idx[axis--] = 0;
    if (axis < 0) break;
  }

  if (best_success < 0.0) {
    throw Error("exhaustive search found no feasible parameters");
  }
  std::vector<double> phases(steps);
  std::vector<double> thetas(steps);
  for (int i = 0; i < steps; ++i) {
    phases[i] = table->phi[best_phase_idx[i]];
    thetas[i] = best_thetas[i];
  }
  return assemble_plan(spec, phases, thetas);
}

}  // namespace klm
