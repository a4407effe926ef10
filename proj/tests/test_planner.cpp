#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "klmprep/optimize.hpp"
#include "klmprep/planner.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace klm;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("required_ratios") {
  const std::vector<double> uniform2 = required_ratios(family_spec(Family::kUniform, 2));
  REQUIRE(uniform2.size() == 1);
  CHECK(uniform2[0] == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> tri2 =
      required_ratios(family_spec(Family::kTriangular2q, 2, 0.25));
  REQUIRE(tri2.size() == 1);
  CHECK(tri2[0] == doctest::Approx(0.25).epsilon(1e-12));

  const std::vector<double> tri4 = required_ratios(family_spec(Family::kTriangular4q, 4));
  REQUIRE(tri4.size() == 3);
  CHECK(tri4[0] == doctest::Approx(std::sqrt(46.0) / 3.0).epsilon(1e-12));
  CHECK(tri4[1] == doctest::Approx(std::sqrt(10.0) / 6.0).epsilon(1e-12));
  CHECK(tri4[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Zero amplitude under a nonzero tail demands an unbounded split; a zero
  // tail demands none at all.
  const std::vector<double> gap = required_ratios(make_spec({Amp{1}, Amp{0}, Amp{1}}));
  REQUIRE(gap.size() == 1);
  CHECK(std::isinf(gap[0]));

  const std::vector<double> early = required_ratios(make_spec({Amp{1}, Amp{1}, Amp{0}}));
  REQUIRE(early.size() == 1);
  CHECK(early[0] == 0.0);
}

TEST_CASE("optimal_phase picks the better interval endpoint") {
  const PhaseChoice quarter = optimal_phase(0.25);
  CHECK(quarter.phase == doctest::Approx(0.4899573262537283).epsilon(1e-12));
  CHECK(quarter.p == doctest::Approx(0.18226924492443372).epsilon(1e-12));

  const PhaseChoice unit = optimal_phase(1.0);
  CHECK(unit.phase == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(unit.p == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  const PhaseChoice third = optimal_phase(1.0 / 3.0);
  CHECK(third.phase == doctest::Approx(0.6435011087932844).epsilon(1e-12));
  CHECK(third.p == doctest::Approx(0.15229488195713148).epsilon(1e-12));

  CHECK(optimal_phase(0.0).phase == 0.0);
  CHECK(optimal_phase(0.0).p == 1.0);
  CHECK(optimal_phase(kInf).phase == doctest::Approx(kPi));
  CHECK(optimal_phase(kInf).p == doctest::Approx(1.0 / 9.0));
  CHECK_THROWS_AS(optimal_phase(-0.5), ValidationError);
}

TEST_CASE("optimal_phase agrees with grid-seeded golden-section search") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ratio(0.01, 4.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double r = ratio(rng);
    const double lo = 2.0 * std::atan(r);
    const ScalarMaximum oracle =
        grid_seeded_maximize([](double phi) { return p_cphase(phi); }, lo, kPi, 512);
    const PhaseChoice choice = optimal_phase(r);
    CHECK(std::abs(choice.p - oracle.value) <= 1e-9);
  }
}

TEST_CASE("strategy_threshold sits at the published switchover") {
  const double r_star = strategy_threshold();
  CHECK(r_star > 0.45);
  CHECK(r_star < 0.65);
  // Independent dense-scan oracle.
  const double scanned = klm::testing::threshold_scan_oracle();
  CHECK(std::abs(r_star - scanned) <= 1e-6);
  // The crossing is exactly tan(pi/6): the success denominator returns to 3
  // at phase pi/3.
  CHECK(std::abs(r_star - std::tan(kPi / 6.0)) <= 1e-8);

  CHECK(optimal_phase(r_star - 0.01).phase < kPi);
  CHECK(optimal_phase(r_star + 0.01).phase == doctest::Approx(kPi));
}

TEST_CASE("step_params inverts the split ratio") {
  CHECK(step_params(1.0, kPi).theta == doctest::Approx(kPi / 8.0).epsilon(1e-12));
  CHECK(step_params(0.0, 1.3).theta == 0.0);
  for (double phase : {0.4, kPi / 2.0, 2.0, 2.8}) {
    const double boundary = std::tan(phase / 2.0);
    CHECK(step_params(boundary, phase).theta ==
          doctest::Approx(kPi / 4.0).epsilon(1e-9));
  }
  CHECK(step_params(kInf, kPi).theta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK_THROWS_AS(step_params(1.2, kPi / 2.0), FeasibilityError);
  CHECK_THROWS_AS(step_params(-1.0, kPi), ValidationError);

  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> gate_phase(0.15, kPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double phase = gate_phase(rng);
    const double r = unit(rng) * std::tan(phase / 2.0);
    const QubitParams signal = step_params(r, phase);
    CHECK(signal.phi == 0.0);
    CHECK(signal.theta <= kPi / 4.0 + 1e-12);
    const double achieved =
        klm::testing::split_ratio_by_simulation(signal.theta, phase);
    CHECK(std::abs(achieved - r) <= 1e-10 * std::max(1.0, r));
  }
}

TEST_CASE("plan reproduces the worked success probabilities") {
  const KlmSpec tri2 = family_spec(Family::kTriangular2q, 2, 0.25);
  const PrepPlan best2 = plan(tri2, Strategy::kOptimal);
  CHECK(best2.report.total == doctest::Approx(0.18226924492443372).epsilon(1e-12));
  CHECK(best2.report.baseline == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(best2.report.total / best2.report.baseline - 1.0 > 0.60);

  const KlmSpec tri4 = family_spec(Family::kTriangular4q, 4);
  const PrepPlan best4 = plan(tri4, Strategy::kOptimal);
  CHECK(best4.report.total == doctest::Approx(0.001970793113668849).epsilon(1e-12));
  REQUIRE(best4.steps.size() == 3);
  CHECK(best4.steps[0].gate_phase == doctest::Approx(kPi));
  CHECK(best4.steps[1].gate_phase == doctest::Approx(0.9700995738589658).epsilon(1e-12));
  CHECK(best4.steps[2].gate_phase == doctest::Approx(0.6435011087932844).epsilon(1e-12));

  const PrepPlan fixed4 = plan(tri4, Strategy::kFransonPi);
  CHECK(fixed4.report.total == doctest::Approx(franson_baseline(4)).epsilon(1e-12));

  // A ratio above the switchover leaves nothing to gain over all-pi.
  const KlmSpec uniform = family_spec(Family::kUniform, 2);
  const PrepPlan flat = plan(uniform, Strategy::kOptimal);
  CHECK(flat.report.total == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(flat.steps[0].gate_phase == doctest::Approx(kPi));

  const KlmSpec big = make_spec(std::vector<Amp>(26, Amp{1.0}));
  CHECK_THROWS_AS(plan(big, Strategy::kOptimal), SizeError);
}

TEST_CASE("plans simulate back to their targets exactly") {
  const KlmSpec tri4 = family_spec(Family::kTriangular4q, 4);
  for (Strategy strategy :
       {Strategy::kOptimal, Strategy::kFransonPi, Strategy::kMinPhase}) {
    const SimulationResult sim = simulate_plan(plan(tri4, strategy));
    CHECK(sim.fidelity >= 1.0 - 1e-9);
  }

  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    const SimulationResult sim = simulate_plan(plan(spec, Strategy::kFransonPi));
    CHECK(sim.fidelity >= 1.0 - 1e-9);
  }
}

TEST_CASE("plan handles vanishing amplitudes and single qubits") {
  // alpha_1 = 0 forces a full transfer through a pi gate.
  const KlmSpec gap = make_spec({Amp{1}, Amp{0}, Amp{1}});
  const PrepPlan gap_plan = plan(gap, Strategy::kOptimal);
  CHECK(gap_plan.steps[0].gate_phase == doctest::Approx(kPi));
  CHECK(gap_plan.steps[0].signal.theta == doctest::Approx(kPi / 4.0));
  CHECK(simulate_plan(gap_plan).fidelity >= 1.0 - 1e-9);

  // A zero tail ends the chain with free identity steps.
  const KlmSpec early = make_spec({Amp{3}, Amp{4}, Amp{0}, Amp{0}});
  const PrepPlan early_plan = plan(early, Strategy::kOptimal);
  REQUIRE(early_plan.steps.size() == 2);
  CHECK(early_plan.steps[0].gate_phase == 0.0);
  CHECK(early_plan.steps[1].gate_phase == 0.0);
  CHECK(early_plan.report.total == 1.0);
  CHECK(simulate_plan(early_plan).fidelity >= 1.0 - 1e-9);

  // One qubit: no gates, phase fix only.
  const KlmSpec single = make_spec({Amp{0.6}, Amp{0.0, 0.8}});
  const PrepPlan single_plan = plan(single, Strategy::kOptimal);
  CHECK(single_plan.steps.empty());
  CHECK(single_plan.report.total == 1.0);
  CHECK(simulate_plan(single_plan).fidelity >= 1.0 - 1e-12);
}

TEST_CASE("the phase-fix layer matches amplitudes, not just fidelity") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    for (Strategy strategy :
         {Strategy::kOptimal, Strategy::kFransonPi, Strategy::kMinPhase}) {
      const SimulationResult sim = simulate_plan(plan(spec, strategy));
      for (int j = 0; j <= n; ++j) {
        const Amp achieved = sim.state.amp(klm_basis_index(j, n));
        CHECK(std::abs(achieved - spec.alpha(j)) <= 1e-9);
        if (std::abs(spec.alpha(j)) > 1e-6) {
          const double arg_gap =
              wrap_angle(std::arg(achieved) - std::arg(spec.alpha(j)));
          CHECK(std::abs(arg_gap) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("success depends only on the required ratios, never on phases") {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    std::vector<Amp> scrambled = spec.alphas();
    for (Amp& a : scrambled) a *= std::polar(1.0, angle(rng));
    const KlmSpec twin = make_spec(std::move(scrambled));
    const PrepPlan original = plan(spec, Strategy::kOptimal);
    const PrepPlan rephased = plan(twin, Strategy::kOptimal);
    CHECK(std::abs(original.report.total - rephased.report.total) <= 1e-14);
  }
}

TEST_CASE("the optimal strategy dominates the all-pi baseline") {
  std::mt19937_64 rng(66);
  const double r_star = strategy_threshold();
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    const PrepPlan best = plan(spec, Strategy::kOptimal);
    const PrepPlan base = plan(spec, Strategy::kFransonPi);
    CHECK(best.report.total >= base.report.total - 1e-12);

    bool all_above = true;
    for (double r : required_ratios(spec)) {
      if (r < r_star) all_above = false;
    }
    if (all_above) {
      CHECK(std::abs(best.report.total - base.report.total) <= 1e-12);
    }
  }
}

TEST_CASE("plan feasibility never fails when phases come from optimal_phase") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    CHECK_NOTHROW(plan(spec, Strategy::kOptimal));
    CHECK_NOTHROW(plan(spec, Strategy::kMinPhase));
  }
}

TEST_CASE("extend_equal_split halves the last amplitude") {
  const KlmSpec uniform = family_spec(Family::kUniform, 2);
  const SplitExtension ext = extend_equal_split(uniform);
  REQUIRE(ext.new_spec.qubit_count() == 3);
  const double third = 1.0 / std::sqrt(3.0);
  const double sixth = 1.0 / std::sqrt(6.0);
  CHECK(std::abs(ext.new_spec.alpha(0) - third) <= 1e-12);
  CHECK(std::abs(ext.new_spec.alpha(1) - third) <= 1e-12);
  CHECK(std::abs(ext.new_spec.alpha(2) - sixth) <= 1e-12);
  CHECK(std::abs(ext.new_spec.alpha(3) - sixth) <= 1e-12);

  CHECK(ext.step.gate_phase == doctest::Approx(kPi / 2.0));
  CHECK(ext.step.signal.theta == doctest::Approx(kPi / 4.0));
  CHECK(p_cphase(ext.step.gate_phase) == doctest::Approx(0.09048).epsilon(2e-4));

  const SimulationResult sim = simulate_split(uniform, ext);
  CHECK(sim.fidelity >= 1.0 - 1e-9);

  const KlmSpec lone = make_spec({Amp{0}, Amp{1}});
  const SplitExtension pure = extend_equal_split(lone);
  CHECK(std::abs(pure.new_spec.alpha(0)) == 0.0);
  CHECK(std::abs(pure.new_spec.alpha(1) - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(pure.new_spec.alpha(2) - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(simulate_split(lone, pure).fidelity >= 1.0 - 1e-9);

  CHECK_THROWS_AS(extend_equal_split(make_spec({Amp{1}, Amp{0}})),
                  DegenerateSplitError);
}

TEST_CASE("split extensions verify for random specs") {
  std::mt19937_64 rng(68);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const KlmSpec spec = klm::testing::random_spec(rng, n);
    if (std::abs(spec.alpha(n)) < 1e-3) continue;
    const SplitExtension ext = extend_equal_split(spec);
    CHECK(simulate_split(spec, ext).fidelity >= 1.0 - 1e-9);
  }
}

TEST_CASE("strategy names round-trip") {
  CHECK(strategy_from_name("optimal") == Strategy::kOptimal);
  CHECK(strategy_from_name("franson-pi") == Strategy::kFransonPi);
  CHECK(strategy_from_name("min-phase") == Strategy::kMinPhase);
  CHECK(strategy_name(Strategy::kOptimal) == "optimal");
  CHECK_THROWS_AS(strategy_from_name("fastest"), ValidationError);
}
