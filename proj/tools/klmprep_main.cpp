#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "klmprep/experiments.hpp"
#include "klmprep/spec_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw klm::ParseError("cannot open output file: " + path);
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Plans, optimizes and verifies the preparation of n-qubit KLM states "
      "with tunable controlled-phase gates"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string output;
  std::string strategy = "optimal";
  double min_value = 0.0;
  double max_value = 0.0;
  int points = 1000;

  CLI::App* plan_cmd = app.add_subcommand("plan", "Emit a preparation plan as JSON");
  plan_cmd->add_option("spec", spec_path, "target spec JSON file")->required();
  plan_cmd->add_option("--strategy", strategy,
                       "optimal, franson-pi or min-phase")
      ->capture_default_str();
  plan_cmd->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Plan, simulate and report fidelity and success");
  verify_cmd->add_option("spec", spec_path, "target spec JSON file")->required();
  verify_cmd->add_option("--strategy", strategy,
                         "optimal, franson-pi or min-phase")
      ->capture_default_str();
  verify_cmd->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* ratio_cmd = app.add_subcommand(
      "sweep-ratio", "CSV of the largest reachable split ratio per gate phase");
  double phi_min = 0.0;
  double phi_max = std::numbers::pi;
  ratio_cmd->add_option("--min", phi_min, "lowest phase (radians)")
      ->capture_default_str();
  ratio_cmd->add_option("--max", phi_max, "highest phase (radians)")
      ->capture_default_str();
  ratio_cmd->add_option("--points", points, "number of rows")
      ->capture_default_str();
  ratio_cmd->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* success_cmd = app.add_subcommand(
      "sweep-success",
      "CSV of the best success probability and settings per split ratio");
  min_value = 0.01;
  max_value = 3.0;
  success_cmd->add_option("--min", min_value, "lowest ratio")
      ->capture_default_str();
  success_cmd->add_option("--max", max_value, "highest ratio")
      ->capture_default_str();
  success_cmd->add_option("--points", points, "number of rows")
      ->capture_default_str();
  success_cmd->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* threshold_cmd = app.add_subcommand(
      "threshold", "Split ratio where the all-pi strategy takes over");
  threshold_cmd->add_option("--output", output,
                            "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (plan_cmd->parsed()) {
      const klm::KlmSpec spec = klm::load_spec_file(spec_path);
      const klm::PrepPlan prep_plan =
          klm::plan(spec, klm::strategy_from_name(strategy));
      write_output(output, klm::plan_to_json(prep_plan));
    } else if (verify_cmd->parsed()) {
      const klm::KlmSpec spec = klm::load_spec_file(spec_path);
      const klm::VerifyReport report =
          klm::verify_spec(spec, klm::strategy_from_name(strategy));
      if (report.fidelity < 1.0 - 1e-9) {
        std::cerr << "error: simulated fidelity " << report.fidelity
                  << " fell below 1 - 1e-9; the planner and simulator disagree\n";
        return kExitInternal;
      }
      write_output(output, klm::verify_report_json(report));
    } else if (ratio_cmd->parsed()) {
      write_output(output,
                   klm::ratio_sweep_csv(klm::sweep_ratio(phi_min, phi_max, points)));
    } else if (success_cmd->parsed()) {
      write_output(output, klm::success_sweep_csv(
                               klm::sweep_success(min_value, max_value, points)));
    } else if (threshold_cmd->parsed()) {
      write_output(output, klm::threshold_report_json(klm::threshold_report()));
    }
  } catch (const klm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
