#include "klmprep/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace klm {

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

KlmSpec spec_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("amplitudes") ||
      !doc["amplitudes"].is_array()) {
    throw ParseError("expected an object with an \"amplitudes\" array");
  }
  std::vector<Amp> raw;
  for (const auto& entry : doc["amplitudes"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw ParseError("each amplitude must be a [re, im] pair of numbers");
    }
    raw.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  try {
    return make_spec(std::move(raw));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid spec: ") + e.what());
  }
}

KlmSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return spec_from_json(buffer.str());
}

namespace {

void emit_amplitudes(std::ostream& out, const std::vector<Amp>& amps,
                     const char* indent) {
  out << "[";
  for (std::size_t j = 0; j < amps.size(); ++j) {
    if (j) out << ",";
    out << "\n" << indent << "  [" << format_number(amps[j].real()) << ", "
        << format_number(amps[j].imag()) << "]";
  }
  out << "\n" << indent << "]";
}

void emit_qubit_params(std::ostream& out, const QubitParams& q) {
  out << "{\"theta\": " << format_number(q.theta)
      << ", \"phi\": " << format_number(q.phi) << "}";
}

}  // namespace

std::string spec_to_json(const KlmSpec& spec) {
  std::ostringstream out;
  out << "{\n  \"amplitudes\": ";
  emit_amplitudes(out, spec.alphas(), "  ");
  out << "\n}\n";
  return out.str();
}

std::string plan_to_json(const PrepPlan& prep_plan) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"target\": {\"amplitudes\": ";
  emit_amplitudes(out, prep_plan.target.alphas(), "  ");
  out << "},\n";
  out << "  \"first_qubit\": ";
  emit_qubit_params(out, prep_plan.first_qubit);
  out << ",\n  \"steps\": [";
  for (std::size_t i = 0; i < prep_plan.steps.size(); ++i) {
    const PrepStep& step = prep_plan.steps[i];
    if (i) out << ",";
    out << "\n    {\"control_qubit\": " << step.control_qubit
        << ", \"new_qubit\": " << step.new_qubit
        << ", \"gate_phase\": " << format_number(step.gate_phase)
        << ", \"signal\": ";
    emit_qubit_params(out, step.signal);
    out << "}";
  }
  out << (prep_plan.steps.empty() ? "],\n" : "\n  ],\n");
  out << "  \"phase_fix\": [";
  for (std::size_t i = 0; i < prep_plan.phase_fix.size(); ++i) {
    if (i) out << ", ";
    out << format_number(prep_plan.phase_fix[i]);
  }
  out << "],\n";
  out << "  \"success\": {\n    \"per_step\": [";
  for (std::size_t i = 0; i < prep_plan.report.per_step.size(); ++i) {
    const StepSuccess& s = prep_plan.report.per_step[i];
    if (i) out << ",";
    out << "\n      {\"phase\": " << format_number(s.phase)
        << ", \"p\": " << format_number(s.p) << "}";
  }
  out << (prep_plan.report.per_step.empty() ? "],\n" : "\n    ],\n");
  out << "    \"total\": " << format_number(prep_plan.report.total) << ",\n";
  out << "    \"baseline\": " << format_number(prep_plan.report.baseline)
      << "\n  }\n}\n";
  return out.str();
}

}  // namespace klm
