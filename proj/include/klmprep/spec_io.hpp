#pragma once

#include <string>
#include <string_view>

#include "klmprep/klm_model.hpp"
#include "klmprep/planner.hpp"

namespace klm {

/// Formats a double with 12 significant digits; infinities become "inf".
std::string format_number(double value);

/// Parses the on-disk target format {"amplitudes": [[re, im], ...]}.
/// Raises ParseError on malformed JSON or schema violations.
KlmSpec spec_from_json(std::string_view text);

/// Reads and parses a spec file.
KlmSpec load_spec_file(const std::string& path);

/// {"amplitudes": [[re, im], ...]} with 12-significant-digit numbers.
std::string spec_to_json(const KlmSpec& spec);

/// Serializes a plan as a JSON object {target, first_qubit, steps,
/// phase_fix, success}. Angles are radians; numbers carry 12 significant
/// digits, so identical plans serialize byte-identically.
std::string plan_to_json(const PrepPlan& prep_plan);

}  // namespace klm
