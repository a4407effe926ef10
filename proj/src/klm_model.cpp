#include "klmprep/klm_model.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace klm {

KlmSpec make_spec(std::vector<Amp> raw) {
  if (raw.size() < 2) {
    throw SizeError("a KLM spec needs at least two amplitudes");
  }
  double norm_sq = 0.0;
  for (const Amp& a : raw) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("amplitudes must be finite");
    }
    norm_sq += std::norm(a);
  }
  if (norm_sq == 0.0) {
    throw DegenerateSpecError("all amplitudes are zero");
  }
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (Amp& a : raw) a *= inv_norm;

  // Global-phase canonicalization: first nonzero amplitude real positive.
  for (const Amp& a : raw) {
    if (std::abs(a) > 0.0) {
      const Amp rotation = std::conj(a) / std::abs(a);
      for (Amp& b : raw) b *= rotation;
      break;
    }
  }
  return KlmSpec(std::move(raw));
}

KlmSpec family_spec(Family kind, int n, double ratio) {
  switch (kind) {
    case Family::kUniform: {
      if (n < 1) throw ValidationError("uniform family needs n >= 1");
      return make_spec(std::vector<Amp>(n + 1, Amp{1.0}));
    }
    case Family::kTriangular2q: {
      if (n != 2) throw ValidationError("triangular-2q family is defined for n = 2");
      if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw ValidationError("triangular-2q ratio must be positive and finite");
      }
      return make_spec({Amp{ratio}, Amp{1.0}, Amp{ratio}});
    }
    case Family::kTriangular4q: {
      if (n != 4) throw ValidationError("triangular-4q family is defined for n = 4");
      return make_spec({Amp{1.0}, Amp{3.0}, Amp{6.0}, Amp{3.0}, Amp{1.0}});
    }
  }
  throw ValidationError("unknown family");
}

double tail_norm(const KlmSpec& spec, int i) {
  const int n = spec.qubit_count();
  if (i < 0 || i > n) {
    throw IndexError("tail index " + std::to_string(i) +
                     " out of range for n=" + std::to_string(n));
  }
  double sum = 0.0;
  for (int j = i; j <= n; ++j) sum += std::norm(spec.alpha(j));
  return std::sqrt(sum);
}

std::size_t klm_basis_index(int j, int n) {
  // j leading ones: bits n-1 .. n-j of the index.
  std::size_t idx = 0;
  for (int k = 1; k <= j; ++k) idx |= std::size_t{1} << (n - k);
  return idx;
}

StateVector to_state_vector(const KlmSpec& spec) {
  return to_state_vector(spec, spec.qubit_count());
}

StateVector to_state_vector(const KlmSpec& spec, int qubit_count) {
  const int n = spec.qubit_count();
  if (qubit_count < n || qubit_count > kMaxQubits) {
    throw SizeError("target register must hold between " + std::to_string(n) +
                    " and " + std::to_string(kMaxQubits) + " qubits");
  }
  std::vector<Amp> amps(std::size_t{1} << qubit_count, Amp{0.0});
  for (int j = 0; j <= n; ++j) {
    amps[klm_basis_index(j, qubit_count)] = spec.alpha(j);
  }
  return StateVector::from_amplitudes(qubit_count, std::move(amps));
}

double fidelity_to_spec(const StateVector& state, const KlmSpec& spec) {
  if (state.qubit_count() != spec.qubit_count()) {
    throw SizeError("state and spec qubit counts differ");
  }
  return fidelity(state, to_state_vector(spec));
}

}  // namespace klm
