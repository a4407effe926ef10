#pragma once

#include <cstddef>
#include <vector>

#include "klmprep/core_state.hpp"

namespace klm {

class KlmSpec;

/// Normalizes raw amplitudes into a KlmSpec. Divides by the Euclidean norm
/// and rotates the global phase so the first nonzero amplitude is real
/// positive, which makes the representation unique.
KlmSpec make_spec(std::vector<Amp> raw);

/// Target KLM state on n qubits: sum_j alpha_j |1>^j |0>^(n-j) with n+1
/// normalized amplitudes alpha_0..alpha_n. Construct via make_spec or
/// family_spec.
class KlmSpec {
 public:
  int qubit_count() const { return static_cast<int>(alphas_.size()) - 1; }
  const std::vector<Amp>& alphas() const { return alphas_; }
  Amp alpha(std::size_t j) const { return alphas_[j]; }

 private:
  friend KlmSpec make_spec(std::vector<Amp> raw);
  explicit KlmSpec(std::vector<Amp> alphas) : alphas_(std::move(alphas)) {}

  std::vector<Amp> alphas_;
};

/// Named amplitude families.
enum class Family {
  kUniform,       // alpha_j = 1/sqrt(n+1), any n >= 1
  kTriangular2q,  // normalized (r, 1, r), n = 2
  kTriangular4q,  // normalized (1, 3, 6, 3, 1), n = 4
};

/// Builds one of the named families. ratio is consulted only for
/// kTriangular2q, where it sets |alpha_0/alpha_1| = r > 0.
KlmSpec family_spec(Family kind, int n, double ratio = 0.0);

/// sqrt(sum_{j>=i} |alpha_j|^2). tail_norm(spec, 0) = 1.
double tail_norm(const KlmSpec& spec, int i);

/// Dense embedding: alpha_j goes to the basis index with j leading ones.
StateVector to_state_vector(const KlmSpec& spec);

/// Same embedding on a wider register; qubits beyond spec.qubit_count()
/// are |0>. Used when a fresh qubit is appended to an existing KLM state.
StateVector to_state_vector(const KlmSpec& spec, int qubit_count);

/// Basis index of |1>^j |0>^(n-j) on n qubits.
std::size_t klm_basis_index(int j, int n);

/// fidelity(state, to_state_vector(spec)).
double fidelity_to_spec(const StateVector& state, const KlmSpec& spec);

}  // namespace klm
