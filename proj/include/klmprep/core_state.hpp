#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "klmprep/errors.hpp"

namespace klm {

/// Complex amplitude. All stored amplitudes are finite (no NaN/Inf).
using Amp = std::complex<double>;

/// Largest register the dense simulator accepts (2^24 amplitudes, ~256 MiB).
inline constexpr int kMaxQubits = 24;

/// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

/// Single-qubit pure state cos(theta)|0> + e^{i phi} sin(theta)|1>.
///
/// theta must lie in [0, pi/2]; phi is canonicalized into [-pi, pi) on
/// construction.
struct QubitParams {
  double theta = 0.0;
  double phi = 0.0;

  QubitParams() = default;
  QubitParams(double theta_in, double phi_in);
};

/// 2x2 complex matrix, row-major.
struct Unitary2 {
  std::array<Amp, 4> m{Amp{1.0}, Amp{0.0}, Amp{0.0}, Amp{1.0}};

  Amp operator()(int row, int col) const { return m[2 * row + col]; }
  Amp& operator()(int row, int col) { return m[2 * row + col]; }
};

/// Conjugate transpose.
Unitary2 adjoint(const Unitary2& u);

/// True if u'u = I entrywise within tol.
bool is_unitary(const Unitary2& u, double tol);

/// Dense pure state of an n-qubit register.
///
/// Qubits are numbered 1..n. Qubit 1 is the most significant bit of the
/// amplitude index, so basis state |q1 q2 ... qn> lives at index
/// sum_k q_k 2^(n-k).
class StateVector {
 public:
  /// |00...0> on n qubits.
  explicit StateVector(int n);

  /// Adopts a raw amplitude array of length 2^n.
  static StateVector from_amplitudes(int n, std::vector<Amp> amps);

  int qubit_count() const { return n_; }
  std::size_t size() const { return amps_.size(); }

  Amp amp(std::size_t index) const { return amps_[index]; }
  Amp& amp(std::size_t index) { return amps_[index]; }
  std::span<const Amp> amplitudes() const { return amps_; }

  double norm_sq() const;

 private:
  int n_;
  std::vector<Amp> amps_;
};

/// Tensor product of single-qubit states, in listed order (first entry
/// becomes qubit 1). Unit norm by construction.
StateVector product_state(std::span<const QubitParams> params);

/// Applies u to qubit k, leaving the others untouched. u must pass the
/// unitarity check at tolerance 1e-9.
StateVector apply_1q(StateVector state, int k, const Unitary2& u);

/// Controlled-phase gate: multiplies every amplitude with q_i = q_j = 1 by
/// e^{i phase}. Symmetric in (i, j); phase is restricted to [0, pi].
StateVector apply_cphase(StateVector state, int i, int j, double phase);

/// |<a|b>|^2. Symmetric and insensitive to global phase of either argument.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace klm
