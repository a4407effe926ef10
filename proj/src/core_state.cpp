#include "klmprep/core_state.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace klm {

namespace {

constexpr double kPi = std::numbers::pi;

bool bit_set(std::size_t index, int qubit, int n) {
  return (index >> (n - qubit)) & 1u;
}

}  // namespace

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w >= kPi) w -= 2.0 * kPi;
  if (w < -kPi) w += 2.0 * kPi;
  return w;
}

QubitParams::QubitParams(double theta_in, double phi_in)
    : theta(theta_in), phi(wrap_angle(phi_in)) {
  if (!(theta_in >= 0.0 && theta_in <= kPi / 2.0)) {
    throw ValidationError("qubit theta must lie in [0, pi/2], got " +
                          std::to_string(theta_in));
  }
  if (!std::isfinite(phi_in)) {
    throw ValidationError("qubit phi must be finite");
  }
}

Unitary2 adjoint(const Unitary2& u) {
  Unitary2 a;
  a(0, 0) = std::conj(u(0, 0));
  a(0, 1) = std::conj(u(1, 0));
  a(1, 0) = std::conj(u(0, 1));
  a(1, 1) = std::conj(u(1, 1));
  return a;
}

bool is_unitary(const Unitary2& u, double tol) {
  const Unitary2 a = adjoint(u);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amp e = a(r, 0) * u(0, c) + a(r, 1) * u(1, c);
      if (r == c) e -= 1.0;
      if (std::abs(e) > tol) return false;
    }
  }
  return true;
}

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("qubit count must lie in [1, " +
                    std::to_string(kMaxQubits) + "], got " + std::to_string(n));
  }
  amps_.assign(std::size_t{1} << n, Amp{0.0});
  amps_[0] = Amp{1.0};
}

StateVector StateVector::from_amplitudes(int n, std::vector<Amp> amps) {
  StateVector s(n);
  if (amps.size() != s.size()) {
    throw SizeError("amplitude array must have length 2^n");
  }
  s.amps_ = std::move(amps);
  return s;
}

double StateVector::norm_sq() const {
  double sum = 0.0;
  for (const Amp& a : amps_) sum += std::norm(a);
  return sum;
}

StateVector product_state(std::span<const QubitParams> params) {
  if (params.empty() || params.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw SizeError("product state needs between 1 and " +
                    std::to_string(kMaxQubits) + " qubits, got " +
                    std::to_string(params.size()));
  }
  const int n = static_cast<int>(params.size());
  std::vector<Amp> amps{Amp{1.0}};
  for (const QubitParams& q : params) {
    const Amp zero{std::cos(q.theta)};
    const Amp one = std::polar(std::sin(q.theta), q.phi);
    std::vector<Amp> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * zero;
      next[2 * i + 1] = amps[i] * one;
    }
    amps = std::move(next);
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector apply_1q(StateVector state, int k, const Unitary2& u) {
  const int n = state.qubit_count();
  if (k < 1 || k > n) {
    throw IndexError("qubit index " + std::to_string(k) +
                     " out of range for n=" + std::to_string(n));
  }
  if (!is_unitary(u, 1e-9)) {
    throw ValidationError("matrix fails the unitarity check");
  }
  const std::size_t mask = std::size_t{1} << (n - k);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i & mask) continue;
    const Amp a0 = state.amp(i);
    const Amp a1 = state.amp(i | mask);
    state.amp(i) = u(0, 0) * a0 + u(0, 1) * a1;
    state.amp(i | mask) = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return state;
}

StateVector apply_cphase(StateVector state, int i, int j, double phase) {
  const int n = state.qubit_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw IndexError("qubit pair (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range for n=" +
                     std::to_string(n));
  }
  if (i == j) {
    throw IndexError("controlled-phase needs two distinct qubits");
  }
  if (!(phase >= 0.0 && phase <= kPi)) {
    throw ValidationError("gate phase must lie in [0, pi], got " +
                          std::to_string(phase));
  }
  const Amp factor = std::polar(1.0, phase);
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    if (bit_set(idx, i, n) && bit_set(idx, j, n)) state.amp(idx) *= factor;
  }
  return state;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw SizeError("fidelity needs equal qubit counts");
  }
  Amp overlap{0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    overlap += std::conj(a.amp(i)) * b.amp(i);
  }
  return std::norm(overlap);
}

}  // namespace klm
