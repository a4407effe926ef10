#include "klmprep/gate_algebra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace klm {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta_s(double theta_s, double upper, const char* what) {
  if (!(theta_s >= 0.0 && theta_s <= upper)) {
    throw ValidationError(std::string(what) + " out of range: " +
                          std::to_string(theta_s));
  }
}

void check_phase(double phase) {
  if (!(phase >= 0.0 && phase <= kPi)) {
    throw ValidationError("gate phase must lie in [0, pi], got " +
                          std::to_string(phase));
  }
}

}  // namespace

TauEpsilon tau_epsilon(double theta_s, double phi_s, double phase) {
  check_theta_s(theta_s, kPi / 2.0, "theta_s");
  check_phase(phase);
  if (!std::isfinite(phi_s)) throw ValidationError("phi_s must be finite");
  const double c = std::cos(theta_s);
  const double s = std::sin(theta_s);
  const Amp gate = std::polar(1.0, phase);
  return TauEpsilon{
      .tau = c * c + gate * (s * s),
      .epsilon = std::polar(1.0, phi_s) * (s * c) * (1.0 - gate),
  };
}

Unitary2 signal_basis_rotation(double theta_s, double phi_s) {
  check_theta_s(theta_s, kPi / 2.0, "theta_s");
  if (!std::isfinite(phi_s)) throw ValidationError("phi_s must be finite");
  // The signal state is |0> and the orthogonal phase is free: use identity.
  if (theta_s == 0.0) return Unitary2{};
  const double c = std::cos(theta_s);
  const double s = std::sin(theta_s);
  // Rows are <psi_s| and <psi_s_perp|.
  Unitary2 u;
  u(0, 0) = Amp{c};
  u(0, 1) = std::polar(s, -phi_s);
  u(1, 0) = std::polar(s, phi_s);
  u(1, 1) = Amp{-c};
  return u;
}

double control_ratio(double theta_c) {
  if (!(theta_c >= 0.0 && theta_c <= kPi / 2.0)) {
    throw ValidationError("theta_c must lie in [0, pi/2], got " +
                          std::to_string(theta_c));
  }
  if (theta_c >= kPi / 2.0) {
    throw UnboundedRatioError("ratio diverges at theta_c = pi/2 (alpha_0 = 0)");
  }
  const double t = std::tan(theta_c);
  return t * t;
}

double pi_phase_ratio(double theta_s) {
  check_theta_s(theta_s, kPi / 4.0, "theta_s");
  if (theta_s >= kPi / 4.0) return std::numeric_limits<double>::infinity();
  return std::tan(2.0 * theta_s);
}

double max_ratio(double phase) {
  check_phase(phase);
  if (phase >= kPi) return std::numeric_limits<double>::infinity();
  return std::tan(phase / 2.0);
}

Unitary2 hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  Unitary2 u;
  u(0, 0) = Amp{h};
  u(0, 1) = Amp{h};
  u(1, 0) = Amp{h};
  u(1, 1) = Amp{-h};
  return u;
}

Unitary2 phase_gate(double delta) {
  if (!(delta >= -kPi && delta < kPi)) {
    throw ValidationError("phase gate angle must lie in [-pi, pi), got " +
                          std::to_string(delta));
  }
  Unitary2 u;
  u(1, 1) = std::polar(1.0, delta);
  return u;
}

}  // namespace klm
