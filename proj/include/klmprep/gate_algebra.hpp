#pragma once

#include "klmprep/core_state.hpp"

namespace klm {

/// Conditional action of the controlled-phase gate on a signal qubit
/// prepared in (theta_s, phi_s): when the control is |1>, the signal is
/// mapped to tau |psi_s> + epsilon |psi_s_perp>. |tau|^2 + |epsilon|^2 = 1.
struct TauEpsilon {
  Amp tau;
  Amp epsilon;
};

/// tau = cos^2(theta_s) + e^{i phase} sin^2(theta_s)
/// epsilon = e^{i phi_s} sin(theta_s) cos(theta_s) (1 - e^{i phase})
///
/// theta_s in [0, pi/2], phase in [0, pi].
TauEpsilon tau_epsilon(double theta_s, double phi_s, double phase);

/// Basis change sending |psi_s> -> |0> and |psi_s_perp> -> |1>.
///
/// The orthogonal state is fixed as
///   |psi_s_perp> = e^{-i phi_s} sin(theta_s)|0> - cos(theta_s)|1>,
/// the phase convention under which the rotated gate output carries exactly
/// the (tau, epsilon) amplitudes of tau_epsilon.
Unitary2 signal_basis_rotation(double theta_s, double phi_s);

/// (|alpha_1|^2 + |alpha_2|^2) / |alpha_0|^2 = tan^2(theta_c) for a control
/// qubit prepared at theta_c in [0, pi/2).
double control_ratio(double theta_c);

/// |alpha_2| / |alpha_1| = tan(2 theta_s) at gate phase pi, for
/// theta_s in [0, pi/4]. Returns +infinity at theta_s = pi/4.
double pi_phase_ratio(double theta_s);

/// Largest achievable |epsilon/tau| at a given gate phase: tan(phase/2),
/// attained at theta_s = pi/4. Returns +infinity at phase = pi.
double max_ratio(double phase);

/// (1/sqrt(2)) [[1, 1], [1, -1]].
Unitary2 hadamard();

/// diag(1, e^{i delta}) with delta in [-pi, pi).
Unitary2 phase_gate(double delta);

}  // namespace klm
