#pragma once

#include "ndc/modes.hpp"
#include "ndc/system_params.hpp"

#include <array>
#include <complex>

namespace ndc {

using Complex = std::complex<double>;

/// The four normalized mean-field amplitudes in Cartesian (complex) form.
/// Polar quantities are derived views; the Cartesian storage stays regular at
/// zero amplitude, where the polar phase equations are singular.
struct ClassicalState {
  Complex signal_a;  // u_s e^{i theta_s}
  Complex pump_a;    // u_p e^{i theta_p}
  Complex signal_b;  // v_s e^{i phi_s}
  Complex pump_b;    // v_p e^{i phi_p}

  Complex field(Mode m) const noexcept;
  double amplitude(Mode m) const noexcept;  // u or v, >= 0
  double phase(Mode m) const noexcept;      // principal value in (-pi, pi]

  /// u_s^2 + u_p^2 + v_s^2 + v_p^2; equals 1 along any physical trajectory.
  double conserved_sum() const noexcept;

  bool finite() const noexcept;
};

ClassicalState operator+(const ClassicalState& a, const ClassicalState& b) noexcept;
ClassicalState operator*(double c, const ClassicalState& s) noexcept;

/// Mean-field flow of the normalized coupler equations,
///   d a_s / d zeta = i (kappa b_s + a_p conj(a_s)),   d a_p / d zeta = i a_s^2,
/// and the same with a and b exchanged. Real/imaginary parts reproduce the polar
/// amplitude and phase equations wherever the amplitudes are nonzero.
ClassicalState classical_derivative(const ClassicalState& s, double kappa) noexcept;

/// Equal-power launch in both waveguides: u_s(0) = v_s(0) = sech(delta0)/sqrt 2 and
/// u_p(0) = v_p(0) = tanh(delta0)/sqrt 2, rewritten through the power ratio so the
/// ratio = 0 limit is exact; phases taken from params.input_phases.
ClassicalState initial_state(const SystemParams& params);

}  // namespace ndc
