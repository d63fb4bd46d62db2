#pragma once

#include "ndc/classical_state.hpp"
#include "ndc/system_params.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace ndc {

/// Unwrapped phases (theta_s, theta_p, phi_s, phi_p) at one grid point, indexed by Mode.
/// NaN marks a mode whose phase is undefined (zero amplitude).
using PhaseSet = std::array<double, 4>;

/// Classical mean fields sampled on a uniform zeta grid, together with phase
/// accumulators integrated alongside the Cartesian amplitudes. Accumulating
/// d theta / d zeta instead of taking principal values keeps the phases continuous,
/// which the n pi crossing diagnostics rely on.
struct ClassicalTrajectory {
  SystemParams params;
  double step = 0.0;  // zeta spacing
  std::vector<double> zeta;
  std::vector<ClassicalState> states;
  std::vector<PhaseSet> phases;

  std::size_t size() const noexcept { return zeta.size(); }

  /// |amplitude|^2 of one mode along the grid (u_s^2, u_p^2, v_s^2 or v_p^2).
  std::vector<double> power_series(Mode m) const;

  double unwrapped_phase(std::size_t i, Mode m) const { return phases[i][mode_index(m)]; }
};

/// d theta / d zeta = Im(conj(f) df) / |f|^2 per mode, given the state and its
/// flow derivative; NaN where the amplitude vanishes (phase undefined).
PhaseSet phase_rates(const ClassicalState& s, const ClassicalState& ds) noexcept;

/// Accumulator start values: the input phase of each mode, NaN for modes launched
/// with exactly zero amplitude.
PhaseSet initial_phase_set(const ClassicalState& s, const InputPhases& phases) noexcept;

/// Integrates the mean-field equations with fixed-step RK4 from zeta = 0 to zeta_max
/// using `steps` uniform steps (grid of steps + 1 points). The conserved amplitude sum
/// is checked at every step; drift beyond 1e-9 raises IntegrationError with the
/// offending zeta.
ClassicalTrajectory integrate_classical(const SystemParams& params, double zeta_max, int steps);

/// Phase-mismatch diagnostics Delta theta = theta_p - 2 theta_s and
/// Delta phi = phi_p - 2 phi_s along a trajectory; NaN where a phase is undefined.
struct PhaseMismatchPoint {
  double zeta;
  double delta_theta;
  double delta_phi;
};

std::vector<PhaseMismatchPoint> phase_mismatch_series(const ClassicalTrajectory& traj);

/// zeta positions where Delta theta crosses a multiple of pi, located by sign changes
/// of sin(Delta theta) with linear interpolation between grid points.
std::vector<double> pi_multiple_crossings(const std::vector<PhaseMismatchPoint>& series);

}  // namespace ndc
