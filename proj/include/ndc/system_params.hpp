#pragma once

#include <array>

namespace ndc {

/// Input phases at z = 0 in radians: theta_s, theta_p (waveguide A), phi_s, phi_p (waveguide B).
using InputPhases = std::array<double, 4>;

/// Physical constants plus the derived normalization of one coupler run.
/// Owns all unit bookkeeping: lengths in mm, powers in mW, and the conversion
/// between physical position z and the dimensionless coordinate zeta = sqrt(2P) g z.
struct SystemParams {
  double coupling_C = 0.0;       // linear coupling, mm^-1
  double nonlinearity_g = 0.0;   // nonlinear constant, mm^-1 mW^-1/2
  double kappa = 0.0;            // effective coupling C / (sqrt(2P) g), > 1
  double total_power_P = 0.0;    // conserved per-waveguide power, mW
  double power_ratio = 0.0;      // Ps / Pp at the input of each waveguide
  double delta0 = 0.0;           // arcsinh(sqrt(Pp / Ps)); +inf when power_ratio = 0
  InputPhases input_phases{};

  double z_per_zeta() const noexcept { return kappa / coupling_C; }  // mm per unit zeta
  double zeta_to_z(double zeta) const noexcept { return zeta * z_per_zeta(); }
  double z_to_zeta(double z) const noexcept { return z / z_per_zeta(); }
};

/// Derives total_power_P = C^2 / (2 g^2 kappa^2) and delta0 from the inputs.
/// Throws LinearizationError for kappa <= 1, DomainError for non-positive constants
/// or negative power_ratio.
SystemParams build_params(double coupling_C, double nonlinearity_g, double kappa,
                          double power_ratio, const InputPhases& phases = {});

}  // namespace ndc
