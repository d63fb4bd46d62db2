#pragma once

#include <Eigen/Dense>

#include <utility>

namespace ndc {

/// Constants of the undepleted-pump closed forms. Physical instances carry C and
/// eta = g |alpha_p| in mm^-1; the normalized instance (see below) reuses the same
/// formulas with zeta-unit coefficients. Only the oscillatory regime C > 2 eta is
/// supported.
struct UndepletedParams {
  double coupling = 0.0;                // C
  double eta = 0.0;                     // nonlinear correction to the coupling
  double beat_length = 0.0;             // L = pi / (2 sqrt(C^2 - 4 eta^2)), same units as 1/C
  double normalized_beat_length = 0.0;  // L in zeta units, pi / (2 sqrt(kappa^2 - 1/2))
};

/// Physical-unit constants; throws DomainError unless C > 2 eta >= 0.
UndepletedParams undepleted_params(double coupling, double eta);

/// zeta-unit constants for effective coupling kappa: the quadrature equations give a
/// squeezing coefficient 2 eta = u_p(0) = 1/sqrt 2, so eta = 2^(-3/2) and coupling =
/// kappa. Worked example: kappa = 1.13 gives beat length pi / (2 sqrt(1.13^2 - 1/2))
/// = 1.7819 in zeta, i.e. 25.17 mm at C = 0.08 mm^-1. Requires kappa > 1/sqrt 2.
UndepletedParams undepleted_params_normalized(double kappa);

/// Quadrature form of the Bogoliubov solution on (X_s^A, Y_s^A, X_s^B, Y_s^B):
/// with c = cos(pi z / 2L) and s = (2L/pi) sin(pi z / 2L),
///   X_A(z) = c X_A + 2 eta s Y_A - C s Y_B,   Y_A(z) = 2 eta s X_A + c Y_A + C s X_B,
/// and A <-> B mirrored. Symplectic for every z.
Eigen::Matrix4d signal_transform(double z, const UndepletedParams& p);

/// Mean signal photon number per waveguide, (4 eta L / pi)^2 sin^2(pi z / 2L).
double photon_number(double z, const UndepletedParams& p);

/// C = 0 branch of the photon number: plain parametric gain sinh^2(2 eta z).
double uncoupled_photon_number(double z, double eta);

/// Closed-form logarithmic negativity of the two signal modes,
/// E_N = -2 log2(sqrt(sigma + 1/2) - sqrt(sigma - 1/2)) with
/// sigma = sqrt(1 + ((C/eta) N_s)^2) / 2. Zero exactly when N_s = 0.
double analytic_logneg(double z, const UndepletedParams& p);

/// Cascaded phase mismatch -2 arctan(sqrt((C+2eta)/(C-2eta)) tan(pi z / 2L)),
/// unwrapped into the continuous branch through the tangent poles: monotone
/// decreasing, equal to -pi at z = L and -2 pi at z = 2L (i.e. pi and 2 pi mod 2 pi).
double cascaded_phase(double z, const UndepletedParams& p);

/// Principal-value variant of the same expression, range (-pi, pi).
double cascaded_phase_principal(double z, const UndepletedParams& p);

/// Leading signal cross-covariances in the negligible-depletion regime, zeta units:
/// V(X_s^A, X_s^B) = -V(Y_s^A, Y_s^B) = -(2^(3/2) kappa L^2 / pi^2) sin^2(pi zeta / 2L).
/// Returned as the (XX, YY) pair.
std::pair<double, double> undepleted_covariance_elements(double zeta, double kappa);

}  // namespace ndc
