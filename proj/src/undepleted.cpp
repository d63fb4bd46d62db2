#include "ndc/undepleted.hpp"

#include "ndc/errors.hpp"

#include <cmath>
#include <numbers>

namespace ndc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_regime(const UndepletedParams& p) {
  if (!(p.coupling > 2.0 * p.eta))
    throw DomainError("undepleted closed forms hold only while the linear coupling "
                      "dominates the nonlinear one (C > 2 eta)");
}

}  // namespace

UndepletedParams undepleted_params(double coupling, double eta) {
  if (!(eta >= 0.0)) throw DomainError("eta must be non-negative");
  if (!(coupling > 2.0 * eta))
    throw DomainError("oscillatory regime requires C > 2 eta");

  UndepletedParams p;
  p.coupling = coupling;
  p.eta = eta;
  p.beat_length = kPi / (2.0 * std::sqrt(coupling * coupling - 4.0 * eta * eta));
  // zeta and z differ by the factor 2 sqrt(2) eta (equals C/kappa in the kappa
  // normalization); written multiplicatively so eta = 0 degenerates cleanly.
  p.normalized_beat_length = p.beat_length * 2.0 * std::sqrt(2.0) * eta;
  return p;
}

UndepletedParams undepleted_params_normalized(double kappa) {
  const double eta = 1.0 / (2.0 * std::sqrt(2.0));
  if (!(kappa > 2.0 * eta))
    throw DomainError("normalized oscillatory regime requires kappa > 1/sqrt 2");
  return undepleted_params(kappa, eta);
}

Eigen::Matrix4d signal_transform(double z, const UndepletedParams& p) {
  check_regime(p);
  if (!(z >= 0.0)) throw DomainError("signal_transform: z must be non-negative");

  const double L = p.beat_length;
  const double c = std::cos(kPi * z / (2.0 * L));
  const double s = (2.0 * L / kPi) * std::sin(kPi * z / (2.0 * L));
  const double q = 2.0 * p.eta * s;  // parametric part
  const double w = p.coupling * s;   // coupling part

  Eigen::Matrix4d m;
  m << c, q, 0, -w,
       q, c, w, 0,
       0, -w, c, q,
       w, 0, q, c;
  return m;
}

double photon_number(double z, const UndepletedParams& p) {
  check_regime(p);
  const double L = p.beat_length;
  const double amp = 4.0 * p.eta * L / kPi;
  const double sn = std::sin(kPi * z / (2.0 * L));
  return amp * amp * sn * sn;
}

double uncoupled_photon_number(double z, double eta) {
  const double sh = std::sinh(2.0 * eta * z);
  return sh * sh;
}

double analytic_logneg(double z, const UndepletedParams& p) {
  check_regime(p);
  if (p.eta == 0.0) return 0.0;  // no down-conversion, no photons, no entanglement

  const double x = (p.coupling / p.eta) * photon_number(z, p);
  const double sigma = 0.5 * std::sqrt(1.0 + x * x);
  // sigma >= 1/2 always; the max() guards the roundoff case sigma = 1/2 - eps.
  const double arg = std::sqrt(sigma + 0.5) - std::sqrt(std::max(sigma - 0.5, 0.0));
  return -2.0 * std::log2(arg);
}

double cascaded_phase_principal(double z, const UndepletedParams& p) {
  check_regime(p);
  const double a = std::sqrt((p.coupling + 2.0 * p.eta) / (p.coupling - 2.0 * p.eta));
  return -2.0 * std::atan(a * std::tan(kPi * z / (2.0 * p.beat_length)));
}

double cascaded_phase(double z, const UndepletedParams& p) {
  check_regime(p);
  const double a = std::sqrt((p.coupling + 2.0 * p.eta) / (p.coupling - 2.0 * p.eta));
  const double psi = kPi * z / (2.0 * p.beat_length);

  // Continuous branch of arctan(a tan(psi)): reduce psi by whole periods of pi
  // around zero, take the angle of cos(psi) + i a sin(psi) (continuous across the
  // tangent poles at psi = pi/2 + n pi), and restore the removed turns.
  const double k = std::floor(psi / (2.0 * kPi) + 0.5);
  const double psi_r = psi - 2.0 * kPi * k;
  const double alpha = std::atan2(a * std::sin(psi_r), std::cos(psi_r)) + 2.0 * kPi * k;
  return -2.0 * alpha;
}

std::pair<double, double> undepleted_covariance_elements(double zeta, double kappa) {
  if (!(kappa > 1.0 / std::sqrt(2.0)))
    throw DomainError("undepleted covariance needs kappa > 1/sqrt 2");
  const double L = kPi / (2.0 * std::sqrt(kappa * kappa - 0.5));
  const double sn = std::sin(kPi * zeta / (2.0 * L));
  const double amp = std::pow(2.0, 1.5) * kappa * L * L / (kPi * kPi);
  const double xx = -amp * sn * sn;
  return {xx, -xx};
}

}  // namespace ndc
