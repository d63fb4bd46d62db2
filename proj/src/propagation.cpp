#include "ndc/propagation.hpp"

#include "ndc/drift_matrix.hpp"
#include "ndc/errors.hpp"
#include "ndc/ode.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace ndc {

namespace {

constexpr double kConservationTol = 1e-9;
constexpr double kSymplecticTol = 1e-8;

// Classical amplitudes, passive phase accumulators, and the propagator columns,
// advanced together so every RK4 substage evaluates Delta at a consistent state.
struct JointState {
  ClassicalState s;
  PhaseSet th;
  Mat8 S;
};

JointState operator+(const JointState& a, const JointState& b) {
  JointState r{a.s + b.s, {}, a.S + b.S};
  for (int k = 0; k < 4; ++k) r.th[k] = a.th[k] + b.th[k];
  return r;
}

JointState operator*(double c, const JointState& y) {
  JointState r{c * y.s, {}, c * y.S};
  for (int k = 0; k < 4; ++k) r.th[k] = c * y.th[k];
  return r;
}

JointState joint_flow(const JointState& y, double kappa) {
  JointState d;
  d.s = classical_derivative(y.s, kappa);
  d.th = phase_rates(y.s, d.s);
  d.S = drift_matrix(y.s, kappa) * y.S;
  return d;
}

double symplectic_defect(const Mat8& S) {
  const Mat8& omega = symplectic_form8();
  return (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff();
}

}  // namespace

PhysicalityReport physicality_report(const Mat8& V) {
  PhysicalityReport rep;
  rep.symmetry_defect = (V - V.transpose()).cwiseAbs().maxCoeff();

  using Mat8c = Eigen::Matrix<std::complex<double>, 8, 8>;
  const Mat8c H =
      V.cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * symplectic_form8();
  const Eigen::SelfAdjointEigenSolver<Mat8c> solver(H);
  rep.min_heisenberg_eigenvalue = solver.eigenvalues().minCoeff();

  const double det = (2.0 * V).determinant();
  rep.purity = det > 0.0 ? 1.0 / std::sqrt(det) : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

std::size_t PropagatedState::index_at(double zeta_query) const {
  if (zeta.empty()) throw DomainError("empty propagated state");
  if (!(zeta_query >= -0.5 * step) || !(zeta_query <= zeta.back() + 0.5 * step))
    throw DomainError("zeta outside the propagated range");
  // The stored grid may end on a partial stride, so search instead of dividing.
  const auto it = std::lower_bound(zeta.begin(), zeta.end(), zeta_query);
  if (it == zeta.begin()) return 0;
  if (it == zeta.end()) return zeta.size() - 1;
  const auto hi = static_cast<std::size_t>(it - zeta.begin());
  return (zeta_query - zeta[hi - 1] <= zeta[hi] - zeta_query) ? hi - 1 : hi;
}

PropagatedState integrate_propagator(const SystemParams& params, double zeta_max, int steps,
                                     int store_every) {
  if (!(zeta_max > 0.0)) throw DomainError("integrate_propagator: zeta_max must be positive");
  if (steps < 2) throw DomainError("integrate_propagator: need at least 2 steps");
  if (store_every < 1) throw DomainError("integrate_propagator: store_every must be >= 1");
  if (!(params.kappa > 1.0)) throw LinearizationError("integrate_propagator: kappa must exceed 1");

  const double h = zeta_max / steps;
  const double kappa = params.kappa;

  PropagatedState out;
  out.params = params;
  out.step = h * store_every;
  out.initial_covariance = 0.5 * Mat8::Identity();

  JointState y{initial_state(params), {}, Mat8::Identity()};
  y.th = initial_phase_set(y.s, params.input_phases);

  const auto store = [&](double zeta) {
    const double defect = symplectic_defect(y.S);
    if (!(defect <= kSymplecticTol))
      throw IntegrationError("propagator lost symplecticity", zeta);
    out.zeta.push_back(zeta);
    out.classical.push_back(y.s);
    out.phases.push_back(y.th);
    out.propagators.push_back(y.S);
    out.covariances.push_back(y.S * out.initial_covariance * y.S.transpose());
  };

  store(0.0);
  const auto rhs = [kappa](double, const JointState& st) { return joint_flow(st, kappa); };

  for (int n = 0; n < steps; ++n) {
    y = rk4_step(n * h, h, y, rhs);

    const double drift = std::abs(y.s.conserved_sum() - 1.0);
    if (!(drift <= kConservationTol))
      throw IntegrationError("classical energy conservation violated", (n + 1) * h);

    if ((n + 1) % store_every == 0 || n + 1 == steps) store((n + 1) * h);
  }
  return out;
}

const Mat8& covariance_at(const PropagatedState& state, double zeta) {
  return state.covariances[state.index_at(zeta)];
}

}  // namespace ndc
