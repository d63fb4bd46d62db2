#include "ndc/classical_dynamics.hpp"

#include "ndc/errors.hpp"
#include "ndc/ode.hpp"

#include <cmath>
#include <limits>

namespace ndc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kConservationTol = 1e-9;

// Amplitudes plus passive phase accumulators; the phases never feed back into the
// amplitude flow, they just ride along in the same RK4 stages.
struct FlowState {
  ClassicalState s;
  PhaseSet th;
};

FlowState operator+(const FlowState& a, const FlowState& b) noexcept {
  FlowState r{a.s + b.s, {}};
  for (int k = 0; k < 4; ++k) r.th[k] = a.th[k] + b.th[k];
  return r;
}

FlowState operator*(double c, const FlowState& f) noexcept {
  FlowState r{c * f.s, {}};
  for (int k = 0; k < 4; ++k) r.th[k] = c * f.th[k];
  return r;
}

FlowState flow(const FlowState& y, double kappa) noexcept {
  FlowState d;
  d.s = classical_derivative(y.s, kappa);
  d.th = phase_rates(y.s, d.s);
  return d;
}

}  // namespace

PhaseSet phase_rates(const ClassicalState& s, const ClassicalState& ds) noexcept {
  const auto rate = [](const Complex& f, const Complex& df) {
    return std::imag(std::conj(f) * df) / std::norm(f);
  };
  PhaseSet th;
  th[mode_index(Mode::SignalA)] = rate(s.signal_a, ds.signal_a);
  th[mode_index(Mode::PumpA)] = rate(s.pump_a, ds.pump_a);
  th[mode_index(Mode::SignalB)] = rate(s.signal_b, ds.signal_b);
  th[mode_index(Mode::PumpB)] = rate(s.pump_b, ds.pump_b);
  return th;
}

PhaseSet initial_phase_set(const ClassicalState& s, const InputPhases& phases) noexcept {
  PhaseSet th;
  for (Mode m : kAllModes) {
    const int k = mode_index(m);
    th[k] = s.amplitude(m) > 0.0 ? phases[k] : kNan;
  }
  return th;
}

std::vector<double> ClassicalTrajectory::power_series(Mode m) const {
  std::vector<double> p(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) p[i] = std::norm(states[i].field(m));
  return p;
}

ClassicalTrajectory integrate_classical(const SystemParams& params, double zeta_max, int steps) {
  if (!(zeta_max > 0.0)) throw DomainError("integrate_classical: zeta_max must be positive");
  if (steps < 2) throw DomainError("integrate_classical: need at least 2 steps");
  if (!(params.kappa > 1.0)) throw LinearizationError("integrate_classical: kappa must exceed 1");

  const double h = zeta_max / steps;
  const double kappa = params.kappa;

  ClassicalTrajectory traj;
  traj.params = params;
  traj.step = h;
  traj.zeta.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.phases.reserve(steps + 1);

  FlowState y{initial_state(params), {}};
  y.th = initial_phase_set(y.s, params.input_phases);

  traj.zeta.push_back(0.0);
  traj.states.push_back(y.s);
  traj.phases.push_back(y.th);

  const auto rhs = [kappa](double, const FlowState& st) { return flow(st, kappa); };

  for (int n = 0; n < steps; ++n) {
    const double zeta = n * h;
    y = rk4_step(zeta, h, y, rhs);

    const double drift = std::abs(y.s.conserved_sum() - 1.0);
    if (!(drift <= kConservationTol))
      throw IntegrationError("classical energy conservation violated", zeta + h);

    traj.zeta.push_back((n + 1) * h);
    traj.states.push_back(y.s);
    traj.phases.push_back(y.th);
  }
  return traj;
}

std::vector<PhaseMismatchPoint> phase_mismatch_series(const ClassicalTrajectory& traj) {
  std::vector<PhaseMismatchPoint> out;
  out.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const PhaseSet& th = traj.phases[i];
    out.push_back({traj.zeta[i],
                   th[mode_index(Mode::PumpA)] - 2.0 * th[mode_index(Mode::SignalA)],
                   th[mode_index(Mode::PumpB)] - 2.0 * th[mode_index(Mode::SignalB)]});
  }
  return out;
}

std::vector<double> pi_multiple_crossings(const std::vector<PhaseMismatchPoint>& series) {
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    const double s0 = std::sin(series[i].delta_theta);
    const double s1 = std::sin(series[i + 1].delta_theta);
    if (std::isnan(s0) || std::isnan(s1)) continue;
    if (s0 == 0.0) {
      crossings.push_back(series[i].zeta);
    } else if (s0 * s1 < 0.0) {
      const double t = s0 / (s0 - s1);
      crossings.push_back(series[i].zeta + t * (series[i + 1].zeta - series[i].zeta));
    }
  }
  return crossings;
}

}  // namespace ndc
