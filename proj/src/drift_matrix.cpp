#include "ndc/drift_matrix.hpp"

#include "ndc/errors.hpp"

#include <cmath>

namespace ndc {

namespace {

// Fills the four rows belonging to one waveguide. Quadrature rows/columns:
// xs, ys carry the signal of this waveguide, xp, yp its pump, and (other_xs,
// other_ys) the signal of the opposite waveguide reached through the evanescent
// coupling. sp = u_p e^{i theta_p}, ss = u_s e^{i theta_s} of this waveguide.
void fill_waveguide(Mat8& m, int xs, int ys, int xp, int yp, int other_xs, int other_ys,
                    const Complex& ss, const Complex& sp, double kappa) {
  const double sr = ss.real(), si = ss.imag();
  const double pr = sp.real(), pi = sp.imag();
  const double rt2 = std::sqrt(2.0);

  // d Xs: -u_p sin(tp) Xs + u_p cos(tp) Ys - kappa Ys' + rt2 u_s sin(ts) Xp - rt2 u_s cos(ts) Yp
  m(xs, xs) = -pi;
  m(xs, ys) = pr;
  m(xs, other_ys) = -kappa;
  m(xs, xp) = rt2 * si;
  m(xs, yp) = -rt2 * sr;

  // d Ys: u_p cos(tp) Xs + u_p sin(tp) Ys + kappa Xs' + rt2 u_s cos(ts) Xp + rt2 u_s sin(ts) Yp
  m(ys, xs) = pr;
  m(ys, ys) = pi;
  m(ys, other_xs) = kappa;
  m(ys, xp) = rt2 * sr;
  m(ys, yp) = rt2 * si;

  // d Xp: -rt2 u_s sin(ts) Xs - rt2 u_s cos(ts) Ys
  m(xp, xs) = -rt2 * si;
  m(xp, ys) = -rt2 * sr;

  // d Yp: rt2 u_s cos(ts) Xs - rt2 u_s sin(ts) Ys
  m(yp, xs) = rt2 * sr;
  m(yp, ys) = -rt2 * si;
}

}  // namespace

DriftMatrix drift_matrix(const ClassicalState& state, double kappa) {
  if (!state.finite()) throw DomainError("drift_matrix: classical state is not finite");

  Mat8 m = Mat8::Zero();
  fill_waveguide(m, x_index(Mode::SignalA), y_index(Mode::SignalA), x_index(Mode::PumpA),
                 y_index(Mode::PumpA), x_index(Mode::SignalB), y_index(Mode::SignalB),
                 state.signal_a, state.pump_a, kappa);
  fill_waveguide(m, x_index(Mode::SignalB), y_index(Mode::SignalB), x_index(Mode::PumpB),
                 y_index(Mode::PumpB), x_index(Mode::SignalA), y_index(Mode::SignalA),
                 state.signal_b, state.pump_b, kappa);
  return m;
}

}  // namespace ndc
