#pragma once

namespace ndc {

/// One classical fourth-order Runge-Kutta step of size h for dy/dt = f(t, y).
/// State needs operator+ and scalar multiplication; Flow is any callable.
/// Fixed-step by design: the dynamics are smooth and non-stiff, and a fixed grid
/// keeps runs bit-for-bit reproducible.
template <typename State, typename Flow>
State rk4_step(double t, double h, const State& y, Flow&& f) {
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * h, y + (0.5 * h) * k1);
  const State k3 = f(t + 0.5 * h, y + (0.5 * h) * k2);
  const State k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace ndc
