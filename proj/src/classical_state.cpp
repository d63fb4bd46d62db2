#include "ndc/classical_state.hpp"

#include <cmath>

namespace ndc {

Complex ClassicalState::field(Mode m) const noexcept {
  switch (m) {
    case Mode::SignalA: return signal_a;
    case Mode::PumpA: return pump_a;
    case Mode::SignalB: return signal_b;
    case Mode::PumpB: return pump_b;
  }
  return {};
}

double ClassicalState::amplitude(Mode m) const noexcept { return std::abs(field(m)); }

double ClassicalState::phase(Mode m) const noexcept { return std::arg(field(m)); }

double ClassicalState::conserved_sum() const noexcept {
  return std::norm(signal_a) + std::norm(pump_a) + std::norm(signal_b) + std::norm(pump_b);
}

bool ClassicalState::finite() const noexcept {
  for (Mode m : kAllModes) {
    const Complex f = field(m);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) return false;
  }
  return true;
}

ClassicalState operator+(const ClassicalState& a, const ClassicalState& b) noexcept {
  return {a.signal_a + b.signal_a, a.pump_a + b.pump_a, a.signal_b + b.signal_b,
          a.pump_b + b.pump_b};
}

ClassicalState operator*(double c, const ClassicalState& s) noexcept {
  return {c * s.signal_a, c * s.pump_a, c * s.signal_b, c * s.pump_b};
}

ClassicalState classical_derivative(const ClassicalState& s, double kappa) noexcept {
  const Complex i(0.0, 1.0);
  ClassicalState d;
  d.signal_a = i * (kappa * s.signal_b + s.pump_a * std::conj(s.signal_a));
  d.pump_a = i * (s.signal_a * s.signal_a);
  d.signal_b = i * (kappa * s.signal_a + s.pump_b * std::conj(s.signal_b));
  d.pump_b = i * (s.signal_b * s.signal_b);
  return d;
}

ClassicalState initial_state(const SystemParams& params) {
  const double ratio = params.power_ratio;
  // sech(delta0)/sqrt2 and tanh(delta0)/sqrt2 expressed through the power ratio:
  // both stay exact as ratio -> 0.
  const double us0 = std::sqrt(ratio / (2.0 * (1.0 + ratio)));
  const double up0 = 1.0 / std::sqrt(2.0 * (1.0 + ratio));

  const auto& ph = params.input_phases;
  const Complex es = std::polar(us0, ph[0]);
  const Complex ep = std::polar(up0, ph[1]);
  const Complex fs = std::polar(us0, ph[2]);
  const Complex fp = std::polar(up0, ph[3]);
  return {es, ep, fs, fp};
}

}  // namespace ndc
