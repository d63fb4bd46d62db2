#include <doctest.h>

#include "ndc/classical_dynamics.hpp"
#include "ndc/errors.hpp"
#include "ndc/ode.hpp"
#include "ndc/system_params.hpp"
#include "ndc/undepleted.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace {

using namespace ndc;

// Reference integrator in polar variables (u_s, theta_s, u_p, theta_p, v_s, phi_s,
// v_p, phi_p), valid while every amplitude stays nonzero. Written directly from the
// amplitude/phase form of the mean-field equations, so it shares no code with the
// Cartesian flow under test.
struct Polar {
  std::array<double, 8> v{};
  Polar operator+(const Polar& o) const {
    Polar r;
    for (int i = 0; i < 8; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
};
Polar operator*(double c, const Polar& p) {
  Polar r;
  for (int i = 0; i < 8; ++i) r.v[i] = c * p.v[i];
  return r;
}

Polar polar_flow(const Polar& y, double kappa) {
  const double us = y.v[0], ths = y.v[1], up = y.v[2], thp = y.v[3];
  const double vs = y.v[4], phs = y.v[5], vp = y.v[6], php = y.v[7];
  const double dth = thp - 2.0 * ths;
  const double dph = php - 2.0 * phs;
  Polar d;
  d.v[0] = -kappa * vs * std::sin(phs - ths) - us * up * std::sin(dth);
  d.v[1] = kappa * vs / us * std::cos(phs - ths) + up * std::cos(dth);
  d.v[2] = us * us * std::sin(dth);
  d.v[3] = us * us / up * std::cos(dth);
  d.v[4] = -kappa * us * std::sin(ths - phs) - vs * vp * std::sin(dph);
  d.v[5] = kappa * us / vs * std::cos(ths - phs) + vp * std::cos(dph);
  d.v[6] = vs * vs * std::sin(dph);
  d.v[7] = vs * vs / vp * std::cos(dph);
  return d;
}

Polar integrate_polar(const SystemParams& params, double zeta_max, int steps) {
  const ClassicalState s0 = initial_state(params);
  Polar y;
  y.v = {s0.amplitude(Mode::SignalA), params.input_phases[0],
         s0.amplitude(Mode::PumpA),   params.input_phases[1],
         s0.amplitude(Mode::SignalB), params.input_phases[2],
         s0.amplitude(Mode::PumpB),   params.input_phases[3]};
  const double h = zeta_max / steps;
  for (int i = 0; i < steps; ++i) {
    y = rk4_step(i * h, h, y, [&](double, const Polar& p) {
      return polar_flow(p, params.kappa);
    });
  }
  return y;
}

double final_state_distance(const ClassicalTrajectory& a, const ClassicalTrajectory& b) {
  const ClassicalState& x = a.states.back();
  const ClassicalState& y = b.states.back();
  double m = 0.0;
  for (Mode mode : kAllModes) {
    m = std::max(m, std::abs(x.field(mode) - y.field(mode)));
  }
  return m;
}

}  // namespace

TEST_SUITE("classical-dynamics") {

TEST_CASE("amplitude sum stays conserved along the trajectory") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const ClassicalTrajectory t = integrate_classical(p, 6.0, 6 * 4096);
  for (std::size_t i = 0; i < t.size(); i += 97) {
    CHECK(std::abs(t.states[i].conserved_sum() - 1.0) <= 1e-9);
  }
  CHECK(std::abs(t.states.back().conserved_sum() - 1.0) <= 1e-9);
}

TEST_CASE("negligible seed leaves the pumps undepleted") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1e-10);
  const ClassicalTrajectory t = integrate_classical(p, 6.0, 6 * 2048);
  double worst = 0.0;
  for (const ClassicalState& s : t.states) {
    worst = std::max(worst, std::abs(s.amplitude(Mode::PumpA) - 1.0 / std::sqrt(2.0)));
    worst = std::max(worst, std::abs(s.amplitude(Mode::PumpB) - 1.0 / std::sqrt(2.0)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("equal seeds oscillate around the quarter-power launch") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const ClassicalTrajectory t = integrate_classical(p, 6.0, 6 * 2048);
  const std::vector<double> us2 = t.power_series(Mode::SignalA);
  const std::vector<double> up2 = t.power_series(Mode::PumpA);
  double max_signal = 0.0, min_pump = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(us2[i] >= 0.25 - 1e-9);  // signals stay above the launch value
    CHECK(up2[i] <= 0.25 + 1e-9);  // pumps stay below it
    max_signal = std::max(max_signal, us2[i]);
    min_pump = std::min(min_pump, up2[i]);
  }
  CHECK(max_signal > 0.3);
  CHECK(min_pump < 0.2);
}

TEST_CASE("equal inputs keep the two waveguides identical") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const ClassicalTrajectory t = integrate_classical(p, 6.0, 6 * 2048);
  double worst_amp = 0.0, worst_phase = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ClassicalState& s = t.states[i];
    worst_amp = std::max(worst_amp, std::abs(s.amplitude(Mode::SignalA) -
                                             s.amplitude(Mode::SignalB)));
    worst_amp = std::max(worst_amp,
                         std::abs(s.amplitude(Mode::PumpA) - s.amplitude(Mode::PumpB)));
    worst_phase = std::max(worst_phase, std::abs(t.unwrapped_phase(i, Mode::SignalA) -
                                                 t.unwrapped_phase(i, Mode::SignalB)));
    worst_phase = std::max(worst_phase, std::abs(t.unwrapped_phase(i, Mode::PumpA) -
                                                 t.unwrapped_phase(i, Mode::PumpB)));
  }
  CHECK(worst_amp <= 1e-9);
  CHECK(worst_phase <= 1e-9);
}

TEST_CASE("integrator converges at fourth order") {
  // Resolutions chosen inside the conservation guard: coarser grids are rejected
  // by the integrator before a convergence ratio can be read off.
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const ClassicalTrajectory ref = integrate_classical(p, 2.0, 4096);
  const ClassicalTrajectory coarse = integrate_classical(p, 2.0, 128);
  const ClassicalTrajectory fine = integrate_classical(p, 2.0, 256);
  const double e_coarse = final_state_distance(coarse, ref);
  const double e_fine = final_state_distance(fine, ref);
  CHECK(e_coarse > 1e-12);  // far enough from rounding noise to trust the ratio
  CHECK(e_coarse / e_fine > 12.0);
  CHECK(e_coarse / e_fine < 20.0);
}

TEST_CASE("halving the step changes nothing above 1e-8 at working resolution") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const ClassicalTrajectory a = integrate_classical(p, 6.0, 6 * 4096);
  const ClassicalTrajectory b = integrate_classical(p, 6.0, 6 * 8192);
  CHECK(final_state_distance(a, b) <= 1e-8);
}

TEST_CASE("cartesian flow agrees with a polar-form reference integration") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  const int steps = 8192;
  const ClassicalTrajectory t = integrate_classical(p, 2.0, steps);
  const Polar ref = integrate_polar(p, 2.0, steps);
  const ClassicalState& s = t.states.back();
  CHECK(s.amplitude(Mode::SignalA) == doctest::Approx(ref.v[0]).epsilon(1e-10));
  CHECK(s.amplitude(Mode::PumpA) == doctest::Approx(ref.v[2]).epsilon(1e-10));
  CHECK(s.amplitude(Mode::SignalB) == doctest::Approx(ref.v[4]).epsilon(1e-10));
  CHECK(t.unwrapped_phase(t.size() - 1, Mode::SignalA) ==
        doctest::Approx(ref.v[1]).epsilon(1e-8));
  CHECK(t.unwrapped_phase(t.size() - 1, Mode::PumpA) ==
        doctest::Approx(ref.v[3]).epsilon(1e-8));
}

TEST_CASE("vacuum seed is an exact fixed point of the signal equations") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 0.0);
  const ClassicalTrajectory t = integrate_classical(p, 3.0, 1024);
  for (std::size_t i = 0; i < t.size(); i += 61) {
    CHECK(t.states[i].signal_a == Complex(0.0, 0.0));
    CHECK(t.states[i].signal_b == Complex(0.0, 0.0));
    CHECK(t.states[i].pump_a == t.states[0].pump_a);
  }
}

TEST_CASE("vacuum seed leaves the signal phases undefined") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 0.0);
  const ClassicalTrajectory t = integrate_classical(p, 2.0, 512);
  CHECK(std::isnan(t.unwrapped_phase(10, Mode::SignalA)));
  CHECK(t.unwrapped_phase(10, Mode::PumpA) == 0.0);

  const auto series = phase_mismatch_series(t);
  CHECK(series.size() == t.size());
  CHECK(std::isnan(series[5].delta_theta));
  CHECK(pi_multiple_crossings(series).empty());
}

TEST_CASE("seeded phase mismatch follows the cascade closed form") {
  // With a vanishing seed the mismatch accumulated by the classical fields matches
  // the analytic cascade phase; crossings of multiples of pi land on beat-length
  // multiples.
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1e-20);
  const ClassicalTrajectory t = integrate_classical(p, 6.0, 6 * 4096);
  const UndepletedParams u = undepleted_params_normalized(1.13);
  const auto series = phase_mismatch_series(t);

  double worst = 0.0;
  for (std::size_t i = 0; i < series.size(); i += 33) {
    const double predicted = cascaded_phase(series[i].zeta, u);
    worst = std::max(worst, std::abs(series[i].delta_theta - predicted));
    CHECK(std::abs(series[i].delta_theta - series[i].delta_phi) <= 1e-9);
  }
  CHECK(worst <= 1e-4);

  // The launch point itself sits on a multiple of pi, so it is crossing zero and
  // the later crossings land on beat-length multiples.
  const std::vector<double> crossings = pi_multiple_crossings(series);
  REQUIRE(crossings.size() >= 4);
  CHECK(crossings[0] == 0.0);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(crossings[n] ==
          doctest::Approx(n * u.normalized_beat_length).epsilon(1e-3));
  }
}

TEST_CASE("conservation failures report the position") {
  const SystemParams p = build_params(0.08, 0.0025, 1.13, 1.0);
  try {
    integrate_classical(p, 40.0, 4);  // absurd step size
    FAIL("expected IntegrationError");
  } catch (const IntegrationError& e) {
    CHECK(e.zeta() > 0.0);
    CHECK(e.zeta() <= 40.0);
    CHECK(std::string(e.what()).find("zeta") != std::string::npos);
  }
}

TEST_CASE("power series mirrors the stored amplitudes") {
  const SystemParams p = build_params(0.08, 0.0025, 1.6, 0.25);
  const ClassicalTrajectory t = integrate_classical(p, 1.0, 256);
  const std::vector<double> us2 = t.power_series(Mode::SignalA);
  REQUIRE(us2.size() == t.size());
  for (std::size_t i = 0; i < t.size(); i += 17) {
    const double a = t.states[i].amplitude(Mode::SignalA);
    CHECK(us2[i] == doctest::Approx(a * a).epsilon(1e-15));
  }
}

}  // TEST_SUITE
