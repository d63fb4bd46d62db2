#include <doctest.h>

#include "ndc/entanglement.hpp"
#include "ndc/errors.hpp"
#include "ndc/modes.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace {

using namespace ndc;

// Two-mode squeezed covariance with squeezing r, shot noise 1/2.
Eigen::Matrix4d two_mode_squeezed(double r) {
  const double c = std::cosh(2.0 * r) / 2.0;
  const double s = std::sinh(2.0 * r) / 2.0;
  Eigen::Matrix4d v;
  v << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return v;
}

// Squeezed signal pair embedded in the four-mode layout, pumps left in vacuum.
Mat8 squeezed_signals(double r) {
  Mat8 v = 0.5 * Mat8::Identity();
  const Eigen::Matrix4d tms = two_mode_squeezed(r);
  const int rows[4] = {0, 1, 4, 5};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(rows[i], rows[j]) = tms(i, j);
  return v;
}

Eigen::MatrixXd random_symmetric(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = coef(rng);
  return 0.5 * (a + a.transpose());
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("vacuum has a flat symplectic spectrum and no negativity") {
  for (int modes : {1, 2, 4}) {
    const Eigen::MatrixXd v =
        0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
    const std::vector<double> spectrum = symplectic_spectrum(v);
    REQUIRE(spectrum.size() == static_cast<std::size_t>(modes));
    for (double nu : spectrum) CHECK(nu == doctest::Approx(0.5).epsilon(1e-12));
  }
  const Mat8 v8 = 0.5 * Mat8::Identity();
  CHECK(signal_log_negativity(v8) == 0.0);
  CHECK(pump_log_negativity(v8) == 0.0);
}

TEST_CASE("diagonal covariances have product-form symplectic values") {
  Eigen::MatrixXd v2 = Eigen::MatrixXd::Zero(2, 2);
  v2(0, 0) = 0.7;
  v2(1, 1) = 0.9;
  const std::vector<double> one = symplectic_spectrum(v2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(std::sqrt(0.63)).epsilon(1e-12));

  Eigen::MatrixXd v4 = Eigen::MatrixXd::Zero(4, 4);
  v4.diagonal() << 0.7, 0.7, 0.9, 0.9;
  const std::vector<double> two = symplectic_spectrum(v4);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(two[1] == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("indefinite input cannot be paired into a symplectic spectrum") {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
  v(0, 0) = 1.0;
  v(1, 1) = -1.0;
  CHECK_THROWS_AS(symplectic_spectrum(v), DegeneracyError);
}

TEST_CASE("two-mode squeezing at r = ln2/2 yields exactly one bit") {
  const Eigen::Matrix4d v = two_mode_squeezed(std::log(2.0) / 2.0);
  const std::vector<Mode> pair = {Mode::SignalA, Mode::SignalB};

  const std::vector<double> spectrum = symplectic_spectrum(v);
  CHECK(spectrum[0] == doctest::Approx(0.5).epsilon(1e-12));  // pure state
  CHECK(spectrum[1] == doctest::Approx(0.5).epsilon(1e-12));

  const Eigen::MatrixXd vt = partial_transpose(v, pair, Bipartition{{Mode::SignalB}});
  const std::vector<double> pt = symplectic_spectrum(vt);
  CHECK(pt[0] == doctest::Approx(0.25).epsilon(1e-12));  // e^{-2r}/2
  CHECK(pt[1] == doctest::Approx(1.0).epsilon(1e-12));   // e^{+2r}/2

  const double en = log_negativity(v, pair, Bipartition{{Mode::SignalB}});
  CHECK(std::abs(en - 1.0) <= 1e-9);
}

TEST_CASE("partial transpose is an involution and fixes diagonal states") {
  std::mt19937 rng(721);
  const std::vector<Mode> pair = {Mode::SignalA, Mode::SignalB};
  const Bipartition part{{Mode::SignalB}};
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXd v = random_symmetric(4, rng);
    const Eigen::MatrixXd twice =
        partial_transpose(partial_transpose(v, pair, part), pair, part);
    CHECK((twice - v).cwiseAbs().maxCoeff() == 0.0);
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(4, 4);
  d.diagonal() << 0.5, 0.6, 0.7, 0.8;
  CHECK((partial_transpose(d, pair, part) - d).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial transpose requires a proper non-empty subsystem") {
  const Mat8 v = 0.5 * Mat8::Identity();
  CHECK_THROWS_AS(partial_transpose(v, Bipartition{{}}), DomainError);
  const Bipartition all{{kAllModes.begin(), kAllModes.end()}};
  CHECK_THROWS_AS(partial_transpose(v, all), DomainError);
}

TEST_CASE("reduce selects blocks in canonical order") {
  Mat8 v;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) v(i, j) = 10.0 * i + j;

  const Eigen::MatrixXd sa = reduce(v, {Mode::SignalA});
  CHECK(sa.rows() == 2);
  CHECK(sa(0, 0) == 0.0);
  CHECK(sa(1, 1) == 11.0);

  // Order of the selection does not matter; rows always follow mode order.
  const Eigen::MatrixXd pair = reduce(v, {Mode::SignalB, Mode::SignalA});
  CHECK(pair.rows() == 4);
  CHECK(pair(0, 0) == 0.0);    // X_sA row first
  CHECK(pair(2, 2) == 44.0);   // then X_sB
  CHECK(pair(0, 2) == 4.0);

  // Nested reductions compose like set intersection.
  const Eigen::MatrixXd nested =
      reduce(pair, {Mode::SignalA, Mode::SignalB}, {Mode::SignalB});
  const Eigen::MatrixXd direct = reduce(v, {Mode::SignalB});
  CHECK((nested - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reduce rejects empty or absent selections") {
  const Mat8 v = 0.5 * Mat8::Identity();
  CHECK_THROWS_AS(reduce(v, {}), DomainError);
  const Eigen::MatrixXd pair = reduce(v, {Mode::SignalA, Mode::SignalB});
  CHECK_THROWS_AS(reduce(pair, {Mode::SignalA, Mode::SignalB}, {Mode::PumpA}),
                  DomainError);
}

TEST_CASE("negativity of a bipartition equals that of its complement") {
  const Mat8 v = squeezed_signals(std::log(2.0) / 2.0);
  const double direct = log_negativity(v, Bipartition{{Mode::SignalA}});
  const double complement =
      log_negativity(v, Bipartition{{Mode::PumpA, Mode::SignalB, Mode::PumpB}});
  CHECK(std::abs(direct - 1.0) <= 1e-9);
  CHECK(std::abs(direct - complement) <= 1e-9);
}

TEST_CASE("pair conventions read the squeezed signals and silent pumps") {
  const Mat8 v = squeezed_signals(std::log(2.0) / 2.0);
  CHECK(std::abs(signal_log_negativity(v) - 1.0) <= 1e-9);
  CHECK(pump_log_negativity(v) == 0.0);
}

TEST_CASE("vacuum saturates the inseparability bound exactly") {
  const Mat8 v = 0.5 * Mat8::Identity();
  const auto base = vlf_evaluate(v, {0.0, 0.0, 0.0, 0.0});
  CHECK(base[0] == 2.0);
  CHECK(base[1] == 2.0);
  CHECK(base[2] == 2.0);

  const VlfResult opt = vlf_optimize(v);
  CHECK(opt.values[0] == 2.0);
  CHECK(opt.values[1] == 2.0);
  CHECK(opt.values[2] == 2.0);
  for (double g : opt.gains) CHECK(g == 0.0);
  CHECK_FALSE(opt.violated);
}

TEST_CASE("combination values on vacuum follow the gain quadratic") {
  const Mat8 v = 0.5 * Mat8::Identity();
  const auto out = vlf_evaluate(v, {0.5, -0.25, 1.0, 2.0});
  CHECK(out[0] == doctest::Approx(4.5).epsilon(1e-15));      // 1 + (1+1+1+4)/2
  CHECK(out[1] == doctest::Approx(4.125).epsilon(1e-15));    // 1 + (.25+1+1+4)/2
  CHECK(out[2] == doctest::Approx(2.15625).epsilon(1e-15));  // 1 + (.25+.0625+1+1)/2
}

TEST_CASE("optimizer lands on the hand-solved gains for squeezed signals") {
  // With V(Y_sA, Y_sB) = -3/8 and variances 5/8, the quadratic in r3 (and r1)
  // minimizes at 0.6, lowering each combination from 2.25 to 2.025.
  const Mat8 v = squeezed_signals(std::log(2.0) / 2.0);
  const VlfResult opt = vlf_optimize(v);
  CHECK(opt.gains[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(opt.gains[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(opt.gains[2] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(opt.gains[3] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(opt.values[0] == doctest::Approx(2.025).epsilon(1e-12));
  CHECK(opt.values[1] == doctest::Approx(2.025).epsilon(1e-12));
  CHECK(opt.values[2] == doctest::Approx(2.025).epsilon(1e-12));
  CHECK_FALSE(opt.violated);
  CHECK(opt.values[0] == opt.values[2]);  // symmetric state
}

TEST_CASE("optimized combinations never exceed the zero-gain values") {
  std::mt19937 rng(722);
  for (int trial = 0; trial < 10; ++trial) {
    // Random physical covariance: congruence of vacuum by a random matrix plus
    // vacuum noise keeps it comfortably bona fide.
    const Eigen::MatrixXd a = random_symmetric(8, rng);
    const Mat8 v = 0.5 * Mat8::Identity() + 0.2 * (a * a.transpose());
    const auto base = vlf_evaluate(v, {0.0, 0.0, 0.0, 0.0});
    const VlfResult opt = vlf_optimize(v);
    CHECK(opt.values[0] <= base[0] + 1e-12);
    CHECK(opt.values[2] <= base[2] + 1e-12);
    const auto echo = vlf_evaluate(v, opt.gains);
    CHECK(echo[0] == opt.values[0]);
    CHECK(echo[1] == opt.values[1]);
    CHECK(echo[2] == opt.values[2]);
  }
}

}  // TEST_SUITE
