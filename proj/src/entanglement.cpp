#include "ndc/entanglement.hpp"

#include "ndc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace ndc {

namespace {

// Canonical (enum-ordered, deduplicated) copy of a mode selection.
std::vector<Mode> canonical(std::vector<Mode> modes) {
  std::sort(modes.begin(), modes.end(),
            [](Mode a, Mode b) { return mode_index(a) < mode_index(b); });
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  return modes;
}

// Position of mode m in the state's mode list, or -1.
int position_of(const std::vector<Mode>& state_modes, Mode m) {
  for (std::size_t i = 0; i < state_modes.size(); ++i)
    if (state_modes[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<Mode> all_modes_vec() { return {kAllModes.begin(), kAllModes.end()}; }

void check_dimensions(const Eigen::MatrixXd& V, const std::vector<Mode>& state_modes) {
  const auto n = static_cast<Eigen::Index>(2 * state_modes.size());
  if (V.rows() != n || V.cols() != n)
    throw DomainError("covariance size does not match the mode list");
}

}  // namespace

Eigen::MatrixXd reduce(const Eigen::MatrixXd& V, const std::vector<Mode>& state_modes,
                       const std::vector<Mode>& keep) {
  check_dimensions(V, state_modes);
  if (keep.empty()) throw DomainError("reduce: empty mode selection");

  std::vector<int> rows;
  for (Mode m : canonical(keep)) {
    const int p = position_of(state_modes, m);
    if (p < 0) throw DomainError("reduce: mode not present in the state");
    rows.push_back(2 * p);
    rows.push_back(2 * p + 1);
  }

  Eigen::MatrixXd out(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = V(rows[i], rows[j]);
  return out;
}

Eigen::MatrixXd reduce(const Mat8& V, const std::vector<Mode>& keep) {
  return reduce(Eigen::MatrixXd(V), all_modes_vec(), keep);
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& V,
                                  const std::vector<Mode>& state_modes,
                                  const Bipartition& part) {
  check_dimensions(V, state_modes);
  const std::vector<Mode> transposed = canonical(part.transposed);
  if (transposed.empty() || transposed.size() >= state_modes.size())
    throw DomainError("partial transpose needs a non-empty proper subset of modes");

  Eigen::VectorXd sign = Eigen::VectorXd::Ones(V.rows());
  for (Mode m : transposed) {
    const int p = position_of(state_modes, m);
    if (p < 0) throw DomainError("partial transpose: mode not present in the state");
    sign(2 * p + 1) = -1.0;  // Y quadrature flips, X is untouched
  }
  return sign.asDiagonal() * V * sign.asDiagonal();
}

Eigen::MatrixXd partial_transpose(const Mat8& V, const Bipartition& part) {
  return partial_transpose(Eigen::MatrixXd(V), all_modes_vec(), part);
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& V) {
  const Eigen::Index n = V.rows();
  if (n == 0 || n % 2 != 0 || V.cols() != n)
    throw DomainError("symplectic spectrum needs a square matrix of even dimension");

  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(n / 2));
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * V);
  if (solver.info() != Eigen::Success)
    throw DegeneracyError("eigenvalue iteration failed on Omega V");

  const auto lambda = solver.eigenvalues();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(lambda(i)));
  const double tol = 1e-9 * scale;

  std::vector<double> plus, minus;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(lambda(i).real()) > tol)
      throw DegeneracyError("eigenvalue of Omega V has a non-negligible real part");
    const double b = lambda(i).imag();
    if (b > tol)
      plus.push_back(b);
    else if (b < -tol)
      minus.push_back(-b);
    else
      throw DegeneracyError("eigenvalue of Omega V too close to zero to pair");
  }
  if (plus.size() != minus.size() || plus.size() != static_cast<std::size_t>(n / 2))
    throw DegeneracyError("eigenvalues of Omega V do not split into +/- i nu pairs");

  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (std::abs(plus[i] - minus[i]) > tol)
      throw DegeneracyError("+/- i nu pairing broken beyond tolerance");

  return plus;
}

namespace {

double negativity_from_spectrum(const std::vector<double>& nus) {
  double total = 0.0;
  for (double nu : nus)
    if (nu < 0.5) total += -std::log2(2.0 * nu);
  return total;
}

}  // namespace

double log_negativity(const Eigen::MatrixXd& V, const std::vector<Mode>& state_modes,
                      const Bipartition& part) {
  return negativity_from_spectrum(symplectic_spectrum(partial_transpose(V, state_modes, part)));
}

double log_negativity(const Mat8& V, const Bipartition& part) {
  return log_negativity(Eigen::MatrixXd(V), all_modes_vec(), part);
}

double signal_log_negativity(const Mat8& V) {
  const std::vector<Mode> pair = {Mode::SignalA, Mode::SignalB};
  return log_negativity(reduce(V, pair), pair, Bipartition{{Mode::SignalB}});
}

double pump_log_negativity(const Mat8& V) {
  const std::vector<Mode> pair = {Mode::PumpA, Mode::PumpB};
  return log_negativity(reduce(V, pair), pair, Bipartition{{Mode::PumpB}});
}

namespace {

// Quadrature rows of the Y combinations: Y_sA, Y_pA, Y_sB, Y_pB.
constexpr int kYsA = 1, kYpA = 3, kYsB = 5, kYpB = 7;
constexpr int kXsA = 0, kXpA = 2, kXsB = 4, kXpB = 6;

Vec8 unit(int i) {
  Vec8 e = Vec8::Zero();
  e(i) = 1.0;
  return e;
}

double variance(const Mat8& V, const Vec8& c) { return c.dot(V * c); }

// Minimizes var(d0 + x1 e_i + x2 e_j) over (x1, x2): normal equations A x = b with
// A the (i, j) covariance block and b = -(V d0) restricted to (i, j). Falls back to
// coordinate descent when A is numerically singular.
std::array<double, 2> minimize_pair(const Mat8& V, const Vec8& d0, int i, int j) {
  const Eigen::Matrix2d a{{V(i, i), V(i, j)}, {V(j, i), V(j, j)}};
  const Vec8 vd = V * d0;
  const Eigen::Vector2d b(-vd(i), -vd(j));

  const double scale = std::max({1.0, std::abs(a(0, 0)), std::abs(a(1, 1))});
  const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (std::abs(det) > 1e-14 * scale * scale) {
    const Eigen::Vector2d x = a.inverse() * b;
    return {x(0), x(1)};
  }

  // Degenerate quadratic: descend one coordinate at a time until the update stalls.
  double x1 = 0.0, x2 = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    const double p1 = a(0, 0) > 1e-14 * scale ? (b(0) - a(0, 1) * x2) / a(0, 0) : 0.0;
    const double p2 = a(1, 1) > 1e-14 * scale ? (b(1) - a(1, 0) * p1) / a(1, 1) : 0.0;
    const double delta = std::abs(p1 - x1) + std::abs(p2 - x2);
    x1 = p1;
    x2 = p2;
    if (delta < 1e-10) break;
  }
  return {x1, x2};
}

}  // namespace

std::array<double, 3> vlf_evaluate(const Mat8& V, const VlfGains& r) {
  const Vec8 c1 = unit(kXsA) - unit(kXpA);
  const Vec8 c2 = unit(kXpA) - unit(kXsB);
  const Vec8 c3 = unit(kXsB) - unit(kXpB);

  const Vec8 d1 = unit(kYsA) + unit(kYpA) + r[2] * unit(kYsB) + r[3] * unit(kYpB);
  const Vec8 d2 = r[0] * unit(kYsA) + unit(kYpA) + unit(kYsB) + r[3] * unit(kYpB);
  const Vec8 d3 = r[0] * unit(kYsA) + r[1] * unit(kYpA) + unit(kYsB) + unit(kYpB);

  return {variance(V, c1) + variance(V, d1), variance(V, c2) + variance(V, d2),
          variance(V, c3) + variance(V, d3)};
}

VlfResult vlf_optimize(const Mat8& V) {
  // The first and third combinations have disjoint free-gain sets that cover all
  // four gains; each is independently minimized and the argmins assembled into the
  // shared gain vector.
  const auto [r3, r4] = minimize_pair(V, unit(kYsA) + unit(kYpA), kYsB, kYpB);
  const auto [r1, r2] = minimize_pair(V, unit(kYsB) + unit(kYpB), kYsA, kYpA);

  VlfResult res;
  res.gains = {r1, r2, r3, r4};
  res.values = vlf_evaluate(V, res.gains);
  res.violated = res.values[0] < 2.0 && res.values[1] < 2.0 && res.values[2] < 2.0;
  return res;
}

}  // namespace ndc
