#pragma once

#include "ndc/modes.hpp"

#include <array>
#include <vector>

namespace ndc {

/// Subsystem whose Y quadratures change sign under partial transposition.
/// Must be a non-empty proper subset of the modes of the state it is applied to.
struct Bipartition {
  std::vector<Mode> transposed;
};

/// Covariance of the subsystem `keep` of a state whose rows follow `state_modes`.
/// Output rows are in canonical mode order, so nested reductions compose like
/// set intersection. Throws DomainError for an empty selection or a mode absent
/// from the state.
Eigen::MatrixXd reduce(const Eigen::MatrixXd& V, const std::vector<Mode>& state_modes,
                       const std::vector<Mode>& keep);

/// Reduction of the full four-mode covariance.
Eigen::MatrixXd reduce(const Mat8& V, const std::vector<Mode>& keep);

/// Sign flip of the Y quadratures of `part.transposed`: P V P with P diagonal +/-1.
/// An involution; leaves any diagonal covariance unchanged.
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& V,
                                  const std::vector<Mode>& state_modes,
                                  const Bipartition& part);

Eigen::MatrixXd partial_transpose(const Mat8& V, const Bipartition& part);

/// The k positive values {nu} such that the eigenvalues of Omega V are +/- i nu.
/// Sorted ascending. Throws DegeneracyError if the eigenvalues fail to form clean
/// imaginary pairs within 1e-9 (relative to the spectral scale).
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& V);

/// Logarithmic negativity of the bipartition: sum of -log2(2 nu) over the
/// partially transposed symplectic spectrum values below 1/2. Non-negative;
/// positive only when the transposed state violates the Heisenberg bound.
double log_negativity(const Eigen::MatrixXd& V, const std::vector<Mode>& state_modes,
                      const Bipartition& part);

double log_negativity(const Mat8& V, const Bipartition& part);

/// Figure conventions: negativity of the reduced signal pair (sA, sB) with sB
/// transposed, and of the reduced pump pair (pA, pB) with pB transposed.
double signal_log_negativity(const Mat8& V);
double pump_log_negativity(const Mat8& V);

/// Gains (r1, r2, r3, r4) entering the van Loock-Furusawa Y combinations.
using VlfGains = std::array<double, 4>;

/// The three van Loock-Furusawa combination values for the four-mode state:
///   I1 = var(X_sA - X_pA) + var(Y_sA + Y_pA + r3 Y_sB + r4 Y_pB)
///   I2 = var(X_pA - X_sB) + var(r1 Y_sA + Y_pA + Y_sB + r4 Y_pB)
///   I3 = var(X_sB - X_pB) + var(r1 Y_sA + r2 Y_pA + Y_sB + Y_pB)
/// Quadripartite inseparability requires all three below the bound 2
/// (shot-noise-1/2 units) simultaneously.
std::array<double, 3> vlf_evaluate(const Mat8& V, const VlfGains& r);

struct VlfResult {
  std::array<double, 3> values;  // I1, I2, I3 at the returned gains
  VlfGains gains;
  bool violated = false;  // all three below 2
};

/// Optimizes the gains: I1 is minimized over its free gains (r3, r4) and I3 over
/// (r1, r2), each a positive-semidefinite quadratic solved in closed form via its
/// 2x2 normal equations (coordinate descent as the singular fallback). The four
/// argmin gains form one shared vector, at which all three combinations are
/// evaluated; I2 has no free gains of its own, so this can only under-report its
/// violation. Returned values satisfy values == vlf_evaluate(V, gains) exactly.
VlfResult vlf_optimize(const Mat8& V);

}  // namespace ndc
