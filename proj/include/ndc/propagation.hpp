#pragma once

#include "ndc/classical_dynamics.hpp"
#include "ndc/classical_state.hpp"
#include "ndc/modes.hpp"
#include "ndc/system_params.hpp"

#include <cstddef>
#include <vector>

namespace ndc {

/// Scalars for deciding whether a covariance matrix is bona fide; thresholds are
/// the caller's business.
struct PhysicalityReport {
  double min_heisenberg_eigenvalue = 0.0;  // smallest eigenvalue of V + i Omega / 2
  double purity = 0.0;                     // 1 / sqrt(det 2V); 1 for pure states
  double symmetry_defect = 0.0;            // max |V - V^T|
};

PhysicalityReport physicality_report(const Mat8& V);

/// Propagator S(zeta) and covariance V(zeta) = S V0 S^T on a stored zeta grid,
/// together with the classical trajectory samples they were computed from.
struct PropagatedState {
  SystemParams params;
  double step = 0.0;  // spacing of the stored grid
  Mat8 initial_covariance;
  std::vector<double> zeta;
  std::vector<ClassicalState> classical;
  std::vector<PhaseSet> phases;
  std::vector<Mat8> propagators;
  std::vector<Mat8> covariances;

  std::size_t size() const noexcept { return zeta.size(); }

  /// Nearest stored grid index; DomainError outside [0, zeta_max].
  std::size_t index_at(double zeta_query) const;
};

/// Integrates dS/dzeta = Delta(zeta) S from the identity jointly with the classical
/// mean fields (one RK4 system, so S sees the exact same classical samples at every
/// substage). This is the zeta-ordered solution; the plain matrix exponential of
/// the integrated drift is only recovered when Delta is constant. Every stored S is
/// checked for symplecticity to 1e-8 and the classical amplitudes for conservation
/// to 1e-9; violations raise IntegrationError. `store_every` keeps each n-th step
/// (the final point always included).
PropagatedState integrate_propagator(const SystemParams& params, double zeta_max, int steps,
                                     int store_every = 1);

/// Covariance at the stored grid point nearest to zeta (the grid is dense enough
/// that interpolation would add nothing).
const Mat8& covariance_at(const PropagatedState& state, double zeta);

}  // namespace ndc
