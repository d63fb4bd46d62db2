#pragma once

#include "ndc/classical_state.hpp"
#include "ndc/modes.hpp"

namespace ndc {

using DriftMatrix = Mat8;

/// Coefficient matrix Delta(zeta) of the linearized quadrature dynamics
/// d xi / d zeta = Delta xi. Every entry is a product u sin(theta) or u cos(theta),
/// read off as the imaginary or real part of the corresponding complex amplitude,
/// plus the +/- kappa entries coupling the signal quadratures across waveguides.
/// Lies in the symplectic algebra: Delta Omega + Omega Delta^T = 0.
DriftMatrix drift_matrix(const ClassicalState& state, double kappa);

}  // namespace ndc
