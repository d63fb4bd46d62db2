#include "ndc/system_params.hpp"

#include "ndc/errors.hpp"

#include <cmath>

namespace ndc {

SystemParams build_params(double coupling_C, double nonlinearity_g, double kappa,
                          double power_ratio, const InputPhases& phases) {
  if (!(coupling_C > 0.0)) throw DomainError("coupling constant C must be positive");
  if (!(nonlinearity_g > 0.0)) throw DomainError("nonlinear constant g must be positive");
  if (!(power_ratio >= 0.0)) throw DomainError("power ratio Ps/Pp must be non-negative");
  if (!(kappa > 1.0))
    throw LinearizationError("kappa must exceed 1; below threshold the fluctuations grow "
                             "exponentially and the linearized model breaks down");

  SystemParams p;
  p.coupling_C = coupling_C;
  p.nonlinearity_g = nonlinearity_g;
  p.kappa = kappa;
  p.power_ratio = power_ratio;
  p.input_phases = phases;

  // kappa = C / (sqrt(2P) g) inverted for the conserved power.
  const double sq = coupling_C / (nonlinearity_g * kappa);
  p.total_power_P = 0.5 * sq * sq;

  // power_ratio = 0 is the exact parametric-down-conversion limit; delta0 is +inf there
  // and only the regular sech/tanh values (0, 1/sqrt 2) enter the initial state.
  p.delta0 = std::asinh(std::sqrt(1.0 / power_ratio));

  return p;
}

}  // namespace ndc
