#include "ndc/modes.hpp"

#include "ndc/errors.hpp"

namespace ndc {

std::string_view mode_name(Mode m) noexcept {
  switch (m) {
    case Mode::SignalA: return "sA";
    case Mode::PumpA: return "pA";
    case Mode::SignalB: return "sB";
    case Mode::PumpB: return "pB";
  }
  return "?";
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  if (n_modes < 1) throw DomainError("symplectic_form: need at least one mode");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

const Mat8& symplectic_form8() {
  static const Mat8 omega = symplectic_form(4);
  return omega;
}

}  // namespace ndc
