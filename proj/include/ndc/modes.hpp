#pragma once

#include <Eigen/Dense>

#include <array>
#include <string_view>

namespace ndc {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;

/// The four guided modes of the coupler: signal and pump in waveguide A, signal and
/// pump in waveguide B. Enumerator order fixes the quadrature-vector layout
/// (X_sA, Y_sA, X_pA, Y_pA, X_sB, Y_sB, X_pB, Y_pB).
enum class Mode : int { SignalA = 0, PumpA = 1, SignalB = 2, PumpB = 3 };

inline constexpr std::array<Mode, 4> kAllModes = {Mode::SignalA, Mode::PumpA,
                                                  Mode::SignalB, Mode::PumpB};

constexpr int mode_index(Mode m) noexcept { return static_cast<int>(m); }

/// Row of the amplitude quadrature X of mode m in the 8-component quadrature vector.
constexpr int x_index(Mode m) noexcept { return 2 * mode_index(m); }

/// Row of the phase quadrature Y of mode m.
constexpr int y_index(Mode m) noexcept { return 2 * mode_index(m) + 1; }

std::string_view mode_name(Mode m) noexcept;

/// Symplectic form for n modes in xyxy ordering: block diagonal sigma = [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// The 8x8 form of the full four-mode system.
const Mat8& symplectic_form8();

}  // namespace ndc
