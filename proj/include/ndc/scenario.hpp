#pragma once

#include "ndc/system_params.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ndc {

enum class ScenarioName { Fig2, Fig3, Fig4a, Fig4b, Fig5, Custom };

std::string_view scenario_name_string(ScenarioName name) noexcept;
ScenarioName scenario_name_from(std::string_view text);  // throws UsageError

/// Full description of one CLI run: effective physics parameters, resolution,
/// sweep axis (for the two sweep scenarios) and output destination.
struct Scenario {
  ScenarioName name = ScenarioName::Custom;
  double kappa = 1.13;
  double power_ratio = 1.0;
  double coupling_C = 0.08;        // mm^-1
  double nonlinearity_g = 0.0025;  // mm^-1 mW^-1/2
  double zeta_max = 6.0;
  int steps_per_unit = 4096;  // integration steps per unit zeta
  int rows_per_unit = 256;    // output rows per unit zeta
  InputPhases phases{};
  std::string out;                    // path stem or .csv path ("" = scenario name)
  std::string output_format = "csv";  // the only supported format
  int jobs = 0;                       // sweep concurrency bound; 0 = hardware

  // Sweep axis for fig4a (power ratios) and fig4b (kappa values); empty for
  // single-curve scenarios. fig4b carries a per-point zeta range so every curve
  // covers the same physical length.
  std::vector<double> sweep_values;
  bool sweep_over_kappa = false;
  std::vector<double> sweep_zeta_max;
};

/// Parameter pins of the named scenarios (kappa 1.13 with ratio 1e-20 / 1 for the
/// two single-curve regimes, the two sweep axes, kappa 2.26 with ratio 1 for the
/// inseparability run).
Scenario scenario_defaults(ScenarioName name);

/// One output row of a scenario curve.
struct CsvRow {
  double zeta = 0.0, z_mm = 0.0;
  double us2 = 0.0, vs2 = 0.0, up2 = 0.0, vp2 = 0.0;  // classical powers
  double dtheta = 0.0, dphi = 0.0;                    // unwrapped mismatches, NaN = gap
  double v_xs = 0.0, v_ys = 0.0;                      // V(X_sA, X_sB), V(Y_sA, Y_sB)
  double v_xp = 0.0, v_yp = 0.0;                      // V(X_pA, X_pB), V(Y_pA, Y_pB)
  double v_xpyp = 0.0, v_ypxp = 0.0;                  // V(X_pA, Y_pB), V(Y_pA, X_pB)
  double en_signals = 0.0, en_pumps = 0.0;
  double i1 = 0.0, i2 = 0.0, i3 = 0.0;  // optimized inseparability combinations
  double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
};

/// Worst physicality figures over a curve (reported in every summary).
struct PhysicalityWorst {
  double min_heisenberg_eigenvalue = 0.0;
  double max_purity_defect = 0.0;  // max |det(2V) - 1|
  double max_symmetry_defect = 0.0;
};

struct ScenarioCurve {
  std::vector<CsvRow> rows;
  PhysicalityWorst worst;
};

/// Runs the full pipeline for one parameter set and tabulates every output row.
/// Each covariance must pass the bona-fide check (Heisenberg eigenvalue >= -1e-10);
/// a breach raises IntegrationError.
ScenarioCurve compute_curve(const SystemParams& params, double zeta_max, int steps_per_unit,
                            int rows_per_unit);

/// Ordered key = value summary block; written next to the CSV and printed.
struct RunSummary {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value);
  const std::string* find(std::string_view key) const noexcept;
  std::string text() const;  // one "key = value" line per entry
};

/// Per-point outcome of a parameter sweep.
struct SweepPoint {
  double parameter = 0.0;  // ratio or kappa, depending on the axis
  double max_pump_en = 0.0;
  double argmax_zeta = 0.0;
  double argmax_z_mm = 0.0;
  std::string error;  // empty on success
};

/// Runs every sweep point (concurrently up to `jobs`), writing one CSV per point;
/// failures are recorded per point and do not abort the sweep.
std::vector<SweepPoint> sweep(const std::vector<double>& axis, const Scenario& base);

/// Executes the scenario: writes the CSV file(s) and the .summary file, returns the
/// summary. File writes go through a temporary so failures leave no partial output.
RunSummary run_scenario(const Scenario& s);

/// Thrown by parse_invocation when the user asks for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Resolves flags over config-file values over scenario defaults; throws UsageError
/// on unknown flags or keys, malformed values, and kappa <= 1. `args` excludes the
/// program name.
Scenario parse_invocation(const std::vector<std::string>& args);

/// Shortest decimal round-trip style formatting, 12 significant digits,
/// locale-independent (used for CSV cells and summary values).
std::string format_number(double x);

}  // namespace ndc
