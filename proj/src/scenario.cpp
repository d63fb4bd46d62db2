#include "ndc/scenario.hpp"

#include "ndc/classical_dynamics.hpp"
#include "ndc/entanglement.hpp"
#include "ndc/errors.hpp"
#include "ndc/propagation.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

namespace ndc {

namespace {

constexpr const char* kSchemaVersion = "v1";
constexpr double kHeisenbergTol = -1e-10;

constexpr const char* kCsvHeader =
    "zeta,z_mm,us2,vs2,up2,vp2,dtheta,dphi,"
    "V_XsA_XsB,V_YsA_YsB,V_XpA_XpB,V_YpA_YpB,V_XpA_YpB,V_YpA_XpB,"
    "EN_signals,EN_pumps,I1,I2,I3,r1,r2,r3,r4";

}  // namespace

std::string_view scenario_name_string(ScenarioName name) noexcept {
  switch (name) {
    case ScenarioName::Fig2: return "fig2";
    case ScenarioName::Fig3: return "fig3";
    case ScenarioName::Fig4a: return "fig4a";
    case ScenarioName::Fig4b: return "fig4b";
    case ScenarioName::Fig5: return "fig5";
    case ScenarioName::Custom: return "custom";
  }
  return "custom";
}

ScenarioName scenario_name_from(std::string_view text) {
  for (ScenarioName n : {ScenarioName::Fig2, ScenarioName::Fig3, ScenarioName::Fig4a,
                         ScenarioName::Fig4b, ScenarioName::Fig5, ScenarioName::Custom})
    if (text == scenario_name_string(n)) return n;
  throw UsageError("unknown scenario '" + std::string(text) +
                   "' (expected fig2, fig3, fig4a, fig4b, fig5 or custom)");
}

Scenario scenario_defaults(ScenarioName name) {
  Scenario s;
  s.name = name;
  switch (name) {
    case ScenarioName::Fig2:
      s.kappa = 1.13;
      s.power_ratio = 1e-20;
      s.zeta_max = 6.0;
      break;
    case ScenarioName::Fig3:
      s.kappa = 1.13;
      s.power_ratio = 1.0;
      s.zeta_max = 6.0;
      break;
    case ScenarioName::Fig4a:
      s.kappa = 1.13;
      s.power_ratio = 0.25;
      s.zeta_max = 6.0;
      s.sweep_values = {0.1, 1.0 / 9.0, 0.25, 2.0 / 3.0, 1.0};
      s.sweep_over_kappa = false;
      break;
    case ScenarioName::Fig4b:
      s.kappa = 1.13;
      s.power_ratio = 0.25;
      s.zeta_max = 6.0;
      s.sweep_values = {1.01, 1.13, 1.6, 2.26, 3.2};
      s.sweep_over_kappa = true;
      // Per-kappa range ending before the revival after the first pump-negativity
      // maximum, so that maximum is interior and is the largest value in range.
      s.sweep_zeta_max = {4.0, 4.0, 2.6, 1.65, 1.05};
      break;
    case ScenarioName::Fig5:
      s.kappa = 2.26;
      s.power_ratio = 1.0;
      s.zeta_max = 4.0;
      break;
    case ScenarioName::Custom:
      break;
  }
  return s;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void RunSummary::add(std::string key, std::string value) {
  entries.emplace_back(std::move(key), std::move(value));
}

const std::string* RunSummary::find(std::string_view key) const noexcept {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::string RunSummary::text() const {
  std::string out;
  for (const auto& [k, v] : entries) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

ScenarioCurve compute_curve(const SystemParams& params, double zeta_max, int steps_per_unit,
                            int rows_per_unit) {
  if (steps_per_unit < 1 || rows_per_unit < 1)
    throw DomainError("steps_per_unit and rows_per_unit must be positive");

  const int steps = std::max(2, static_cast<int>(std::llround(steps_per_unit * zeta_max)));
  const int store_every = std::max(1, steps_per_unit / rows_per_unit);
  const PropagatedState state = integrate_propagator(params, zeta_max, steps, store_every);

  ScenarioCurve curve;
  curve.rows.reserve(state.size());
  curve.worst.min_heisenberg_eigenvalue = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < state.size(); ++i) {
    const Mat8& V = state.covariances[i];
    const PhysicalityReport rep = physicality_report(V);
    if (!(rep.min_heisenberg_eigenvalue >= kHeisenbergTol))
      throw IntegrationError("covariance failed the bona-fide (Heisenberg) check",
                             state.zeta[i]);

    curve.worst.min_heisenberg_eigenvalue =
        std::min(curve.worst.min_heisenberg_eigenvalue, rep.min_heisenberg_eigenvalue);
    const double purity_defect = std::abs(1.0 / (rep.purity * rep.purity) - 1.0);
    curve.worst.max_purity_defect = std::max(curve.worst.max_purity_defect, purity_defect);
    curve.worst.max_symmetry_defect =
        std::max(curve.worst.max_symmetry_defect, rep.symmetry_defect);

    const ClassicalState& cs = state.classical[i];
    const PhaseSet& th = state.phases[i];

    CsvRow row;
    row.zeta = state.zeta[i];
    row.z_mm = params.zeta_to_z(row.zeta);
    row.us2 = std::norm(cs.signal_a);
    row.vs2 = std::norm(cs.signal_b);
    row.up2 = std::norm(cs.pump_a);
    row.vp2 = std::norm(cs.pump_b);
    row.dtheta = th[mode_index(Mode::PumpA)] - 2.0 * th[mode_index(Mode::SignalA)];
    row.dphi = th[mode_index(Mode::PumpB)] - 2.0 * th[mode_index(Mode::SignalB)];
    row.v_xs = V(x_index(Mode::SignalA), x_index(Mode::SignalB));
    row.v_ys = V(y_index(Mode::SignalA), y_index(Mode::SignalB));
    row.v_xp = V(x_index(Mode::PumpA), x_index(Mode::PumpB));
    row.v_yp = V(y_index(Mode::PumpA), y_index(Mode::PumpB));
    row.v_xpyp = V(x_index(Mode::PumpA), y_index(Mode::PumpB));
    row.v_ypxp = V(y_index(Mode::PumpA), x_index(Mode::PumpB));
    row.en_signals = signal_log_negativity(V);
    row.en_pumps = pump_log_negativity(V);

    const VlfResult vlf = vlf_optimize(V);
    row.i1 = vlf.values[0];
    row.i2 = vlf.values[1];
    row.i3 = vlf.values[2];
    row.r1 = vlf.gains[0];
    row.r2 = vlf.gains[1];
    row.r3 = vlf.gains[2];
    row.r4 = vlf.gains[3];

    curve.rows.push_back(row);
  }
  return curve;
}

namespace {

// All writes go to <path>.tmp first; the rename keeps failed runs from leaving
// partial output behind.
void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open output file '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw UsageError("failed while writing '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw UsageError("cannot move output into place at '" + path + "'");
  }
}

std::string phases_string(const InputPhases& ph) {
  return format_number(ph[0]) + "," + format_number(ph[1]) + "," + format_number(ph[2]) + "," +
         format_number(ph[3]);
}

// Output stem: --out minus a trailing .csv, or the scenario name.
std::string output_stem(const Scenario& s) {
  std::string stem = s.out.empty() ? std::string(scenario_name_string(s.name)) : s.out;
  if (stem.size() > 4 && stem.ends_with(".csv")) stem.resize(stem.size() - 4);
  return stem;
}

void append_effective_params(std::string& text, const Scenario& s, double kappa, double ratio,
                             double zeta_max) {
  text += "# scenario = ";
  text += scenario_name_string(s.name);
  text += "\n# kappa = " + format_number(kappa);
  text += "\n# ratio = " + format_number(ratio);
  text += "\n# coupling_C = " + format_number(s.coupling_C);
  text += "\n# nonlinearity_g = " + format_number(s.nonlinearity_g);
  text += "\n# zeta_max = " + format_number(zeta_max);
  text += "\n# steps_per_unit = " + std::to_string(s.steps_per_unit);
  text += "\n# rows_per_unit = " + std::to_string(s.rows_per_unit);
  text += "\n# phases = " + phases_string(s.phases);
  text += "\n";
}

std::string csv_text(const Scenario& s, double kappa, double ratio, double zeta_max,
                     const ScenarioCurve& curve) {
  std::string text = "# coupled-waveguide scenario output, schema ";
  text += kSchemaVersion;
  text += "\n";
  append_effective_params(text, s, kappa, ratio, zeta_max);
  text += kCsvHeader;
  text += "\n";
  for (const CsvRow& r : curve.rows) {
    const double cells[] = {r.zeta,   r.z_mm,   r.us2,         r.vs2,      r.up2,  r.vp2,
                            r.dtheta, r.dphi,   r.v_xs,        r.v_ys,     r.v_xp, r.v_yp,
                            r.v_xpyp, r.v_ypxp, r.en_signals,  r.en_pumps, r.i1,   r.i2,
                            r.i3,     r.r1,     r.r2,          r.r3,       r.r4};
    bool first = true;
    for (double c : cells) {
      if (!first) text += ',';
      text += format_number(c);
      first = false;
    }
    text += '\n';
  }
  return text;
}

struct Peak {
  double value = 0.0;
  double zeta = 0.0;
  double z_mm = 0.0;
};

Peak peak_of(const ScenarioCurve& curve, double CsvRow::*field) {
  Peak p{-std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (const CsvRow& r : curve.rows) {
    const double v = r.*field;
    if (v > p.value) p = {v, r.zeta, r.z_mm};
  }
  return p;
}

// zeta intervals over which all three combinations sit below the bound 2,
// formatted "a..b" and joined with ";" ("none" when empty).
std::string violation_intervals(const ScenarioCurve& curve) {
  std::string out;
  bool open = false;
  double start = 0.0, last = 0.0;
  for (const CsvRow& r : curve.rows) {
    const bool violated = r.i1 < 2.0 && r.i2 < 2.0 && r.i3 < 2.0;
    if (violated && !open) {
      open = true;
      start = r.zeta;
    }
    if (violated) last = r.zeta;
    if (!violated && open) {
      open = false;
      if (!out.empty()) out += ';';
      out += format_number(start) + ".." + format_number(last);
    }
  }
  if (open) {
    if (!out.empty()) out += ';';
    out += format_number(start) + ".." + format_number(last);
  }
  return out.empty() ? "none" : out;
}

void add_physicality(RunSummary& sum, const PhysicalityWorst& w) {
  sum.add("worst_heisenberg_min_eigenvalue", format_number(w.min_heisenberg_eigenvalue));
  sum.add("worst_purity_defect", format_number(w.max_purity_defect));
  sum.add("worst_symmetry_defect", format_number(w.max_symmetry_defect));
}

void validate_run(const Scenario& s) {
  if (s.output_format != "csv")
    throw UsageError("unsupported output format '" + s.output_format + "'");
  if (!(s.zeta_max > 0.0)) throw UsageError("zeta-max must be positive");
  if (s.steps_per_unit < 1) throw UsageError("steps-per-unit must be at least 1");
  if (!(s.kappa > 1.0))
    throw UsageError("kappa must exceed 1: the linearized model is invalid at or below "
                     "the threshold");
  if (!(s.power_ratio >= 0.0)) throw UsageError("ratio must be non-negative");
  if (!(s.coupling_C > 0.0)) throw UsageError("coupling must be positive");
  if (!(s.nonlinearity_g > 0.0)) throw UsageError("nonlinearity must be positive");
  if (s.jobs < 0) throw UsageError("jobs must be non-negative");
}

RunSummary run_single(const Scenario& s) {
  const SystemParams params =
      build_params(s.coupling_C, s.nonlinearity_g, s.kappa, s.power_ratio, s.phases);
  const ScenarioCurve curve = compute_curve(params, s.zeta_max, s.steps_per_unit,
                                            s.rows_per_unit);

  const std::string stem = output_stem(s);
  const std::string csv_path = stem + ".csv";
  write_text_file(csv_path, csv_text(s, s.kappa, s.power_ratio, s.zeta_max, curve));

  RunSummary sum;
  sum.add("scenario", std::string(scenario_name_string(s.name)));
  sum.add("kappa", format_number(s.kappa));
  sum.add("ratio", format_number(s.power_ratio));
  sum.add("coupling_C", format_number(s.coupling_C));
  sum.add("nonlinearity_g", format_number(s.nonlinearity_g));
  sum.add("zeta_max", format_number(s.zeta_max));
  sum.add("steps_per_unit", std::to_string(s.steps_per_unit));
  sum.add("rows_per_unit", std::to_string(s.rows_per_unit));
  sum.add("phases", phases_string(s.phases));
  sum.add("csv", csv_path);
  sum.add("rows", std::to_string(curve.rows.size()));

  const Peak ps = peak_of(curve, &CsvRow::en_signals);
  sum.add("peak_en_signals", format_number(ps.value));
  sum.add("peak_en_signals_zeta", format_number(ps.zeta));
  sum.add("peak_en_signals_z_mm", format_number(ps.z_mm));

  const Peak pp = peak_of(curve, &CsvRow::en_pumps);
  sum.add("peak_en_pumps", format_number(pp.value));
  sum.add("peak_en_pumps_zeta", format_number(pp.zeta));
  sum.add("peak_en_pumps_z_mm", format_number(pp.z_mm));

  // Where both subsystems are entangled at once: the best min(EN_s, EN_p) row.
  Peak joint{-std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (const CsvRow& r : curve.rows) {
    const double v = std::min(r.en_signals, r.en_pumps);
    if (v > joint.value) joint = {v, r.zeta, r.z_mm};
  }
  sum.add("max_joint_en", format_number(joint.value));
  sum.add("max_joint_en_zeta", format_number(joint.zeta));
  sum.add("max_joint_en_z_mm", format_number(joint.z_mm));

  sum.add("vlf_violation_intervals", violation_intervals(curve));
  add_physicality(sum, curve.worst);

  write_text_file(stem + ".summary", "# coupled-waveguide scenario summary, schema " +
                                         std::string(kSchemaVersion) + "\n" + sum.text());
  return sum;
}

RunSummary run_sweep(const Scenario& s) {
  const std::vector<SweepPoint> points = sweep(s.sweep_values, s);
  const std::string stem = output_stem(s);

  std::string peaks = "# coupled-waveguide sweep peak table, schema ";
  peaks += kSchemaVersion;
  peaks += "\n# axis = ";
  peaks += s.sweep_over_kappa ? "kappa" : "ratio";
  peaks += "\nparameter,max_EN_pumps,argmax_zeta,argmax_z_mm,error\n";
  for (const SweepPoint& p : points) {
    peaks += format_number(p.parameter) + ',' + format_number(p.max_pump_en) + ',' +
             format_number(p.argmax_zeta) + ',' + format_number(p.argmax_z_mm) + ',' +
             p.error + '\n';
  }
  const std::string peaks_path = stem + ".peaks.csv";
  write_text_file(peaks_path, peaks);

  RunSummary sum;
  sum.add("scenario", std::string(scenario_name_string(s.name)));
  sum.add("axis", s.sweep_over_kappa ? "kappa" : "ratio");
  sum.add(s.sweep_over_kappa ? "ratio" : "kappa",
          format_number(s.sweep_over_kappa ? s.power_ratio : s.kappa));
  sum.add("coupling_C", format_number(s.coupling_C));
  sum.add("nonlinearity_g", format_number(s.nonlinearity_g));
  sum.add("steps_per_unit", std::to_string(s.steps_per_unit));
  sum.add("points", std::to_string(points.size()));
  sum.add("peaks_csv", peaks_path);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string pre = "point" + std::to_string(i) + "_";
    sum.add(pre + "parameter", format_number(points[i].parameter));
    if (points[i].error.empty()) {
      sum.add(pre + "max_pump_en", format_number(points[i].max_pump_en));
      sum.add(pre + "argmax_zeta", format_number(points[i].argmax_zeta));
      sum.add(pre + "argmax_z_mm", format_number(points[i].argmax_z_mm));
    } else {
      sum.add(pre + "error", points[i].error);
    }
  }

  write_text_file(stem + ".summary", "# coupled-waveguide sweep summary, schema " +
                                         std::string(kSchemaVersion) + "\n" + sum.text());
  return sum;
}

}  // namespace

std::vector<SweepPoint> sweep(const std::vector<double>& axis, const Scenario& base) {
  if (axis.empty()) throw DomainError("sweep: empty parameter axis");

  const std::string stem = output_stem(base);
  std::vector<SweepPoint> points(axis.size());

  const auto run_point = [&](std::size_t i) {
    SweepPoint& pt = points[i];
    pt.parameter = axis[i];
    try {
      Scenario single = base;
      single.sweep_values.clear();
      single.sweep_zeta_max.clear();
      if (base.sweep_over_kappa)
        single.kappa = axis[i];
      else
        single.power_ratio = axis[i];
      if (i < base.sweep_zeta_max.size()) single.zeta_max = base.sweep_zeta_max[i];

      const SystemParams params = build_params(single.coupling_C, single.nonlinearity_g,
                                               single.kappa, single.power_ratio, single.phases);
      const ScenarioCurve curve =
          compute_curve(params, single.zeta_max, single.steps_per_unit, single.rows_per_unit);

      const std::string path = stem + ".point" + std::to_string(i) + ".csv";
      write_text_file(path, csv_text(single, single.kappa, single.power_ratio,
                                     single.zeta_max, curve));

      const Peak p = peak_of(curve, &CsvRow::en_pumps);
      pt.max_pump_en = p.value;
      pt.argmax_zeta = p.zeta;
      pt.argmax_z_mm = p.z_mm;
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  };

  unsigned jobs = base.jobs > 0 ? static_cast<unsigned>(base.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, axis.size());

  if (jobs <= 1) {
    for (std::size_t i = 0; i < axis.size(); ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1))
          run_point(i);
      });
    for (auto& t : workers) t.join();
  }
  return points;
}

RunSummary run_scenario(const Scenario& s) {
  validate_run(s);
  return s.sweep_values.empty() ? run_single(s) : run_sweep(s);
}

}  // namespace ndc
