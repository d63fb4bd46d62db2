#include "ndc/scenario.hpp"

#include "ndc/errors.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace ndc {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw UsageError("malformed number '" + text + "' for " + what);
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw UsageError("malformed integer '" + text + "' for " + what);
  return v;
}

InputPhases parse_phases(const std::string& text) {
  InputPhases ph{};
  std::size_t start = 0;
  int count = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
    if (count >= 4) throw UsageError("phases needs exactly four comma-separated values");
    ph[count++] = parse_double(piece, "phases");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (count != 4) throw UsageError("phases needs exactly four comma-separated values");
  return ph;
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

// Flat "key = value" lines; '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");

  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string stripped = trimmed(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + " is not 'key = value'");
    const std::string key = trimmed(stripped.substr(0, eq));
    const std::string value = trimmed(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError("config line " + std::to_string(lineno) + " is not 'key = value'");
    if (!kv.emplace(key, value).second)
      throw UsageError("config repeats key '" + key + "'");
  }
  return kv;
}

}  // namespace

Scenario parse_invocation(const std::vector<std::string>& args) {
  CLI::App app{"Coupled chi(2) waveguide entanglement scenarios"};

  std::string scenario_text, phases_text, out_text, config_text;
  double kappa = 0.0, ratio = 0.0, coupling = 0.0, nonlinearity = 0.0, zeta_max = 0.0;
  int steps = 0, jobs = 0;

  const auto o_scenario =
      app.add_option("--scenario", scenario_text, "fig2|fig3|fig4a|fig4b|fig5|custom");
  const auto o_kappa = app.add_option("--kappa", kappa, "effective coupling, must exceed 1");
  const auto o_ratio = app.add_option("--ratio", ratio, "signal/pump input power ratio");
  const auto o_coupling = app.add_option("--coupling", coupling, "linear coupling C, mm^-1");
  const auto o_nonlin =
      app.add_option("--nonlinearity", nonlinearity, "nonlinear constant g, mm^-1 mW^-1/2");
  const auto o_zmax = app.add_option("--zeta-max", zeta_max, "normalized propagation range");
  const auto o_steps =
      app.add_option("--steps-per-unit", steps, "integration steps per unit zeta");
  const auto o_phases =
      app.add_option("--phases", phases_text, "input phases theta_s,theta_p,phi_s,phi_p (rad)");
  const auto o_out = app.add_option("--out", out_text, "output path or stem");
  const auto o_jobs = app.add_option("--jobs", jobs, "max concurrent sweep points");
  app.add_option("--config", config_text, "flat key = value config file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("coupler");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  std::map<std::string, std::string> config;
  if (!config_text.empty()) config = read_config(config_text);

  const auto config_value = [&](const char* key) -> const std::string* {
    const auto it = config.find(key);
    return it == config.end() ? nullptr : &it->second;
  };

  // Scenario name decides the defaults everything else lands on.
  std::string name_text = "custom";
  if (const auto* v = config_value("scenario")) name_text = *v;
  if (o_scenario->count() > 0) name_text = scenario_text;
  Scenario s = scenario_defaults(scenario_name_from(name_text));

  bool zeta_overridden = false;

  // Config layer (ignored wherever an explicit flag takes precedence).
  for (const auto& [key, value] : config) {
    if (key == "scenario") continue;
    if (key == "kappa") {
      if (o_kappa->count() == 0) s.kappa = parse_double(value, key);
    } else if (key == "ratio") {
      if (o_ratio->count() == 0) s.power_ratio = parse_double(value, key);
    } else if (key == "coupling") {
      if (o_coupling->count() == 0) s.coupling_C = parse_double(value, key);
    } else if (key == "nonlinearity") {
      if (o_nonlin->count() == 0) s.nonlinearity_g = parse_double(value, key);
    } else if (key == "zeta-max") {
      if (o_zmax->count() == 0) {
        s.zeta_max = parse_double(value, key);
        zeta_overridden = true;
      }
    } else if (key == "steps-per-unit") {
      if (o_steps->count() == 0) s.steps_per_unit = parse_int(value, key);
    } else if (key == "phases") {
      if (o_phases->count() == 0) s.phases = parse_phases(value);
    } else if (key == "out") {
      if (o_out->count() == 0) s.out = value;
    } else if (key == "jobs") {
      if (o_jobs->count() == 0) s.jobs = parse_int(value, key);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }

  // Flag layer.
  if (o_kappa->count() > 0) s.kappa = kappa;
  if (o_ratio->count() > 0) s.power_ratio = ratio;
  if (o_coupling->count() > 0) s.coupling_C = coupling;
  if (o_nonlin->count() > 0) s.nonlinearity_g = nonlinearity;
  if (o_zmax->count() > 0) {
    s.zeta_max = zeta_max;
    zeta_overridden = true;
  }
  if (o_steps->count() > 0) s.steps_per_unit = steps;
  if (o_phases->count() > 0) s.phases = parse_phases(phases_text);
  if (o_out->count() > 0) s.out = out_text;
  if (o_jobs->count() > 0) s.jobs = jobs;

  // An explicit range overrides the per-point ranges of the kappa sweep.
  if (zeta_overridden) s.sweep_zeta_max.clear();

  if (!(s.kappa > 1.0))
    throw UsageError("kappa must exceed 1: below the threshold the fluctuations grow "
                     "exponentially and the linearized model is invalid");
  if (!(s.power_ratio >= 0.0)) throw UsageError("ratio must be non-negative");
  if (!(s.coupling_C > 0.0)) throw UsageError("coupling must be positive");
  if (!(s.nonlinearity_g > 0.0)) throw UsageError("nonlinearity must be positive");
  if (!(s.zeta_max > 0.0)) throw UsageError("zeta-max must be positive");
  if (s.steps_per_unit < 1) throw UsageError("steps-per-unit must be at least 1");
  if (s.jobs < 0) throw UsageError("jobs must be non-negative");

  return s;
}

}  // namespace ndc
