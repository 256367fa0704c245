#include "sedr/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sedr/edr.hpp"

namespace sedr::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj,
                    std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
    }
  }
}

const json& expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError("config: " + where + " must be an object");
  return j;
}

double get_number(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw ConfigError("config: " + where + "." + key + " must be a number");
  }
  return it->get<double>();
}

double get_positive(const json& obj, const char* key, const std::string& where) {
  const double v = get_number(obj, key, where);
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ConfigError("config: " + where + "." + key + " must be > 0");
  }
  return v;
}

std::size_t get_count(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() || it->get<long long>() < 1) {
    throw ConfigError("config: " + where + "." + key +
                      " must be an integer >= 1");
  }
  return it->get<std::size_t>();
}

GridSpec parse_grid(const json& j, const std::string& where, bool allow_spacing) {
  expect_object(j, where);
  if (allow_spacing) {
    reject_unknown(j, {"min", "max", "count", "spacing"}, where);
  } else {
    reject_unknown(j, {"min", "max", "count"}, where);
  }
  GridSpec grid;
  grid.min = get_positive(j, "min", where);
  grid.max = get_positive(j, "max", where);
  if (grid.max < grid.min) {
    throw ConfigError("config: " + where + ".max must be >= min");
  }
  grid.count = get_count(j, "count", where);
  if (allow_spacing && j.contains("spacing")) {
    const std::string s = j.at("spacing").is_string()
                              ? j.at("spacing").get<std::string>()
                              : std::string();
    if (s == "linear") {
      grid.spacing = GridSpec::Spacing::linear;
    } else if (s == "log") {
      grid.spacing = GridSpec::Spacing::log;
    } else {
      throw ConfigError("config: " + where + ".spacing must be 'linear' or 'log'");
    }
  }
  return grid;
}

oracle::WelchConfig parse_welch(const json& j, const std::string& where) {
  expect_object(j, where);
  reject_unknown(j, {"segment_length", "overlap", "window"}, where);
  oracle::WelchConfig welch;
  if (j.contains("segment_length")) {
    welch.segment_length = get_count(j, "segment_length", where);
  }
  if (j.contains("overlap")) {
    const double v = get_number(j, "overlap", where);
    if (!(v >= 0.0) || !(v < 1.0)) {
      throw ConfigError("config: " + where + ".overlap must be in [0, 1)");
    }
    welch.overlap_fraction = v;
  }
  if (j.contains("window")) {
    const std::string w = j.at("window").is_string()
                              ? j.at("window").get<std::string>()
                              : std::string();
    if (w == "hann") {
      welch.window = oracle::WelchConfig::Window::hann;
    } else if (w == "rectangular") {
      welch.window = oracle::WelchConfig::Window::rectangular;
    } else {
      throw ConfigError("config: " + where +
                        ".window must be 'hann' or 'rectangular'");
    }
  }
  return welch;
}

OracleSpec parse_oracle(const json& j) {
  const std::string where = "oracle";
  expect_object(j, where);
  reject_unknown(j,
                 {"dt", "n_samples", "n_realizations", "seed", "band", "welch",
                  "dump_prefix"},
                 where);
  OracleSpec spec;
  if (j.contains("dt")) spec.sim.dt = get_positive(j, "dt", where);
  if (j.contains("n_samples")) spec.sim.n_samples = get_count(j, "n_samples", where);
  if (j.contains("n_realizations")) {
    spec.sim.n_realizations = get_count(j, "n_realizations", where);
  }
  if (j.contains("seed")) {
    const auto& s = j.at("seed");
    if (!s.is_number_integer() ||
        (!s.is_number_unsigned() && s.get<long long>() < 0)) {
      throw ConfigError("config: oracle.seed must be a non-negative integer");
    }
    spec.sim.seed = s.get<std::uint64_t>();
  }
  if (j.contains("band")) {
    const auto& b = j.at("band");
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      throw ConfigError("config: oracle.band must be [lo, hi]");
    }
    spec.band_lo = b[0].get<double>();
    spec.band_hi = b[1].get<double>();
    if (!(spec.band_lo > 0.0) || !(spec.band_hi > spec.band_lo)) {
      throw ConfigError("config: oracle.band must satisfy 0 < lo < hi");
    }
  }
  if (j.contains("welch")) spec.sim.welch = parse_welch(j.at("welch"), "oracle.welch");
  if (j.contains("dump_prefix")) {
    if (!j.at("dump_prefix").is_string()) {
      throw ConfigError("config: oracle.dump_prefix must be a string");
    }
    spec.dump_prefix = j.at("dump_prefix").get<std::string>();
  }
  try {
    spec.sim.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: oracle: ") + e.what());
  }
  return spec;
}

model::PhysicalParams parse_physical(const json& j) {
  const std::string where = "physical";
  expect_object(j, where);
  reject_unknown(j,
                 {"mass", "omega_m", "kappa_m", "laser_power", "carrier_omega",
                  "hbar", "c"},
                 where);
  model::PhysicalParams p{};
  p.mass = get_positive(j, "mass", where);
  p.omega_m = get_positive(j, "omega_m", where);
  p.kappa_m = get_positive(j, "kappa_m", where);
  p.laser_power = get_positive(j, "laser_power", where);
  p.carrier_omega = get_positive(j, "carrier_omega", where);
  p.hbar = get_positive(j, "hbar", where);
  p.c = get_positive(j, "c", where);
  return p;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("config: output.format must be 'csv' or 'json'");
}

SigmaEntry parse_sigma_entry(const json& j, double rho, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "auto") {
      throw ConfigError("config: " + where + " must be a number > 0 or 'auto'");
    }
    return {sweep::closed_form_sigma_opt(rho), true};
  }
  if (!j.is_number()) {
    throw ConfigError("config: " + where + " must be a number > 0 or 'auto'");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ConfigError("config: " + where + " must be > 0");
  }
  return {v, false};
}

json sigma_metadata(const RunConfig& config) {
  json list = json::array();
  for (const SigmaEntry& s : config.sigmas) {
    list.push_back({{"value", s.value}, {"auto", s.was_auto}});
  }
  return list;
}

json physical_metadata(const RunConfig& config) {
  if (!config.physical) return nullptr;
  const auto& p = *config.physical;
  return {{"mass", p.mass},
          {"omega_m", p.omega_m},
          {"kappa_m", p.kappa_m},
          {"laser_power", p.laser_power},
          {"carrier_omega", p.carrier_omega},
          {"hbar", p.hbar},
          {"c", p.c},
          {"implied_rho", config.rho},
          {"implied_sigma",
           config.sigmas.empty() ? json(nullptr) : json(config.sigmas[0].value)}};
}

std::filesystem::path indexed_path(const std::filesystem::path& path,
                                   std::size_t index, std::size_t total) {
  if (total <= 1) return path;
  std::filesystem::path p = path;
  const std::string suffix = "_sigma" + std::to_string(index);
  p.replace_filename(path.stem().string() + suffix +
                     path.extension().string());
  return p;
}

std::filesystem::path suffixed_path(const std::filesystem::path& path,
                                    const std::string& suffix) {
  std::filesystem::path p = path;
  p.replace_filename(path.stem().string() + suffix + path.extension().string());
  return p;
}

int write_text(const std::filesystem::path& path, const std::string& text,
               std::ostream& diag) {
  std::ofstream out(path, std::ios::binary);  // '\n' line endings, verbatim
  if (!out) {
    diag << "error: cannot open '" << path.string() << "' for writing\n";
    return kExitIoError;
  }
  out << text;
  out.flush();
  if (!out) {
    diag << "error: failed writing '" << path.string() << "'\n";
    return kExitIoError;
  }
  return kExitOk;
}

json issue_json(const RowIssue& issue) {
  return {{"sigma", issue.sigma},
          {"x", issue.x},
          {"kind", edr::to_string(issue.kind)},
          {"lhs", issue.lhs},
          {"rhs", issue.rhs},
          {"margin", issue.margin}};
}

json band_stats_json(const oracle::BandStats& s) {
  return {{"bins", s.n_bins},
          {"bins_z_lt_3", s.n_z_ok},
          {"frac_z_lt_3", s.frac_z_ok},
          {"max_abs_z", s.max_abs_z},
          {"band_rel_dev", s.band_rel_dev}};
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace

std::vector<double> GridSpec::make() const {
  return spacing == Spacing::linear ? sweep::linspace(min, max, count)
                                    : sweep::logspace(min, max, count);
}

namespace {

RunConfig parse_config_impl(const json& j) {
  expect_object(j, "config");
  reject_unknown(j,
                 {"rho", "sigma", "sigmas", "x_grid", "boundaries", "oracle",
                  "physical", "output"},
                 "config");

  RunConfig config;

  if (j.contains("physical")) {
    require(!j.contains("rho") && !j.contains("sigma") && !j.contains("sigmas"),
            "config: 'physical' excludes explicit 'rho'/'sigma'/'sigmas'");
    config.physical = parse_physical(j.at("physical"));
    const model::DimensionlessParams dp =
        model::reduce(*config.physical, config.physical->omega_m);
    config.rho = dp.rho;
    config.sigmas.push_back({dp.sigma, false});
  } else {
    require(j.contains("rho"), "config: missing required key 'rho'");
    config.rho = get_positive(j, "rho", "config");
    require(!(j.contains("sigma") && j.contains("sigmas")),
            "config: give either 'sigma' or 'sigmas', not both");
    if (j.contains("sigma")) {
      config.sigmas.push_back(parse_sigma_entry(j.at("sigma"), config.rho, "sigma"));
    }
    if (j.contains("sigmas")) {
      const auto& list = j.at("sigmas");
      require(list.is_array() && !list.empty(),
              "config: 'sigmas' must be a non-empty array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        config.sigmas.push_back(parse_sigma_entry(
            list[i], config.rho, "sigmas[" + std::to_string(i) + "]"));
      }
    }
  }

  if (j.contains("x_grid")) {
    config.x_grid = parse_grid(j.at("x_grid"), "x_grid", /*allow_spacing=*/true);
  }
  if (j.contains("boundaries")) {
    config.boundary_grid =
        parse_grid(j.at("boundaries"), "boundaries", /*allow_spacing=*/false);
  }
  if (j.contains("oracle")) config.oracle = parse_oracle(j.at("oracle"));
  if (j.contains("output")) {
    const auto& o = expect_object(j.at("output"), "output");
    reject_unknown(o, {"path", "format"}, "output");
    if (o.contains("path")) {
      require(o.at("path").is_string(), "config: output.path must be a string");
      config.out_path = std::filesystem::path(o.at("path").get<std::string>());
    }
    if (o.contains("format")) {
      require(o.at("format").is_string(),
              "config: output.format must be a string");
      config.format = parse_format(o.at("format").get<std::string>());
    }
  }
  return config;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  try {
    return parse_config_impl(j);
  } catch (const json::exception& e) {
    // Any type surprise the explicit checks missed is still a config error.
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void apply_overrides(RunConfig& config, std::optional<std::uint64_t> seed,
                     std::optional<std::string> out,
                     std::optional<std::string> format) {
  if (seed) {
    if (!config.oracle) config.oracle.emplace();
    config.oracle->sim.seed = *seed;
  }
  if (out) config.out_path = std::filesystem::path(*out);
  if (format) config.format = parse_format(*format);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CheckResult check_sweep(const sweep::SweepResult& result) {
  CheckResult out;
  for (const sweep::SweepRow& row : result.rows) {
    for (const edr::InequalityVerdict* v :
         {&row.ozawa, &row.branciard, &row.robertson}) {
      if (!v->satisfied) {
        out.pass = false;
        out.offending.push_back(
            {result.sigma, row.x, v->kind, v->lhs, v->rhs, v->margin});
      }
    }
    if (!row.heisenberg.satisfied) {
      out.heisenberg_violations.push_back({result.sigma, row.x,
                                           row.heisenberg.kind,
                                           row.heisenberg.lhs,
                                           row.heisenberg.rhs,
                                           row.heisenberg.margin});
    }
  }
  return out;
}

namespace {

std::string spectra_csv(const sweep::SweepResult& result) {
  std::string csv =
      "x,s_eps_t,s_eta_t,branciard_lhs,heisenberg_lhs,ozawa_lhs,chi_t,rhs\n";
  for (const sweep::SweepRow& row : result.rows) {
    csv += format_double(row.x);
    csv += ',';
    csv += format_double(row.ns.s_eps_t);
    csv += ',';
    csv += format_double(row.ns.s_eta_t);
    csv += ',';
    csv += format_double(row.branciard.lhs);
    csv += ',';
    csv += format_double(row.heisenberg.lhs);
    csv += ',';
    csv += format_double(row.ozawa.lhs);
    csv += ',';
    csv += format_double(row.ns.chi_t);
    csv += ',';
    csv += format_double(row.ns.chi_t * row.ns.chi_t);
    csv += '\n';
  }
  return csv;
}

json spectra_rows_json(const sweep::SweepResult& result) {
  json rows = json::array();
  for (const sweep::SweepRow& row : result.rows) {
    rows.push_back({{"x", row.x},
                    {"s_eps_t", row.ns.s_eps_t},
                    {"s_eta_t", row.ns.s_eta_t},
                    {"branciard_lhs", row.branciard.lhs},
                    {"heisenberg_lhs", row.heisenberg.lhs},
                    {"ozawa_lhs", row.ozawa.lhs},
                    {"chi_t", row.ns.chi_t},
                    {"rhs", row.ns.chi_t * row.ns.chi_t}});
  }
  return rows;
}

}  // namespace

int cmd_spectra(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (!config.x_grid) {
    diag << "error: spectra requires an 'x_grid' block\n";
    return kExitConfigError;
  }
  if (config.sigmas.empty()) {
    diag << "error: spectra requires 'sigma' or 'sigmas'\n";
    return kExitConfigError;
  }
  if (!config.out_path) {
    diag << "error: spectra requires an output path\n";
    return kExitConfigError;
  }
  const std::vector<double> grid = config.x_grid->make();

  json files = json::array();
  for (std::size_t i = 0; i < config.sigmas.size(); ++i) {
    const sweep::SweepResult result =
        sweep::frequency_sweep(config.rho, config.sigmas[i].value, grid);
    const std::filesystem::path path =
        indexed_path(*config.out_path, i, config.sigmas.size());
    std::string payload;
    if (config.format == OutputFormat::csv) {
      payload = spectra_csv(result);
    } else {
      payload = spectra_rows_json(result).dump(2) + "\n";
    }
    if (const int code = write_text(path, payload, diag); code != kExitOk) {
      return code;
    }
    files.push_back(path.string());
  }

  const json report = {{"command", "spectra"},
                       {"rho", config.rho},
                       {"sigmas", sigma_metadata(config)},
                       {"files", files},
                       {"physical", physical_metadata(config)}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_boundaries(const RunConfig& config, std::ostream& out,
                   std::ostream& diag) {
  if (!config.out_path) {
    diag << "error: boundaries requires an output path\n";
    return kExitConfigError;
  }

  auto emit = [&](const std::vector<double>& grid) {
    std::string csv = "s_eps_t,heisenberg,ozawa,branciard\n";
    for (const double se : grid) {
      auto cell = [&](edr::InequalityKind kind) -> std::string {
        const edr::BoundaryCurve curve =
            edr::saturation_boundary(kind, std::span<const double>(&se, 1));
        return curve.points.empty() ? std::string()
                                    : format_double(curve.points[0][1]);
      };
      csv += format_double(se);
      csv += ',';
      csv += cell(edr::InequalityKind::heisenberg);
      csv += ',';
      csv += cell(edr::InequalityKind::ozawa);
      csv += ',';
      csv += cell(edr::InequalityKind::branciard);
      csv += '\n';
    }
    return csv;
  };

  // The saturation curves are emitted on both spacings: log for wide-range
  // inspection, linear to match figure axes.
  json files = json::array();
  for (const auto& [suffix, spacing] :
       {std::pair{"_log", GridSpec::Spacing::log},
        std::pair{"_linear", GridSpec::Spacing::linear}}) {
    GridSpec grid_spec = config.boundary_grid;
    grid_spec.spacing = spacing;
    const std::filesystem::path path = suffixed_path(*config.out_path, suffix);
    if (const int code = write_text(path, emit(grid_spec.make()), diag);
        code != kExitOk) {
      return code;
    }
    files.push_back(path.string());
  }

  const json report = {{"command", "boundaries"},
                       {"grid",
                        {{"min", config.boundary_grid.min},
                         {"max", config.boundary_grid.max},
                         {"count", config.boundary_grid.count}}},
                       {"chi_t", 1.0},
                       {"files", files}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_optimize(const RunConfig& config, std::ostream& out,
                 std::ostream& diag) {
  sweep::Optimum opt{};
  try {
    opt = sweep::optimize_sigma(config.rho);
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  const double sigma_opt = opt.sigma_opt_closed_form;
  const std::vector<double> fig_sigmas = {sigma_opt / 5.0, sigma_opt,
                                          20.0 * sigma_opt};
  const std::vector<sweep::Regime> regimes =
      sweep::classify_regimes(config.rho, fig_sigmas);

  json regime_list = json::array();
  for (std::size_t i = 0; i < fig_sigmas.size(); ++i) {
    regime_list.push_back(
        {{"sigma", fig_sigmas[i]}, {"regime", sweep::to_string(regimes[i])}});
  }
  const json report = {
      {"command", "optimize"},
      {"rho", config.rho},
      {"sigma_opt_numeric", opt.sigma_opt_numeric},
      {"sigma_opt_closed_form", opt.sigma_opt_closed_form},
      {"min_lhs", opt.min_lhs},
      {"floor_gap", opt.floor_gap},
      {"regimes", regime_list},
      {"regime_thresholds",
       {{"error_dominated_above", 10.0},
        {"back_action_below", 1.5},
        {"note", "presentation conventions, evaluated at x = 1"}}},
      {"physical", physical_metadata(config)}};
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (config.out_path) {
    if (const int code = write_text(*config.out_path, text, diag);
        code != kExitOk) {
      return code;
    }
  }
  return kExitOk;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (!config.x_grid) {
    diag << "error: check requires an 'x_grid' block\n";
    return kExitConfigError;
  }
  if (config.sigmas.empty()) {
    diag << "error: check requires 'sigma' or 'sigmas'\n";
    return kExitConfigError;
  }
  const std::vector<double> grid = config.x_grid->make();

  bool pass = true;
  json entries = json::array();
  for (const SigmaEntry& sigma : config.sigmas) {
    const sweep::SweepResult result =
        sweep::frequency_sweep(config.rho, sigma.value, grid);
    const CheckResult check = check_sweep(result);
    pass = pass && check.pass;

    json offending = json::array();
    for (const RowIssue& issue : check.offending) offending.push_back(issue_json(issue));
    json hur_x = json::array();
    for (const RowIssue& issue : check.heisenberg_violations) hur_x.push_back(issue.x);
    entries.push_back({{"sigma", sigma.value},
                       {"auto", sigma.was_auto},
                       {"rows", result.rows.size()},
                       {"all_satisfied", check.pass},
                       {"offending", offending},
                       {"heisenberg_violations",
                        {{"count", check.heisenberg_violations.size()},
                         {"x", hur_x}}}});
  }

  const json report = {{"command", "check"},
                       {"rho", config.rho},
                       {"pass", pass},
                       {"entries", entries},
                       {"physical", physical_metadata(config)}};
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (config.out_path) {
    if (const int code = write_text(*config.out_path, text, diag);
        code != kExitOk) {
      return code;
    }
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (config.sigmas.size() != 1) {
    diag << "error: oracle requires exactly one sigma\n";
    return kExitConfigError;
  }
  const OracleSpec spec = config.oracle.value_or(OracleSpec{});
  const double sigma = config.sigmas[0].value;

  oracle::CrossValidationReport report;
  try {
    report = oracle::cross_validate(config.rho, sigma,
                                    {spec.band_lo, spec.band_hi}, spec.sim);
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (spec.dump_prefix) {
    const oracle::Spectrum flat_f0 = [&](double) {
      return model::probe_spectra(sigma).s_f0;
    };
    const oracle::Spectrum flat_q0 = [&](double) {
      return model::probe_spectra(sigma).s_q0;
    };
    const oracle::TimeSeries f0 = oracle::synthesize(flat_f0, spec.sim, 0);
    const oracle::TimeSeries q0 = oracle::synthesize(flat_q0, spec.sim, 1);
    const oracle::ChainOutput chain = oracle::chain_response(f0, q0, config.rho);
    try {
      oracle::dump_series(*spec.dump_prefix + "_f0.bin", f0);
      oracle::dump_series(*spec.dump_prefix + "_q0.bin", q0);
      oracle::dump_series(*spec.dump_prefix + "_n.bin", chain.error_signal);
      oracle::dump_series(*spec.dump_prefix + "_d.bin",
                          chain.disturbance_signal);
    } catch (const std::exception& e) {
      diag << "error: " << e.what() << '\n';
      return kExitIoError;
    }
  }

  const json jreport = {
      {"command", "oracle"},
      {"pass", report.pass},
      {"rho", report.rho},
      {"sigma", report.sigma},
      {"seed", report.seed},
      {"band", {report.band_lo, report.band_hi}},
      {"low_confidence", report.low_confidence},
      {"config",
       {{"dt", spec.sim.dt},
        {"n_samples", spec.sim.n_samples},
        {"n_realizations", spec.sim.n_realizations},
        {"welch",
         {{"segment_length", spec.sim.welch.segment_length},
          {"overlap", spec.sim.welch.overlap_fraction},
          {"window", spec.sim.welch.window == oracle::WelchConfig::Window::hann
                         ? "hann"
                         : "rectangular"}}}}},
      {"s_eps", band_stats_json(report.eps)},
      {"s_eta", band_stats_json(report.eta)},
      {"physical", physical_metadata(config)}};
  const std::string text = jreport.dump(2) + "\n";
  out << text;
  if (config.out_path) {
    if (const int code = write_text(*config.out_path, text, diag);
        code != kExitOk) {
      return code;
    }
  }
  return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace sedr::cli
