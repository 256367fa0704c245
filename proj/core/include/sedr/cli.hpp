#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedr/model.hpp"
#include "sedr/oracle.hpp"
#include "sedr/sweep.hpp"

namespace sedr::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;           // success / PASS
inline constexpr int kExitCheckFailed = 1;  // inequality or validation failure
inline constexpr int kExitConfigError = 2;  // invalid config
inline constexpr int kExitIoError = 3;      // unwritable output path

// Raised for any config problem: unreadable file, malformed JSON, unknown
// key, wrong type, or out-of-range value.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  enum class Spacing { linear, log } spacing = Spacing::linear;

  std::vector<double> make() const;
};

struct SigmaEntry {
  double value = 0.0;
  bool was_auto = false;  // resolved from "auto" via closed_form_sigma_opt
};

struct OracleSpec {
  oracle::SimulationConfig sim{};
  double band_lo = 0.5;
  double band_hi = 1.5;
  std::optional<std::string> dump_prefix;
};

enum class OutputFormat { csv, json };

// Validated run configuration. The JSON schema it is checked against is
// published in docs/run-config.schema.json; unknown keys are rejected at
// every level before any computation starts.
struct RunConfig {
  double rho = 0.0;
  std::vector<SigmaEntry> sigmas;
  std::optional<GridSpec> x_grid;
  GridSpec boundary_grid{0.01, 4.0, 200, GridSpec::Spacing::log};
  std::optional<OracleSpec> oracle;
  std::optional<model::PhysicalParams> physical;
  std::optional<std::filesystem::path> out_path;
  OutputFormat format = OutputFormat::csv;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

// Command-line overrides (--seed, --out, --format).
void apply_overrides(RunConfig& config,
                     std::optional<std::uint64_t> seed,
                     std::optional<std::string> out,
                     std::optional<std::string> format);

// Offending row of a sweep-wide inequality check.
struct RowIssue {
  double sigma;
  double x;
  edr::InequalityKind kind;
  double lhs;
  double rhs;
  double margin;
};

struct CheckResult {
  bool pass = true;                         // Ozawa/Branciard/Robertson all hold
  std::vector<RowIssue> offending;          // rows breaking a universal inequality
  std::vector<RowIssue> heisenberg_violations;  // reported, never fatal
};

CheckResult check_sweep(const sweep::SweepResult& result);

// Subcommands. Reports go to `out` (stdout), diagnostics to `diag`
// (stderr); the return value is the process exit code.
int cmd_spectra(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_boundaries(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& diag);

// %.17g round-trip formatting used for all CSV numbers.
std::string format_double(double v);

}  // namespace sedr::cli
