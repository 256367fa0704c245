#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "sedr/cli.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "Path to a JSON run config")
      ->required();
  sub->add_option("--out", opts.out, "Output path (overrides config)");
  sub->add_option("--seed", opts.seed, "RNG seed (overrides config)");
  sub->add_option("--format", opts.format, "csv or json (overrides config)");
}

int dispatch(const std::string& command, const CommonOptions& opts) {
  sedr::cli::RunConfig config;
  try {
    config = sedr::cli::load_config(opts.config_path);
    sedr::cli::apply_overrides(config, opts.seed, opts.out, opts.format);
  } catch (const sedr::cli::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return sedr::cli::kExitConfigError;
  }

  try {
    if (command == "spectra") {
      return sedr::cli::cmd_spectra(config, std::cout, std::cerr);
    }
    if (command == "boundaries") {
      return sedr::cli::cmd_boundaries(config, std::cout, std::cerr);
    }
    if (command == "optimize") {
      return sedr::cli::cmd_optimize(config, std::cout, std::cerr);
    }
    if (command == "check") {
      return sedr::cli::cmd_check(config, std::cout, std::cerr);
    }
    if (command == "oracle") {
      return sedr::cli::cmd_oracle(config, std::cout, std::cerr);
    }
  } catch (const sedr::cli::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return sedr::cli::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sedr::cli::kExitCheckFailed;
  }
  std::cerr << "error: unknown command '" << command << "'\n";
  return sedr::cli::kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Error-disturbance power spectra and inequality checks for a damped "
      "oscillator read out by a coherent optical probe"};
  app.require_subcommand(1);

  const char* names[] = {"spectra", "boundaries", "optimize", "check", "oracle"};
  const char* descriptions[] = {
      "Emit normalized spectra and inequality curves over a frequency grid",
      "Emit the saturation boundaries of the inequality families",
      "Locate the optimal disturbance strength",
      "Evaluate all inequalities over a grid; nonzero exit on violation",
      "Cross-validate analytic spectra against a time-domain simulation"};

  CommonOptions options[5];
  CLI::App* subs[5] = {};
  for (int i = 0; i < 5; ++i) {
    subs[i] = app.add_subcommand(names[i], descriptions[i]);
    add_common(subs[i], options[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sedr::cli::kExitConfigError;
  }

  for (int i = 0; i < 5; ++i) {
    if (subs[i]->parsed()) return dispatch(names[i], options[i]);
  }
  return sedr::cli::kExitConfigError;
}
