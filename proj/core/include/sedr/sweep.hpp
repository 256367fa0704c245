#pragma once

#include <span>
#include <vector>

#include "sedr/edr.hpp"

namespace sedr::sweep {

std::vector<double> linspace(double lo, double hi, std::size_t count);
std::vector<double> logspace(double lo, double hi, std::size_t count);

struct SweepRow {
  double x;
  model::NormalizedSpectra ns;
  edr::InequalityVerdict heisenberg;
  edr::InequalityVerdict ozawa;
  edr::InequalityVerdict branciard;
  edr::InequalityVerdict robertson;
};

struct SweepResult {
  double rho;
  double sigma;
  std::vector<SweepRow> rows;
};

// Normalized spectra and the four inequality verdicts per grid frequency.
SweepResult frequency_sweep(double rho, double sigma,
                            std::span<const double> grid);

// sigma_opt = rho * sqrt(1 + rho^2/16) / (8*sqrt(2)).
double closed_form_sigma_opt(double rho);

struct Optimum {
  double rho;
  double sigma_opt_numeric;
  double sigma_opt_closed_form;
  double min_lhs;    // Branciard LHS at the objective point and sigma_opt_numeric
  double floor_gap;  // min_lhs - sqrt(2)
};

enum class OptimizeObjective {
  at_resonance,       // Branciard LHS at x_eval (default: x = 1)
  frequency_minimum,  // min over x of the Branciard LHS, then min over sigma
};

// Minimizes the Branciard LHS over sigma by golden-section search in
// log(sigma) on the bracket [1e-4, 1]. The objective A/sigma + B*sigma is
// unimodal; a minimum on the bracket edge is reported as an error rather
// than silently widened. sigma_opt_closed_form always refers to the
// resonance formula.
Optimum optimize_sigma(double rho, double x_eval = 1.0,
                       OptimizeObjective objective = OptimizeObjective::at_resonance);

enum class Regime { error_dominated, tradeoff, back_action_dominated };

const char* to_string(Regime regime);

// Labels each sigma by the ratio s_eps_t/s_eta_t at resonance:
// > 10 error-dominated, < 1.5 back-action-dominated, tradeoff in between.
// The thresholds are presentation conventions, not physics.
std::vector<Regime> classify_regimes(double rho, std::span<const double> sigmas);

}  // namespace sedr::sweep
