#include "sedr/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace sedr::sweep {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw std::invalid_argument("sweep: invalid linspace bounds");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = lo + static_cast<double>(i) * step;
  }
  return grid;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw std::invalid_argument("sweep: logspace bounds must be > 0");
  }
  std::vector<double> grid = linspace(std::log(lo), std::log(hi), count);
  for (double& v : grid) v = std::exp(v);
  return grid;
}

SweepResult frequency_sweep(double rho, double sigma,
                            std::span<const double> grid) {
  SweepResult result{rho, sigma, {}};
  result.rows.reserve(grid.size());
  for (const double x : grid) {
    const model::NormalizedSpectra ns = model::normalized_point({x, rho, sigma});
    result.rows.push_back({x, ns, edr::heisenberg(ns), edr::ozawa(ns),
                           edr::branciard(ns), edr::robertson(ns)});
  }
  return result;
}

double closed_form_sigma_opt(double rho) {
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    throw std::invalid_argument("sweep: rho must be finite and > 0");
  }
  return rho * std::sqrt(1.0 + rho * rho / 16.0) / (8.0 * std::sqrt(2.0));
}

namespace {

// Golden-section minimizer over [lo, hi]; `f` is evaluated on the raw
// coordinate. Returns the bracket midpoint once the width drops below tol.
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double branciard_lhs_at(double x, double rho, double sigma) {
  return edr::branciard(model::normalized_point({x, rho, sigma})).lhs;
}

// Inner minimum over frequency at fixed sigma; the LHS diverges at both
// ends of the x range, so the interior minimum is bracketed.
double frequency_minimum_lhs(double rho, double sigma) {
  const double x_star = golden_min(
      [rho, sigma](double log_x) {
        return branciard_lhs_at(std::exp(log_x), rho, sigma);
      },
      std::log(0.05), std::log(20.0), 1e-10);
  return branciard_lhs_at(std::exp(x_star), rho, sigma);
}

}  // namespace

Optimum optimize_sigma(double rho, double x_eval, OptimizeObjective objective) {
  if (!(rho > 0.0) || !(x_eval > 0.0)) {
    throw std::invalid_argument("sweep: rho and x_eval must be > 0");
  }
  auto lhs_of = [&](double sigma) {
    return objective == OptimizeObjective::at_resonance
               ? branciard_lhs_at(x_eval, rho, sigma)
               : frequency_minimum_lhs(rho, sigma);
  };

  // Search in log(sigma): scale-free for the A/sigma + B*sigma objective.
  // A log-width of 1e-10 keeps the bracket width in sigma below 1e-10
  // everywhere on [1e-4, 1].
  const double log_sigma =
      golden_min([&](double t) { return lhs_of(std::exp(t)); }, std::log(1e-4),
                 std::log(1.0), 1e-10);
  const double sigma_numeric = std::exp(log_sigma);

  // A minimum pinned to the bracket edge means the bracket did not contain
  // it; report instead of widening.
  const double edge_guard = 1e-5;
  if (sigma_numeric < 1e-4 * (1.0 + edge_guard) ||
      sigma_numeric > 1.0 * (1.0 - edge_guard)) {
    throw std::runtime_error(
        "sweep: golden-section bracket [1e-4, 1] does not contain the "
        "minimum of the Branciard LHS");
  }

  Optimum opt{};
  opt.rho = rho;
  opt.sigma_opt_numeric = sigma_numeric;
  opt.sigma_opt_closed_form = closed_form_sigma_opt(rho);
  opt.min_lhs = lhs_of(sigma_numeric);
  opt.floor_gap = opt.min_lhs - std::sqrt(2.0);
  return opt;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::error_dominated: return "error_dominated";
    case Regime::tradeoff: return "tradeoff";
    case Regime::back_action_dominated: return "back_action_dominated";
  }
  return "unknown";
}

std::vector<Regime> classify_regimes(double rho,
                                     std::span<const double> sigmas) {
  std::vector<Regime> labels;
  labels.reserve(sigmas.size());
  for (const double sigma : sigmas) {
    const model::NormalizedSpectra ns =
        model::normalized_point({1.0, rho, sigma});
    const double ratio = ns.s_eps_t / ns.s_eta_t;
    if (ratio > 10.0) {
      labels.push_back(Regime::error_dominated);
    } else if (ratio < 1.5) {
      labels.push_back(Regime::back_action_dominated);
    } else {
      labels.push_back(Regime::tradeoff);
    }
  }
  return labels;
}

}  // namespace sedr::sweep
