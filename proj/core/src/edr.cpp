#include "sedr/edr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sedr::edr {

namespace {

// Clamp window for the Branciard radicand at chi_t = 1: the plant saturates
// Robertson identically, so the radicand is analytically zero but
// numerically +-epsilon.
constexpr double kRadicandClamp = 1e-12;

double clamp_radicand(double radicand, double scale) {
  if (radicand >= 0.0) return radicand;
  if (radicand < -kRadicandClamp * scale) {
    throw std::domain_error(
        "edr: branciard radicand below -1e-12 (Robertson violated, "
        "inconsistent input)");
  }
  return 0.0;
}

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string("edr: ") + name +
                                " must be finite and >= 0");
  }
}

}  // namespace

const char* to_string(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::heisenberg: return "heisenberg";
    case InequalityKind::ozawa: return "ozawa";
    case InequalityKind::branciard: return "branciard";
    case InequalityKind::robertson: return "robertson";
    case InequalityKind::braginsky: return "braginsky";
    case InequalityKind::correlated_bound: return "correlated_bound";
  }
  return "unknown";
}

InequalityVerdict make_verdict(InequalityKind kind, double lhs, double rhs) {
  const double margin = lhs - rhs;
  return {kind, lhs, rhs, margin, margin >= -kSatisfiedTol};
}

InequalityVerdict heisenberg(const model::NormalizedSpectra& ns) {
  return make_verdict(InequalityKind::heisenberg, ns.s_eps_t * ns.s_eta_t,
                      ns.chi_t * ns.chi_t);
}

InequalityVerdict ozawa(const model::NormalizedSpectra& ns) {
  const double lhs = std::sqrt(ns.s_eps_t * ns.s_eta_t) +
                     std::sqrt(ns.s_eps_t) + std::sqrt(ns.s_eta_t);
  return make_verdict(InequalityKind::ozawa, lhs, std::abs(ns.chi_t));
}

InequalityVerdict branciard(const model::NormalizedSpectra& ns) {
  const double chi_sq = ns.chi_t * ns.chi_t;
  const double radicand = clamp_radicand(
      ns.s_eps_t * ns.s_eta_t * (1.0 - chi_sq), 1.0);
  const double lhs = ns.s_eps_t + ns.s_eta_t + 2.0 * std::sqrt(radicand);
  return make_verdict(InequalityKind::branciard, lhs, chi_sq);
}

InequalityVerdict robertson(const model::NormalizedSpectra& ns) {
  return make_verdict(InequalityKind::robertson, 1.0, std::abs(ns.chi_t));
}

InequalityVerdict spectral_ozawa_unnormalized(const model::SpectralPoint& sp) {
  const double lhs = std::sqrt(sp.s_eps * sp.s_eta) +
                     std::sqrt(sp.s_eps * sp.s_p0) +
                     std::sqrt(sp.s_x0 * sp.s_eta);
  return make_verdict(InequalityKind::ozawa, lhs, std::abs(sp.chi));
}

InequalityVerdict spectral_branciard_unnormalized(
    const model::SpectralPoint& sp) {
  const double var_product = sp.s_x0 * sp.s_p0;
  const double chi_sq = sp.chi * sp.chi;
  // Same clamp rule as the normalized form, applied in normalized units:
  // the window scales with the radicand's natural magnitude.
  const double scale = std::max(sp.s_eps * sp.s_eta * var_product, 1.0);
  const double radicand =
      clamp_radicand(sp.s_eps * sp.s_eta * (var_product - chi_sq), scale);
  const double lhs =
      sp.s_eps * sp.s_p0 + sp.s_x0 * sp.s_eta + 2.0 * std::sqrt(radicand);
  return make_verdict(InequalityKind::branciard, lhs, chi_sq);
}

InequalityVerdict spectral_robertson_unnormalized(
    const model::SpectralPoint& sp) {
  return make_verdict(InequalityKind::robertson,
                      std::sqrt(sp.s_x0 * sp.s_p0), std::abs(sp.chi));
}

InequalityVerdict braginsky_check(double s_a, double s_b, double s_ba_real,
                                  std::complex<double> chi) {
  require_nonnegative(s_a, "S_A");
  require_nonnegative(s_b, "S_B");
  const double lhs = s_a * s_b - s_ba_real * s_ba_real;
  const double rhs = std::norm(chi) + 2.0 * (chi * s_ba_real).imag();
  return make_verdict(InequalityKind::braginsky, lhs, rhs);
}

double correlated_bound(double a, double b) {
  const double sqrt2 = std::sqrt(2.0);
  const double ab_sq = a * a * b * b;
  return std::sqrt(2.0 + (2.0 - sqrt2) * (a * a + b * b) +
                   (3.0 - 2.0 * sqrt2) * ab_sq);
}

BoundaryCurve saturation_boundary(InequalityKind kind,
                                  std::span<const double> s_eps_t_grid) {
  BoundaryCurve curve{kind, {}};
  curve.points.reserve(s_eps_t_grid.size());
  for (const double se : s_eps_t_grid) {
    if (!std::isfinite(se) || !(se > 0.0)) {
      throw std::invalid_argument("edr: boundary grid values must be > 0");
    }
    switch (kind) {
      case InequalityKind::heisenberg:
        curve.points.push_back({se, 1.0 / se});
        break;
      case InequalityKind::ozawa: {
        const double u = std::sqrt(se);
        if (u <= 1.0) {
          const double v = (1.0 - u) / (1.0 + u);
          curve.points.push_back({se, v * v});
        }
        break;
      }
      case InequalityKind::branciard:
        if (se <= 1.0) curve.points.push_back({se, 1.0 - se});
        break;
      default:
        throw std::invalid_argument(
            std::string("edr: no saturation boundary for kind ") +
            to_string(kind));
    }
  }
  return curve;
}

}  // namespace sedr::edr
