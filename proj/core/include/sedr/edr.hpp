#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "sedr/model.hpp"

namespace sedr::edr {

// Margins above -kSatisfiedTol count as satisfied; this separates genuine
// saturation from floating-point noise.
inline constexpr double kSatisfiedTol = 1e-12;

enum class InequalityKind {
  heisenberg,
  ozawa,
  branciard,
  robertson,
  braginsky,
  correlated_bound,
};

const char* to_string(InequalityKind kind);

struct InequalityVerdict {
  InequalityKind kind;
  double lhs;
  double rhs;
  double margin;  // lhs - rhs
  bool satisfied;
};

InequalityVerdict make_verdict(InequalityKind kind, double lhs, double rhs);

// Normalized inequalities. All take the tilde quantities produced by
// sedr::model and compare against |chi_t| (or chi_t^2).
//
// heisenberg:  s_eps_t * s_eta_t              >= chi_t^2     (violable)
// ozawa:       sqrt(se*sh) + sqrt(se) + sqrt(sh) >= |chi_t|
// branciard:   se + sh + 2*sqrt(se*sh*(1 - chi_t^2)) >= chi_t^2
// robertson:   1 >= |chi_t|
InequalityVerdict heisenberg(const model::NormalizedSpectra& ns);
InequalityVerdict ozawa(const model::NormalizedSpectra& ns);
InequalityVerdict branciard(const model::NormalizedSpectra& ns);
InequalityVerdict robertson(const model::NormalizedSpectra& ns);

// Unnormalized spectral forms evaluated on a full SpectralPoint (hbar = 1).
// They agree with the normalized forms in satisfaction and, after scaling
// out sqrt(S_x0*S_p0) (Ozawa) or S_x0*S_p0 (Branciard), in margin.
// Robertson: sqrt(S_x0*S_p0) >= hbar |chi|, saturated for this plant.
InequalityVerdict spectral_ozawa_unnormalized(const model::SpectralPoint& sp);
InequalityVerdict spectral_branciard_unnormalized(const model::SpectralPoint& sp);
InequalityVerdict spectral_robertson_unnormalized(const model::SpectralPoint& sp);

// Braginsky probe-noise constraint
//   S_A S_B - S_BA^2 >= hbar^2 |chi|^2 + 2 hbar Im[chi * S_BA],
// with a real cross-spectrum S_BA. chi is complex; the imaginary-part term
// vanishes for every shipped scenario but stays in the formula.
InequalityVerdict braginsky_check(double s_a, double s_b, double s_ba_real,
                                  std::complex<double> chi);

// Lower bound on s_eps_t + s_eta_t for a Braginsky-saturating probe with
// real cross-correlation: a = S_F0Q0/hbar, b = Re[R_xx]/Im[R_xx].
// Always >= sqrt(2), with equality only at a = b = 0.
double correlated_bound(double a, double b);

struct BoundaryCurve {
  InequalityKind kind;
  std::vector<std::array<double, 2>> points;  // (s_eps_t, s_eta_t)
};

// Saturation locus of one inequality family assuming |chi_t| = 1,
// parameterized by s_eps_t. Grid values where the family has no
// saturation point (s_eps_t > 1 for ozawa/branciard) are skipped.
BoundaryCurve saturation_boundary(InequalityKind kind,
                                  std::span<const double> s_eps_t_grid);

}  // namespace sedr::edr
