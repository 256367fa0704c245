#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sedr/edr.hpp"

namespace sedr::filters {

// A nonnegative spectrum sampled by frequency ratio x. Callbacks must be
// safe to invoke concurrently (no internal mutation).
using Spectrum = std::function<double(double)>;

enum class FilterShape { rectangular, triangular };

// Band-pass filter described by its squared magnitude |Gamma(x)|^2; only
// the squared magnitude enters any formula in scope, so no complex
// frequency response is stored.
struct FilterSpec {
  double center;
  double width;
  FilterShape shape;
  double gain;

  FilterSpec(double center, double width,
             FilterShape shape = FilterShape::rectangular, double gain = 1.0);

  double lo() const { return center - 0.5 * width; }
  double hi() const { return center + 0.5 * width; }

  // |Gamma(x)|^2: gain^2 on the band (rectangular) or a triangular profile
  // peaking at the center.
  double gain_sq(double x) const;
};

// (1/2pi) * integral of |Gamma|^2 over the band, in closed form. This is
// the factor shared by both sides of the filtered inequality in the
// narrowband limit.
double band_weight(const FilterSpec& filter);

// (1/2pi) * integral_0^inf |Gamma(x)|^2 S(x) dx by adaptive quadrature
// (Gauss-Kronrod, tolerance 1e-10). Throws std::domain_error on non-finite
// spectrum values inside the band.
double filtered_moment(const FilterSpec& filter, const Spectrum& spectrum);

// Filtered Ozawa inequality for the damped oscillator read out at
// disturbance strength sigma:
//   eps_A*eta_B + eps_A*sigma_B + sigma_A*eta_B >= hbar |(1/2pi) int |Gamma|^2 chi dx|
// with each left-hand factor the square root of the corresponding filtered
// moment. Holds for any filter.
edr::InequalityVerdict filtered_ozawa(const FilterSpec& filter, double rho,
                                      double sigma);

struct NarrowbandRow {
  double width;
  // Filtered moment over (band_weight * spectral value at x0), one ratio
  // per spectrum entering the Ozawa inequality. All -> 1 as width -> 0.
  double ratio_s_eps;
  double ratio_s_eta;
  double ratio_s_x0;
  double ratio_s_p0;
  double filtered_margin_per_weight;  // filtered (lhs - rhs) / band_weight
  double spectral_margin;             // unnormalized spectral Ozawa margin at x0
  bool verdicts_match;
};

// Convergence table of the narrowband reduction at center x0 for a set of
// strictly decreasing rectangular filter widths.
std::vector<NarrowbandRow> narrowband_reduction(double x0, double rho,
                                                double sigma,
                                                std::span<const double> widths);

}  // namespace sedr::filters
