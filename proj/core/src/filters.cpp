#include "sedr/filters.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sedr::filters {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr unsigned kQuadMaxDepth = 14;

double integrate(const std::function<double(double)>& f, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  return gauss_kronrod<double, 15>::integrate(f, lo, hi, kQuadMaxDepth,
                                              kQuadTol, &error);
}

}  // namespace

FilterSpec::FilterSpec(double center_, double width_, FilterShape shape_,
                       double gain_)
    : center(center_), width(width_), shape(shape_), gain(gain_) {
  if (!std::isfinite(center) || !std::isfinite(width) || !std::isfinite(gain) ||
      !(width > 0.0) || gain < 0.0) {
    throw std::invalid_argument("filters: width must be > 0 and gain >= 0");
  }
  if (!(lo() > 0.0)) {
    throw std::invalid_argument(
        "filters: band [center - width/2, center + width/2] must lie in (0, inf)");
  }
}

double FilterSpec::gain_sq(double x) const {
  switch (shape) {
    case FilterShape::rectangular:
      return (x >= lo() && x <= hi()) ? gain * gain : 0.0;
    case FilterShape::triangular: {
      const double u = std::abs(x - center) / (0.5 * width);
      return u < 1.0 ? gain * gain * (1.0 - u) : 0.0;
    }
  }
  return 0.0;
}

double band_weight(const FilterSpec& filter) {
  const double area = filter.gain * filter.gain * filter.width;
  const double shape_factor =
      filter.shape == FilterShape::rectangular ? 1.0 : 0.5;
  return shape_factor * area / (2.0 * std::numbers::pi);
}

double filtered_moment(const FilterSpec& filter, const Spectrum& spectrum) {
  auto integrand = [&](double x) {
    const double s = spectrum(x);
    if (!std::isfinite(s)) {
      throw std::domain_error(
          "filters: non-finite spectrum value inside the filter band");
    }
    return filter.gain_sq(x) * s;
  };
  double value = 0.0;
  if (filter.shape == FilterShape::triangular) {
    // Split at the kink.
    value = integrate(integrand, filter.lo(), filter.center) +
            integrate(integrand, filter.center, filter.hi());
  } else {
    value = integrate(integrand, filter.lo(), filter.hi());
  }
  return value / (2.0 * std::numbers::pi);
}

edr::InequalityVerdict filtered_ozawa(const FilterSpec& filter, double rho,
                                      double sigma) {
  auto point = [rho, sigma](double x) {
    return model::error_disturbance_spectra({x, rho, sigma});
  };
  const double eps_a = std::sqrt(
      filtered_moment(filter, [&](double x) { return point(x).s_eps; }));
  const double eta_b = std::sqrt(
      filtered_moment(filter, [&](double x) { return point(x).s_eta; }));
  const double sigma_a = std::sqrt(filtered_moment(
      filter, [&](double x) { return model::zero_point_spectra(x, rho).s_x0; }));
  const double sigma_b = std::sqrt(filtered_moment(
      filter, [&](double x) { return model::zero_point_spectra(x, rho).s_p0; }));
  const double lhs = eps_a * eta_b + eps_a * sigma_b + sigma_a * eta_b;
  const double rhs = std::abs(filtered_moment(
      filter, [&](double x) { return model::susceptibility_chi(x, rho); }));
  return edr::make_verdict(edr::InequalityKind::ozawa, lhs, rhs);
}

std::vector<NarrowbandRow> narrowband_reduction(double x0, double rho,
                                                double sigma,
                                                std::span<const double> widths) {
  for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
    if (!(widths[i] > widths[i + 1])) {
      throw std::invalid_argument(
          "filters: narrowband widths must be strictly decreasing");
    }
  }

  const model::SpectralPoint sp =
      model::error_disturbance_spectra({x0, rho, sigma});
  const edr::InequalityVerdict spectral = edr::spectral_ozawa_unnormalized(sp);

  std::vector<NarrowbandRow> table;
  table.reserve(widths.size());
  for (const double width : widths) {
    const FilterSpec filter(x0, width);
    const double weight = band_weight(filter);

    auto ratio = [&](const Spectrum& s, double at_x0) {
      return filtered_moment(filter, s) / (weight * at_x0);
    };
    NarrowbandRow row{};
    row.width = width;
    row.ratio_s_eps = ratio(
        [&](double x) {
          return model::error_disturbance_spectra({x, rho, sigma}).s_eps;
        },
        sp.s_eps);
    row.ratio_s_eta = ratio(
        [&](double x) {
          return model::error_disturbance_spectra({x, rho, sigma}).s_eta;
        },
        sp.s_eta);
    row.ratio_s_x0 = ratio(
        [&](double x) { return model::zero_point_spectra(x, rho).s_x0; },
        sp.s_x0);
    row.ratio_s_p0 = ratio(
        [&](double x) { return model::zero_point_spectra(x, rho).s_p0; },
        sp.s_p0);

    const edr::InequalityVerdict filtered = filtered_ozawa(filter, rho, sigma);
    row.filtered_margin_per_weight = filtered.margin / weight;
    row.spectral_margin = spectral.margin;
    row.verdicts_match = filtered.satisfied == spectral.satisfied;
    table.push_back(row);
  }
  return table;
}

}  // namespace sedr::filters
