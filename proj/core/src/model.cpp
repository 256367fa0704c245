#include "sedr/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sedr::model {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw std::invalid_argument(std::string("model: ") + name +
                                " must be finite and > 0");
  }
}

constexpr double kBraginskyTol = 1e-12;

}  // namespace

DimensionlessParams::DimensionlessParams(double x_, double rho_, double sigma_)
    : x(x_), rho(rho_), sigma(sigma_) {
  require_positive(x, "frequency ratio x");
  require_positive(rho, "damping ratio rho");
  require_positive(sigma, "disturbance strength sigma");
}

void PhysicalParams::validate() const {
  require_positive(mass, "mass");
  require_positive(omega_m, "omega_m");
  require_positive(kappa_m, "kappa_m");
  require_positive(laser_power, "laser_power");
  require_positive(carrier_omega, "carrier_omega");
  require_positive(hbar, "hbar");
  require_positive(c, "c");
}

DimensionlessParams reduce(const PhysicalParams& p, double omega) {
  p.validate();
  require_positive(omega, "omega");
  const double sigma = p.laser_power * p.carrier_omega /
                       (p.mass * p.c * p.c * p.omega_m * p.omega_m);
  return {omega / p.omega_m, p.kappa_m / p.omega_m, sigma};
}

ComplexResponse response_xx(double x, double rho) {
  require_positive(rho, "damping ratio rho");
  if (!std::isfinite(x)) throw std::invalid_argument("model: x must be finite");
  // Recombined two-pole form; purely real at x = 0.
  return 1.0 / ComplexResponse(1.0 + 0.25 * rho * rho - x * x, -rho * x);
}

ComplexResponse response_xp(double x, double rho) {
  require_positive(rho, "damping ratio rho");
  if (!std::isfinite(x)) throw std::invalid_argument("model: x must be finite");
  const double w = std::sqrt(4.0 + rho * rho);
  const double theta = std::atan(-0.5 * rho);
  const ComplexResponse i(0.0, 1.0);
  const ComplexResponse pole_plus(x + 1.0, 0.5 * rho);
  const ComplexResponse pole_minus(x - 1.0, 0.5 * rho);
  return -i * (w / 4.0) *
         (std::exp(-i * theta) / pole_plus + std::exp(i * theta) / pole_minus);
}

ComplexResponse response_px(double x, double rho) { return -response_xp(x, rho); }

double pole_product(double x, double rho) {
  const double q = 0.25 * rho * rho;
  return ((x + 1.0) * (x + 1.0) + q) * ((x - 1.0) * (x - 1.0) + q);
}

double susceptibility_chi(double x, double rho) {
  require_positive(x, "frequency ratio x");
  require_positive(rho, "damping ratio rho");
  return 2.0 * rho * x * x / pole_product(x, rho);
}

double susceptibility_chi_responses(double x, double rho) {
  require_positive(x, "frequency ratio x");
  const ComplexResponse r_xp = response_xp(x, rho);
  const ComplexResponse r_px = -r_xp;
  // The combination is real up to rounding; the imaginary part cancels
  // identically between the two poles.
  return (-(r_xp - std::conj(r_px))).real();
}

ZeroPointSpectra zero_point_spectra(double x, double rho) {
  require_positive(x, "frequency ratio x");
  require_positive(rho, "damping ratio rho");
  const double s_x0 = 2.0 * rho * x / pole_product(x, rho);
  return {s_x0, x * x * s_x0};
}

ProbeSpectra probe_spectra(double sigma) {
  require_positive(sigma, "disturbance strength sigma");
  return {1.0 / (8.0 * sigma), 8.0 * sigma, 0.0};
}

SpectralPoint error_disturbance_spectra(const DimensionlessParams& params,
                                        std::optional<double> s_f0q0_override) {
  ProbeSpectra probe = probe_spectra(params.sigma);
  if (s_f0q0_override) {
    const double a = *s_f0q0_override;
    if (!std::isfinite(a)) {
      throw std::invalid_argument("model: cross-spectrum override must be finite");
    }
    probe.s_f0q0 = a;
    probe.s_q0 = (1.0 + a * a) / probe.s_f0;
    // The rebalanced probe must still satisfy the Braginsky inequality
    // S_Q0 S_F0 - S_F0Q0^2 >= hbar^2 (saturated here by construction).
    const double residual = probe.s_q0 * probe.s_f0 - a * a - 1.0;
    if (residual < -kBraginskyTol) {
      throw std::invalid_argument(
          "model: probe override violates the Braginsky inequality "
          "S_Q0*S_F0 - S_F0Q0^2 >= hbar^2");
    }
  }

  const ComplexResponse r_xx = response_xx(params.x, params.rho);
  const ComplexResponse r_px = response_px(params.x, params.rho);
  const ZeroPointSpectra zp = zero_point_spectra(params.x, params.rho);

  SpectralPoint sp{};
  sp.x = params.x;
  sp.s_q0 = probe.s_q0;
  sp.s_f0 = probe.s_f0;
  sp.s_f0q0 = probe.s_f0q0;
  sp.s_x0 = zp.s_x0;
  sp.s_p0 = zp.s_p0;
  sp.s_eps = probe.s_q0 + std::norm(r_xx) * probe.s_f0 +
             2.0 * r_xx.real() * probe.s_f0q0;
  sp.s_eta = std::norm(r_px) * probe.s_f0;
  sp.chi = susceptibility_chi(params.x, params.rho);
  return sp;
}

NormalizedSpectra normalized_point(const DimensionlessParams& params) {
  const double d = pole_product(params.x, params.rho);
  const double s_eta_t = 4.0 * params.sigma / (params.rho * params.x);
  const double s_eps_t =
      d / (16.0 * params.sigma * params.rho * params.x) + s_eta_t;
  return {s_eps_t, s_eta_t, 1.0};
}

NormalizedSpectra normalize(const SpectralPoint& sp) {
  return {sp.s_eps / sp.s_x0, sp.s_eta / sp.s_p0,
          sp.chi / std::sqrt(sp.s_x0 * sp.s_p0)};
}

}  // namespace sedr::model
