#pragma once

#include <complex>
#include <optional>

namespace sedr::model {

// Everything in this library is evaluated in the internal unit system
// hbar = m = omega_m = 1, so a plant/probe configuration collapses to three
// dimensionless numbers:
//
//   x     = Omega / omega_m        (analysis frequency over mechanical resonance)
//   rho   = kappa_m / omega_m      (mechanical damping rate)
//   sigma = I0*omega0/(m c^2 omega_m^2)   (probe drive / disturbance strength)
//
// All power spectral densities are one-sided and per angular frequency:
// <X^2> = (1/2pi) * integral_0^inf S_X(Omega) dOmega.

struct DimensionlessParams {
  double x;
  double rho;
  double sigma;

  // Throws std::invalid_argument unless x, rho, sigma are all finite and > 0.
  DimensionlessParams(double x, double rho, double sigma);
};

// SI-unit description of the same plant/probe pair.
struct PhysicalParams {
  double mass;           // kg
  double omega_m;        // rad/s
  double kappa_m;        // rad/s
  double laser_power;    // W
  double carrier_omega;  // rad/s
  double hbar;           // J*s
  double c;              // m/s

  void validate() const;  // all fields strictly positive and finite
};

// Exact reduction to the dimensionless parameterization, evaluated at
// angular frequency `omega` (rad/s).
DimensionlessParams reduce(const PhysicalParams& p, double omega);

using ComplexResponse = std::complex<double>;

// Mechanical response functions of the damped oscillator. Defined for any
// real x and satisfy R(-x) = conj(R(x)).
ComplexResponse response_xx(double x, double rho);
ComplexResponse response_xp(double x, double rho);
ComplexResponse response_px(double x, double rho);  // = -response_xp

// d(x, rho) = ((x+1)^2 + rho^2/4) * ((x-1)^2 + rho^2/4).
// |R_xx|^2 = 1/d and |R_px|^2 = x^2/d.
double pole_product(double x, double rho);

// Commutator susceptibility chi(x) = 2*rho*x^2/d(x,rho), x > 0.
double susceptibility_chi(double x, double rho);

// Same quantity assembled from the response functions,
// chi = -(R_xp - conj(R_px)); kept as an independent cross-check route.
double susceptibility_chi_responses(double x, double rho);

struct ZeroPointSpectra {
  double s_x0;  // position zero-point PSD, 2*rho*x/d = 2*Im[R_xx]
  double s_p0;  // momentum zero-point PSD, x^2 * s_x0
};

ZeroPointSpectra zero_point_spectra(double x, double rho);

struct ProbeSpectra {
  double s_q0;    // imprecision PSD, 1/(8 sigma)
  double s_f0;    // back-action force PSD, 8 sigma
  double s_f0q0;  // force-imprecision cross PSD (0 for the coherent probe)
};

ProbeSpectra probe_spectra(double sigma);

// All physical spectra and the susceptibility at one frequency.
struct SpectralPoint {
  double x;
  double s_q0;
  double s_f0;
  double s_f0q0;
  double s_x0;
  double s_p0;
  double s_eps;
  double s_eta;
  double chi;
};

// Error and disturbance spectra of the read-out oscillator,
//   S_eps = S_Q0 + |R_xx|^2 S_F0 + 2 Re[R_xx] S_F0Q0
//   S_eta = |R_px|^2 S_F0.
// When `s_f0q0_override` is given the probe is re-balanced so that the
// Braginsky inequality stays saturated: S_Q0 = (1 + S_F0Q0^2)/S_F0.
SpectralPoint error_disturbance_spectra(
    const DimensionlessParams& params,
    std::optional<double> s_f0q0_override = std::nullopt);

// Spectra normalized by the zero-point variances. For this plant
// chi_t = 1 identically (the Robertson bound is saturated).
struct NormalizedSpectra {
  double s_eps_t;  // S_eps / S_x0
  double s_eta_t;  // S_eta / S_p0
  double chi_t;    // chi / sqrt(S_x0 S_p0)
};

// Closed dimensionless forms:
//   s_eps_t = d/(16 sigma rho x) + 4 sigma/(rho x),  s_eta_t = 4 sigma/(rho x).
NormalizedSpectra normalized_point(const DimensionlessParams& params);

// Ratio route from a full SpectralPoint; agrees with normalized_point to
// floating-point accuracy for the coherent probe and also covers
// correlated-probe points.
NormalizedSpectra normalize(const SpectralPoint& sp);

}  // namespace sedr::model
