#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

namespace sedr::oracle {

// One-sided per-angular-frequency PSD sampled at frequency ratio x > 0.
using Spectrum = std::function<double(double)>;

struct WelchConfig {
  std::size_t segment_length = 1u << 13;  // power of two
  double overlap_fraction = 0.5;          // [0, 1)
  enum class Window { hann, rectangular } window = Window::hann;
};

struct SimulationConfig {
  double dt = 0.05;                 // sample interval, units of 1/omega_m
  std::size_t n_samples = 1u << 18; // per realization, power of two
  std::size_t n_realizations = 32;
  std::uint64_t seed = 0;
  WelchConfig welch{};

  double nyquist() const;  // pi/dt
  void validate() const;
};

struct TimeSeries {
  double dt = 0.0;
  std::vector<double> samples;
};

struct EstimatedSpectrum {
  std::vector<double> grid;       // frequency ratios, strictly increasing
  std::vector<double> psd;        // one-sided per-angular-frequency
  std::vector<double> std_error;  // per-bin standard error
};

// Stationary Gaussian realization with the prescribed one-sided PSD, by
// frequency-domain coloring of independent complex Gaussian coefficients.
// Sample variance approximates (1/2pi) * integral_0^Nyquist S dOmega.
// `stream` selects an independent, reproducible random substream of the
// configured seed; realizations synthesized with distinct streams are
// bit-reproducible regardless of evaluation order.
TimeSeries synthesize(const Spectrum& psd, const SimulationConfig& config,
                      std::uint64_t stream = 0);

// Correlated pair realizing a real cross-PSD via a per-bin 2x2 Cholesky
// factorization. Throws if |S_ab|^2 > S_a*S_b at any bin.
std::pair<TimeSeries, TimeSeries> synthesize_correlated(
    const Spectrum& psd_a, const Spectrum& psd_b, const Spectrum& cross_psd,
    const SimulationConfig& config, std::uint64_t stream = 0);

struct ChainOutput {
  TimeSeries error_signal;        // N = Q0 + R_xx * F0 in the frequency domain
  TimeSeries disturbance_signal;  // D = R_px * F0
};

// Applies the oscillator responses multiplicatively in the frequency domain
// (circular convolution).
ChainOutput chain_response(const TimeSeries& f0, const TimeSeries& q0,
                           double rho);

// Windowed, overlapped, averaged periodogram with window-power
// normalization. DC and Nyquist bins are dropped. Standard error comes from
// the scatter across segments (infinite for a single segment).
EstimatedSpectrum welch_psd(const TimeSeries& series, const WelchConfig& welch);

struct BandStats {
  std::size_t n_bins = 0;
  std::size_t n_z_ok = 0;       // bins with |z| < 3
  double frac_z_ok = 0.0;
  double max_abs_z = 0.0;
  double band_rel_dev = 0.0;    // mean_i |est_i - model_i| / model_i
};

// Per-bin z-scores of an estimate against a model curve over [lo, hi].
BandStats compare_to_model(const EstimatedSpectrum& est, const Spectrum& model,
                           double lo, double hi);

struct CrossValidationReport {
  bool pass = false;
  double rho = 0.0;
  double sigma = 0.0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  std::uint64_t seed = 0;
  bool low_confidence = false;  // fewer than 2 realizations
  BandStats eps;
  BandStats eta;
  EstimatedSpectrum est_eps;
  EstimatedSpectrum est_eta;
};

// Full-chain statistical validation of the analytic error/disturbance
// spectra: synthesize the coherent probe, run the response chain, Welch-
// estimate S_eps and S_eta, and compare per bin. PASS requires, for both
// spectra, >= 99% of in-band bins inside 3 standard errors and a
// band-averaged relative deviation < 5%.
CrossValidationReport cross_validate(double rho, double sigma,
                                     std::pair<double, double> band,
                                     const SimulationConfig& config);

// Raw-series dump: little-endian f64 dt, u64 length, then length f64
// samples.
void dump_series(const std::filesystem::path& path, const TimeSeries& series);
TimeSeries load_series(const std::filesystem::path& path);

}  // namespace sedr::oracle
