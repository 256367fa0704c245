#include "sedr/oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "sedr/model.hpp"

namespace sedr::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

static_assert(std::endian::native == std::endian::little,
              "raw-series dump assumes a little-endian host");

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Per-stream seeds are derived with a splitmix64 step so that realization
// substreams are independent of evaluation order.
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xd1342543de82ef95ULL + 1));
}

// Gaussian stream: splitmix64 counter generator feeding Box-Muller.
// Self-contained so fixed-seed reruns are bit-identical across standard
// libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1).
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t next_u64() { return splitmix64(state_ += 0x9e3779b97f4a7c15ULL); }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

double checked_psd(const Spectrum& psd, double x) {
  const double s = psd(x);
  if (!std::isfinite(s) || s < 0.0) {
    throw std::domain_error("oracle: psd sample must be finite and >= 0");
  }
  return s;
}

// The FFTW planner is not thread-safe; plan creation/destruction is
// serialized so the public functions can be called concurrently.
// fftw_execute itself is safe on distinct plans.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

fftw_plan make_c2r_plan(std::size_t n, std::complex<double>* in, double* out) {
  const std::lock_guard<std::mutex> lock(planner_mutex());
  return fftw_plan_dft_c2r_1d(static_cast<int>(n),
                              reinterpret_cast<fftw_complex*>(in), out,
                              FFTW_ESTIMATE);
}

fftw_plan make_r2c_plan(std::size_t n, double* in, std::complex<double>* out) {
  const std::lock_guard<std::mutex> lock(planner_mutex());
  return fftw_plan_dft_r2c_1d(static_cast<int>(n), in,
                              reinterpret_cast<fftw_complex*>(out),
                              FFTW_ESTIMATE);
}

void destroy_plan(fftw_plan plan) {
  const std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// Unnormalized half-complex -> real transform (FFTW c2r). The input is
// destroyed.
std::vector<double> half_spectrum_to_series(std::vector<std::complex<double>>& coeff,
                                            std::size_t n) {
  std::vector<double> out(n);
  fftw_plan plan = make_c2r_plan(n, coeff.data(), out.data());
  fftw_execute(plan);
  destroy_plan(plan);
  return out;
}

}  // namespace

double SimulationConfig::nyquist() const { return kPi / dt; }

void SimulationConfig::validate() const {
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw std::invalid_argument("oracle: dt must be finite and > 0");
  }
  if (n_samples < 2 || !is_power_of_two(n_samples)) {
    throw std::invalid_argument("oracle: n_samples must be a power of two >= 2");
  }
  if (n_realizations == 0) {
    throw std::invalid_argument("oracle: n_realizations must be >= 1");
  }
  if (!is_power_of_two(welch.segment_length)) {
    throw std::invalid_argument(
        "oracle: welch segment_length must be a power of two");
  }
  if (welch.segment_length > n_samples) {
    throw std::invalid_argument(
        "oracle: welch segment_length must not exceed n_samples");
  }
  if (!(welch.overlap_fraction >= 0.0) || !(welch.overlap_fraction < 1.0)) {
    throw std::invalid_argument("oracle: overlap_fraction must be in [0, 1)");
  }
}

TimeSeries synthesize(const Spectrum& psd, const SimulationConfig& config,
                      std::uint64_t stream) {
  config.validate();
  const std::size_t n = config.n_samples;
  const std::size_t half = n / 2;
  const double d_omega = 2.0 * kPi / (static_cast<double>(n) * config.dt);
  const double denom = 2.0 * static_cast<double>(n) * config.dt;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  GaussianStream rng(stream_seed(config.seed, stream));
  std::vector<std::complex<double>> coeff(half + 1);
  coeff[0] = 0.0;  // zero-mean process
  for (std::size_t k = 1; k < half; ++k) {
    const double amp =
        std::sqrt(checked_psd(psd, static_cast<double>(k) * d_omega) / denom);
    const double g1 = rng.next();
    const double g2 = rng.next();
    coeff[k] = amp * inv_sqrt2 * std::complex<double>(g1, g2);
  }
  // Nyquist coefficient is real.
  coeff[half] = std::sqrt(checked_psd(psd, static_cast<double>(half) * d_omega) /
                          denom) *
                rng.next();

  return {config.dt, half_spectrum_to_series(coeff, n)};
}

std::pair<TimeSeries, TimeSeries> synthesize_correlated(
    const Spectrum& psd_a, const Spectrum& psd_b, const Spectrum& cross_psd,
    const SimulationConfig& config, std::uint64_t stream) {
  config.validate();
  const std::size_t n = config.n_samples;
  const std::size_t half = n / 2;
  const double d_omega = 2.0 * kPi / (static_cast<double>(n) * config.dt);
  const double denom = 2.0 * static_cast<double>(n) * config.dt;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  GaussianStream rng(stream_seed(config.seed, stream));
  std::vector<std::complex<double>> ca(half + 1), cb(half + 1);
  ca[0] = cb[0] = 0.0;

  // Cholesky factor of [[S_a, S_ab], [S_ab, S_b]] per bin, shared between
  // the interior (complex) and Nyquist (real) coefficients.
  auto factors = [&](double x) {
    const double s_a = checked_psd(psd_a, x);
    const double s_b = checked_psd(psd_b, x);
    const double s_ab = cross_psd(x);
    if (!std::isfinite(s_ab)) {
      throw std::domain_error("oracle: cross psd sample must be finite");
    }
    if (s_ab * s_ab > s_a * s_b * (1.0 + 1e-12)) {
      throw std::domain_error(
          "oracle: cross psd violates |S_ab|^2 <= S_a*S_b at a bin");
    }
    struct F {
      double alpha, beta, gamma;
    };
    if (s_a <= 0.0) {
      return F{0.0, 0.0, std::sqrt(s_b / denom)};
    }
    const double alpha = std::sqrt(s_a / denom);
    const double beta = s_ab / std::sqrt(s_a * denom);
    const double rest = std::max(s_b - s_ab * s_ab / s_a, 0.0);
    return F{alpha, beta, std::sqrt(rest / denom)};
  };

  for (std::size_t k = 1; k < half; ++k) {
    const auto f = factors(static_cast<double>(k) * d_omega);
    const std::complex<double> z1(rng.next(), rng.next());
    const std::complex<double> z2(rng.next(), rng.next());
    ca[k] = f.alpha * inv_sqrt2 * z1;
    cb[k] = inv_sqrt2 * (f.beta * z1 + f.gamma * z2);
  }
  {
    const auto f = factors(static_cast<double>(half) * d_omega);
    const double g1 = rng.next();
    const double g2 = rng.next();
    ca[half] = f.alpha * g1;
    cb[half] = f.beta * g1 + f.gamma * g2;
  }

  TimeSeries a{config.dt, half_spectrum_to_series(ca, n)};
  TimeSeries b{config.dt, half_spectrum_to_series(cb, n)};
  return {std::move(a), std::move(b)};
}

ChainOutput chain_response(const TimeSeries& f0, const TimeSeries& q0,
                           double rho) {
  if (f0.samples.size() != q0.samples.size() || f0.dt != q0.dt) {
    throw std::invalid_argument(
        "oracle: chain_response inputs must share dt and length");
  }
  const std::size_t n = f0.samples.size();
  if (n == 0) throw std::invalid_argument("oracle: empty series");
  const std::size_t half = n / 2;
  const double d_omega = 2.0 * kPi / (static_cast<double>(n) * f0.dt);

  std::vector<double> in(n);
  std::vector<std::complex<double>> fw(half + 1), qw(half + 1);

  fftw_plan fwd = make_r2c_plan(n, in.data(), fw.data());
  std::copy(f0.samples.begin(), f0.samples.end(), in.begin());
  fftw_execute(fwd);
  fftw_plan fwd_q = make_r2c_plan(n, in.data(), qw.data());
  std::copy(q0.samples.begin(), q0.samples.end(), in.begin());
  fftw_execute(fwd_q);
  destroy_plan(fwd);
  destroy_plan(fwd_q);

  std::vector<std::complex<double>> nw(half + 1), dw(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    const double x = static_cast<double>(k) * d_omega;
    const std::complex<double> r_xx = model::response_xx(x, rho);
    const std::complex<double> r_px = model::response_px(x, rho);
    nw[k] = qw[k] + r_xx * fw[k];
    dw[k] = r_px * fw[k];
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  ChainOutput out;
  out.error_signal.dt = f0.dt;
  out.error_signal.samples = half_spectrum_to_series(nw, n);
  for (double& v : out.error_signal.samples) v *= inv_n;
  out.disturbance_signal.dt = f0.dt;
  out.disturbance_signal.samples = half_spectrum_to_series(dw, n);
  for (double& v : out.disturbance_signal.samples) v *= inv_n;
  return out;
}

EstimatedSpectrum welch_psd(const TimeSeries& series, const WelchConfig& welch) {
  const std::size_t n = series.samples.size();
  const std::size_t seg = welch.segment_length;
  if (!is_power_of_two(seg)) {
    throw std::invalid_argument(
        "oracle: welch segment_length must be a power of two");
  }
  if (seg > n) {
    throw std::invalid_argument("oracle: segment longer than series");
  }
  if (!(welch.overlap_fraction >= 0.0) || !(welch.overlap_fraction < 1.0)) {
    throw std::invalid_argument("oracle: overlap_fraction must be in [0, 1)");
  }

  std::vector<double> window(seg, 1.0);
  if (welch.window == WelchConfig::Window::hann) {
    for (std::size_t i = 0; i < seg; ++i) {
      window[i] =
          0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                static_cast<double>(seg)));
    }
  }
  double wss = 0.0;
  for (const double w : window) wss += w * w;

  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(static_cast<double>(seg) *
                          (1.0 - welch.overlap_fraction))));
  const std::size_t n_segments = 1 + (n - seg) / hop;
  const std::size_t n_bins = seg / 2 - 1;  // drop DC and Nyquist

  std::vector<double> in(seg);
  std::vector<std::complex<double>> spec(seg / 2 + 1);
  fftw_plan plan = make_r2c_plan(seg, in.data(), spec.data());

  // Running mean and M2 per bin over segments (Welford).
  std::vector<double> mean(n_bins, 0.0), m2(n_bins, 0.0);
  const double scale = 2.0 * series.dt / wss;
  for (std::size_t s = 0; s < n_segments; ++s) {
    const double* src = series.samples.data() + s * hop;
    for (std::size_t i = 0; i < seg; ++i) in[i] = src[i] * window[i];
    fftw_execute(plan);
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double p = scale * std::norm(spec[k + 1]);
      const double delta = p - mean[k];
      mean[k] += delta / static_cast<double>(s + 1);
      m2[k] += delta * (p - mean[k]);
    }
  }
  destroy_plan(plan);

  EstimatedSpectrum est;
  est.grid.resize(n_bins);
  est.psd = std::move(mean);
  est.std_error.resize(n_bins);
  const double d_omega = 2.0 * kPi / (static_cast<double>(seg) * series.dt);
  for (std::size_t k = 0; k < n_bins; ++k) {
    est.grid[k] = static_cast<double>(k + 1) * d_omega;
    est.std_error[k] =
        n_segments > 1
            ? std::sqrt(m2[k] / (static_cast<double>(n_segments - 1) *
                                 static_cast<double>(n_segments)))
            : std::numeric_limits<double>::infinity();
  }
  return est;
}

BandStats compare_to_model(const EstimatedSpectrum& est, const Spectrum& model,
                           double lo, double hi) {
  BandStats stats;
  double dev_sum = 0.0;
  for (std::size_t k = 0; k < est.grid.size(); ++k) {
    const double x = est.grid[k];
    if (x < lo || x > hi) continue;
    const double m = model(x);
    const double z = (est.psd[k] - m) / est.std_error[k];
    ++stats.n_bins;
    if (std::abs(z) < 3.0) ++stats.n_z_ok;
    stats.max_abs_z = std::max(stats.max_abs_z, std::abs(z));
    dev_sum += std::abs(est.psd[k] - m) / m;
  }
  if (stats.n_bins > 0) {
    stats.frac_z_ok =
        static_cast<double>(stats.n_z_ok) / static_cast<double>(stats.n_bins);
    stats.band_rel_dev = dev_sum / static_cast<double>(stats.n_bins);
  }
  return stats;
}

CrossValidationReport cross_validate(double rho, double sigma,
                                     std::pair<double, double> band,
                                     const SimulationConfig& config) {
  config.validate();
  const auto [lo, hi] = band;
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("oracle: band must satisfy 0 < lo < hi");
  }
  if (!(config.nyquist() > 1.5 * hi)) {
    throw std::invalid_argument(
        "oracle: Nyquist pi/dt must exceed 1.5x the largest analyzed x");
  }

  const model::ProbeSpectra probe = model::probe_spectra(sigma);
  const Spectrum flat_f0 = [&probe](double) { return probe.s_f0; };
  const Spectrum flat_q0 = [&probe](double) { return probe.s_q0; };

  // 10% edge discard per realization (5% each end): controls wrap-around
  // leakage from the circular response application.
  const std::size_t trim = config.n_samples / 20;

  std::vector<double> grid;
  std::vector<double> sum_eps, sum_eta, sum_sq_eps, sum_sq_eta;
  // Ordered reduction by realization index (reproducibility contract).
  for (std::size_t r = 0; r < config.n_realizations; ++r) {
    const TimeSeries f0 = synthesize(flat_f0, config, 2 * r);
    const TimeSeries q0 = synthesize(flat_q0, config, 2 * r + 1);
    const ChainOutput chain = chain_response(f0, q0, rho);

    auto trimmed = [&](const TimeSeries& ts) {
      TimeSeries t{ts.dt, {}};
      t.samples.assign(ts.samples.begin() + static_cast<std::ptrdiff_t>(trim),
                       ts.samples.end() - static_cast<std::ptrdiff_t>(trim));
      return t;
    };
    const EstimatedSpectrum we = welch_psd(trimmed(chain.error_signal),
                                           config.welch);
    const EstimatedSpectrum wd = welch_psd(trimmed(chain.disturbance_signal),
                                           config.welch);
    if (r == 0) {
      grid = we.grid;
      sum_eps.assign(grid.size(), 0.0);
      sum_eta.assign(grid.size(), 0.0);
      sum_sq_eps.assign(grid.size(), 0.0);
      sum_sq_eta.assign(grid.size(), 0.0);
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
      sum_eps[k] += we.psd[k];
      sum_sq_eps[k] += we.psd[k] * we.psd[k];
      sum_eta[k] += wd.psd[k];
      sum_sq_eta[k] += wd.psd[k] * wd.psd[k];
    }
  }

  const double n_r = static_cast<double>(config.n_realizations);
  auto combine = [&](const std::vector<double>& sum,
                     const std::vector<double>& sum_sq) {
    EstimatedSpectrum est;
    est.grid = grid;
    est.psd.resize(grid.size());
    est.std_error.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      est.psd[k] = sum[k] / n_r;
      if (config.n_realizations > 1) {
        const double var =
            std::max(sum_sq[k] - n_r * est.psd[k] * est.psd[k], 0.0) /
            (n_r - 1.0);
        est.std_error[k] = std::sqrt(var / n_r);
      } else {
        est.std_error[k] = std::numeric_limits<double>::infinity();
      }
    }
    return est;
  };

  CrossValidationReport report;
  report.rho = rho;
  report.sigma = sigma;
  report.band_lo = lo;
  report.band_hi = hi;
  report.seed = config.seed;
  report.low_confidence = config.n_realizations < 2;
  report.est_eps = combine(sum_eps, sum_sq_eps);
  report.est_eta = combine(sum_eta, sum_sq_eta);

  const Spectrum model_eps = [rho, sigma](double x) {
    return model::error_disturbance_spectra({x, rho, sigma}).s_eps;
  };
  const Spectrum model_eta = [rho, sigma](double x) {
    return model::error_disturbance_spectra({x, rho, sigma}).s_eta;
  };
  report.eps = compare_to_model(report.est_eps, model_eps, lo, hi);
  report.eta = compare_to_model(report.est_eta, model_eta, lo, hi);

  auto ok = [](const BandStats& s) {
    return s.n_bins > 0 && s.frac_z_ok >= 0.99 && s.band_rel_dev < 0.05;
  };
  report.pass = ok(report.eps) && ok(report.eta);
  return report;
}

void dump_series(const std::filesystem::path& path, const TimeSeries& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("oracle: cannot open " + path.string() +
                             " for writing");
  }
  const std::uint64_t length = series.samples.size();
  out.write(reinterpret_cast<const char*>(&series.dt), sizeof(double));
  out.write(reinterpret_cast<const char*>(&length), sizeof(std::uint64_t));
  out.write(reinterpret_cast<const char*>(series.samples.data()),
            static_cast<std::streamsize>(length * sizeof(double)));
  if (!out) {
    throw std::runtime_error("oracle: failed writing " + path.string());
  }
}

TimeSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("oracle: cannot open " + path.string());
  }
  TimeSeries series;
  std::uint64_t length = 0;
  in.read(reinterpret_cast<char*>(&series.dt), sizeof(double));
  in.read(reinterpret_cast<char*>(&length), sizeof(std::uint64_t));
  if (!in) {
    throw std::runtime_error("oracle: truncated header in " + path.string());
  }
  series.samples.resize(length);
  in.read(reinterpret_cast<char*>(series.samples.data()),
          static_cast<std::streamsize>(length * sizeof(double)));
  if (!in) {
    throw std::runtime_error("oracle: truncated payload in " + path.string());
  }
  return series;
}

}  // namespace sedr::oracle
