#include <doctest.h>

#include <cmath>
#include <random>

#include "sedr/edr.hpp"
#include "sedr/model.hpp"

using namespace sedr;

namespace {

// Bisection solve of the Ozawa saturation condition u*v + u + v = 1 for v
// given u; independent of the closed-form boundary in the library.
double ozawa_boundary_brute(double u) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double v = 0.5 * (lo + hi);
    (u * v + u + v < 1.0 ? lo : hi) = v;
  }
  return 0.5 * (lo + hi);
}

model::SpectralPoint scaled(const model::SpectralPoint& sp, double c) {
  model::SpectralPoint out = sp;
  out.s_q0 *= c;
  out.s_f0 *= c;
  out.s_f0q0 *= c;
  out.s_x0 *= c;
  out.s_p0 *= c;
  out.s_eps *= c;
  out.s_eta *= c;
  out.chi *= c;
  return out;
}

}  // namespace

TEST_CASE("verdict satisfaction threshold") {
  const auto exactly = edr::make_verdict(edr::InequalityKind::ozawa, 1.0, 1.0);
  CHECK(exactly.margin == 0.0);
  CHECK(exactly.satisfied);
  const auto at_tol =
      edr::make_verdict(edr::InequalityKind::ozawa, 1.0, 1.0 + 0.9e-12);
  CHECK(at_tol.satisfied);
  const auto below =
      edr::make_verdict(edr::InequalityKind::ozawa, 1.0, 1.0 + 1.1e-12);
  CHECK_FALSE(below.satisfied);
}

TEST_CASE("heisenberg examples") {
  const auto unit = edr::heisenberg({1.0, 1.0, 1.0});
  CHECK(unit.lhs == 1.0);
  CHECK(unit.rhs == 1.0);
  CHECK(unit.margin == 0.0);
  CHECK(unit.satisfied);

  // rho = 0.3, sigma = sigma_opt/5, x = 1: the HUR is violated.
  const auto hur = edr::heisenberg(
      {3.6163729239391227, 0.070909273018414171, 1.0});
  CHECK(hur.lhs == doctest::Approx(0.256434375).epsilon(1e-12));
  CHECK(hur.lhs < 1.0);
  CHECK_FALSE(hur.satisfied);

  CHECK(edr::heisenberg({4.0, 1.0, 1.0}).satisfied);
}

TEST_CASE("ozawa examples and saturation point") {
  CHECK(edr::ozawa({1.0, 1.0, 1.0}).lhs == 3.0);

  // u = 1/2, v = 1/3 solves uv + u + v = 1; cross-check by bisection.
  const double v = ozawa_boundary_brute(0.5);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const auto sat = edr::ozawa({0.25, v * v, 1.0});
  CHECK(sat.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sat.margin) < 1e-12);

  const auto point = edr::ozawa({1.2094401041666667, 0.26666666666666667, 1.0});
  CHECK(point.lhs == doctest::Approx(2.1840493719211921).epsilon(1e-13));
  CHECK(point.satisfied);
}

TEST_CASE("branciard examples, clamp, and rejection") {
  const auto sat = edr::branciard({0.5, 0.5, 1.0});
  CHECK(sat.lhs == 1.0);
  CHECK(sat.rhs == 1.0);
  CHECK(sat.satisfied);

  const auto point =
      edr::branciard({1.2094401041666667, 0.26666666666666667, 1.0});
  CHECK(point.lhs == doctest::Approx(1.4761067708333333).epsilon(1e-14));
  CHECK(point.satisfied);

  const auto decoupled = edr::branciard({1.0, 1.0, 0.0});
  CHECK(decoupled.lhs == 4.0);
  CHECK(decoupled.rhs == 0.0);

  // Radicand in [-1e-12, 0): clamped to zero.
  const auto clamped = edr::branciard({1.0, 1.0, 1.0 + 2e-13});
  CHECK(clamped.lhs == doctest::Approx(2.0).epsilon(1e-12));
  // Radicand below the window: inconsistent input.
  CHECK_THROWS_AS(edr::branciard({1.0, 1.0, 1.0 + 1e-6}), std::domain_error);
}

TEST_CASE("robertson examples") {
  const auto sat = edr::robertson({1.0, 1.0, 1.0});
  CHECK(sat.margin == 0.0);
  CHECK(sat.satisfied);
  CHECK(edr::robertson({1.0, 1.0, 0.5}).satisfied);
  CHECK_FALSE(edr::robertson({1.0, 1.0, 1.0 + 1e-9}).satisfied);
}

TEST_CASE("unnormalized verdicts track the normalized ones") {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> ux(0.05, 5.0);
  std::uniform_real_distribution<double> ur(0.05, 1.5);
  std::uniform_real_distribution<double> us(-6.0, 0.0);
  for (int i = 0; i < 500; ++i) {
    const model::DimensionlessParams params{ux(rng), ur(rng), std::exp(us(rng))};
    const auto sp = model::error_disturbance_spectra(params);
    const auto ns = model::normalized_point(params);

    const auto oz_u = edr::spectral_ozawa_unnormalized(sp);
    const auto oz_n = edr::ozawa(ns);
    CHECK(oz_u.satisfied == oz_n.satisfied);
    const double oz_scale = std::sqrt(sp.s_x0 * sp.s_p0);
    CHECK(std::abs(oz_u.margin / oz_scale - oz_n.margin) <
          1e-12 * std::max(1.0, std::abs(oz_n.margin)));

    const auto br_u = edr::spectral_branciard_unnormalized(sp);
    const auto br_n = edr::branciard(ns);
    CHECK(br_u.satisfied == br_n.satisfied);
    // The unnormalized radicand S_x0*S_p0 - chi^2 is pure rounding noise at
    // a Robertson-saturated point and the square root amplifies it to
    // ~sqrt(ulp); the normalized path sees exactly zero there.
    const double br_scale = sp.s_x0 * sp.s_p0;
    const double noise_floor =
        1e-7 * (1.0 + std::sqrt(ns.s_eps_t * ns.s_eta_t));
    CHECK(std::abs(br_u.margin / br_scale - br_n.margin) <
          noise_floor * std::max(1.0, std::abs(br_n.margin)));
  }
}

TEST_CASE("unnormalized robertson is saturated for this plant") {
  std::mt19937_64 rng(515);
  std::uniform_real_distribution<double> ux(0.05, 5.0);
  std::uniform_real_distribution<double> ur(0.05, 1.5);
  for (int i = 0; i < 500; ++i) {
    const auto sp =
        model::error_disturbance_spectra({ux(rng), ur(rng), 0.02});
    const auto v = edr::spectral_robertson_unnormalized(sp);
    CHECK(v.satisfied);
    CHECK(std::abs(v.margin) <= 1e-12 * v.rhs);
    CHECK(edr::robertson(model::normalize(sp)).satisfied == v.satisfied);
  }
  // A variance deficit breaks it.
  auto sp = model::error_disturbance_spectra({1.0, 0.3, 0.02});
  sp.s_x0 *= 0.25;
  CHECK_FALSE(edr::spectral_robertson_unnormalized(sp).satisfied);
}

TEST_CASE("unnormalized degenerate cases") {
  model::SpectralPoint zero{};
  const auto oz = edr::spectral_ozawa_unnormalized(zero);
  CHECK(oz.lhs == 0.0);
  CHECK(oz.rhs == 0.0);
  CHECK(oz.margin == 0.0);
  CHECK(oz.satisfied);

  // chi = 0 reduces Branciard to a sum of squares; always satisfied.
  model::SpectralPoint decoupled{};
  decoupled.s_eps = 2.0;
  decoupled.s_eta = 0.5;
  decoupled.s_x0 = 1.5;
  decoupled.s_p0 = 3.0;
  decoupled.chi = 0.0;
  const auto br = edr::spectral_branciard_unnormalized(decoupled);
  CHECK(br.rhs == 0.0);
  CHECK(br.satisfied);

  // A normalized boundary pair rescaled to physical units sits on the
  // saturation locus.
  const auto zp = model::zero_point_spectra(0.8, 0.3);
  model::SpectralPoint sat{};
  sat.s_eps = 0.3 * zp.s_x0;
  sat.s_eta = 0.7 * zp.s_p0;
  sat.s_x0 = zp.s_x0;
  sat.s_p0 = zp.s_p0;
  sat.chi = std::sqrt(zp.s_x0 * zp.s_p0);
  const auto on_boundary = edr::spectral_branciard_unnormalized(sat);
  CHECK(std::abs(on_boundary.margin) <= 1e-12 * sat.chi * sat.chi);
}

TEST_CASE("homogeneity of the unnormalized verdicts") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> ux(0.1, 3.0);
  std::uniform_real_distribution<double> us(-5.0, -1.0);
  for (int i = 0; i < 200; ++i) {
    const auto sp =
        model::error_disturbance_spectra({ux(rng), 0.3, std::exp(us(rng))});
    for (double c : {1e-2, 0.5, 7.0, 100.0}) {
      const auto sc = scaled(sp, c);
      CHECK(edr::spectral_ozawa_unnormalized(sc).satisfied ==
            edr::spectral_ozawa_unnormalized(sp).satisfied);
      CHECK(edr::spectral_branciard_unnormalized(sc).satisfied ==
            edr::spectral_branciard_unnormalized(sp).satisfied);
    }
  }
}

TEST_CASE("braginsky check") {
  // Coherent probe saturates S_Q0 S_F0 = hbar^2 for any sigma.
  std::mt19937_64 rng(121);
  std::uniform_real_distribution<double> us(-9.0, 0.0);
  for (int i = 0; i < 100; ++i) {
    const auto probe = model::probe_spectra(std::exp(us(rng)));
    const auto v = edr::braginsky_check(probe.s_q0, probe.s_f0, probe.s_f0q0,
                                        {-1.0, 0.0});
    CHECK(std::abs(v.lhs - 1.0) < 1e-12);
    CHECK(v.rhs == 1.0);
    CHECK(v.satisfied);
  }

  const auto loose = edr::braginsky_check(2.0, 2.0, 0.0, {-1.0, 0.0});
  CHECK(loose.lhs == 4.0);
  CHECK(loose.rhs == 1.0);
  CHECK(loose.satisfied);

  // Braginsky-saturating correlated override: lhs = 1.25 - 0.25 = 1 = rhs.
  const auto sp = model::error_disturbance_spectra({1.0, 0.3, 0.02}, 0.5);
  const auto v = edr::braginsky_check(sp.s_q0, sp.s_f0, sp.s_f0q0, {-1.0, 0.0});
  CHECK(v.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v.margin) < 1e-12);

  // The imaginary-part term follows the formula even though it vanishes in
  // every shipped scenario.
  const auto im = edr::braginsky_check(2.0, 2.0, 1.0, {0.0, 0.5});
  CHECK(im.rhs == doctest::Approx(0.25 + 2.0 * 0.5).epsilon(1e-15));

  CHECK_THROWS_AS(edr::braginsky_check(-1.0, 2.0, 0.0, {1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("correlated bound") {
  CHECK(edr::correlated_bound(0.0, 0.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(edr::correlated_bound(1.0, 0.0) ==
        doctest::Approx(1.6080380709507176).epsilon(1e-15));
  CHECK(edr::correlated_bound(0.0, 1.0) == edr::correlated_bound(1.0, 0.0));

  const double sqrt2 = std::sqrt(2.0);
  for (double a = -3.0; a <= 3.0; a += 0.3) {
    for (double b = -3.0; b <= 3.0; b += 0.3) {
      const double bound = edr::correlated_bound(a, b);
      CHECK(bound >= sqrt2 * (1.0 - 1e-15));
      if (std::abs(a) > 0.1 || std::abs(b) > 0.1) {
        CHECK(bound > sqrt2 + 1e-3);
      }
    }
  }
}

TEST_CASE("saturation boundaries") {
  const std::vector<double> grid{0.25, 0.5, 1.0, 2.0};

  const auto heis = edr::saturation_boundary(edr::InequalityKind::heisenberg, grid);
  REQUIRE(heis.points.size() == 4);
  CHECK(heis.points[3][1] == 0.5);

  const auto oz = edr::saturation_boundary(edr::InequalityKind::ozawa, grid);
  REQUIRE(oz.points.size() == 3);  // empty beyond s_eps_t = 1
  CHECK(oz.points[0][1] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(oz.points[0][1] ==
        doctest::Approx(std::pow(ozawa_boundary_brute(0.5), 2)).epsilon(1e-12));
  CHECK(oz.points[2][1] == 0.0);

  const auto br = edr::saturation_boundary(edr::InequalityKind::branciard, grid);
  REQUIRE(br.points.size() == 3);
  CHECK(br.points[1][1] == 0.5);
  CHECK(br.points[2][1] == 0.0);

  // Every boundary point re-evaluates its own family to |margin| < 1e-12.
  for (const auto& p : heis.points) {
    CHECK(std::abs(edr::heisenberg({p[0], p[1], 1.0}).margin) < 1e-12);
  }
  for (const auto& p : oz.points) {
    CHECK(std::abs(edr::ozawa({p[0], p[1], 1.0}).margin) < 1e-12);
  }
  for (const auto& p : br.points) {
    CHECK(std::abs(edr::branciard({p[0], p[1], 1.0}).margin) < 1e-12);
  }

  CHECK_THROWS_AS(
      edr::saturation_boundary(edr::InequalityKind::robertson, grid),
      std::invalid_argument);
  const std::vector<double> bad{-1.0};
  CHECK_THROWS_AS(
      edr::saturation_boundary(edr::InequalityKind::heisenberg, bad),
      std::invalid_argument);
}

TEST_CASE("branciard satisfied implies ozawa satisfied at chi_t = 1") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(-3.0 * std::log(10.0), std::log(10.0));
  int branciard_ok = 0;
  for (int i = 0; i < 100000; ++i) {
    const model::NormalizedSpectra ns{std::exp(u(rng)), std::exp(u(rng)), 1.0};
    const bool br = edr::branciard(ns).satisfied;
    if (br) {
      ++branciard_ok;
      CHECK(edr::ozawa(ns).satisfied);
    }
  }
  CHECK(branciard_ok > 1000);  // the hierarchy check actually fired
}

TEST_CASE("model-generated points always satisfy ozawa and branciard") {
  for (double rho : {0.05, 0.3, 1.0}) {
    for (double mult : {0.1, 1.0, 10.0}) {
      const double sigma = mult * 0.0266;
      for (double x = 0.05; x <= 5.0; x += 0.025) {
        const auto ns = model::normalized_point({x, rho, sigma});
        CHECK(edr::ozawa(ns).margin >= -1e-12);
        CHECK(edr::branciard(ns).margin >= -1e-12);
      }
    }
  }
}

TEST_CASE("model sweep respects the correlated-probe bound") {
  // Trimmed version of the full acceptance sweep.
  const double rho = 0.3;
  const double sigma_opt = 0.026590977381905314;
  for (double a = -2.0; a <= 2.0; a += 0.5) {
    for (int ix = 0; ix < 50; ++ix) {
      const double x = 0.2 + (3.0 - 0.2) * ix / 49.0;
      for (int is = 0; is < 7; ++is) {
        const double sigma =
            sigma_opt * std::pow(10.0, -1.0 + 2.0 * is / 6.0);
        const auto sp = model::error_disturbance_spectra({x, rho, sigma}, a);
        const auto ns = model::normalize(sp);
        const auto r = model::response_xx(x, rho);
        const double b = r.real() / r.imag();
        const double bound = edr::correlated_bound(a, b);
        CHECK(ns.s_eps_t + ns.s_eta_t - bound >= -1e-10);
      }
    }
  }
}
