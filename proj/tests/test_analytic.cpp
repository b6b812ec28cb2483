#include <doctest.h>

#include <cmath>
#include <vector>

#include "jrcnet/analytic.hpp"
#include "jrcnet/config_io.hpp"
#include "jrcnet/error.hpp"
#include "support/oracles.hpp"

using namespace jrc;

namespace {

Scenario uhf() {
  Scenario s = reference_scenario();
  s.system.wavelength = 2.5;
  return s;
}

// Coverage written out from the raw parameters, exponential clutter.
double pdc_by_hand(const Scenario& s, double kappa, double eps) {
  const auto& c = s.system;
  const double pi = oracle::kPi, L = c.geometry.baseline_L;
  const double h0 = c.wavelength * c.wavelength / std::pow(4 * pi, 3);
  const double b0 = c.t_total / (c.geometry.search_space_Omega * c.t_beam);
  const double ns = oracle::kBoltzmann * c.t_sys / c.tau;
  const double snr = c.gamma * ns * std::pow(kappa, 4) /
                     (s.target.mean_rcs_m * c.ptx * c.g0 * b0 * eps * h0);
  const double J = s.clutter.density_rho_c * oracle::kC * c.tau * kappa * kappa /
                   (b0 * eps * (kappa + std::sqrt(kappa * kappa - L * L)));
  const double gs = c.gamma * s.clutter.mean_rcs_c;
  return std::exp(-snr - J * gs / (s.target.mean_rcs_m + gs));
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("coverage matches the formula evaluated by hand") {
  for (double lambda : {0.005, 0.26, 2.5}) {
    Scenario s = reference_scenario();
    s.system.wavelength = lambda;
    for (double kappa : {10.0, 30.0, 80.0}) {
      for (double eps : {0.1, 0.5, 1.0}) {
        const auto r = coverage_probability(s.system, s.target, s.clutter, kappa, eps);
        CHECK(r.p_dc == doctest::Approx(pdc_by_hand(s, kappa, eps)).epsilon(1e-12));
        CHECK(r.p_dc == doctest::Approx(r.snr_term * r.scr_term).epsilon(1e-12));
        CHECK(r.p_dc >= 0.0);
        CHECK(r.p_dc <= 1.0);
        CHECK(r.kappa == kappa);
        CHECK(r.epsilon == eps);
      }
    }
  }
}

TEST_CASE("coverage limits") {
  Scenario s = uhf();
  s.system.gamma = 0.0;
  CHECK(coverage_probability(s.system, s.target, s.clutter, 50, 0.5).p_dc == 1.0);

  s = uhf();
  s.clutter.density_rho_c = 0.0;
  s.system.t_sys = 1e-30;
  CHECK(coverage_probability(s.system, s.target, s.clutter, 50, 0.5).p_dc ==
        doctest::Approx(1.0).epsilon(1e-12));

  s = uhf();
  CHECK_THROWS_AS(coverage_probability(s.system, s.target, s.clutter, 50, 0.0), Error);
  CHECK_THROWS_AS(coverage_probability(s.system, s.target, s.clutter, 5.0, 0.5), Error);
  CHECK_THROWS_AS(coverage_probability(s.system, s.target, s.clutter, 4.0, 0.5), Error);
}

TEST_CASE("log of the noise term is linear in kappa^4 and in 1/epsilon") {
  const Scenario s = uhf();
  const double base = snr_exponent(s.system, s.target, 20.0, 0.5);
  CHECK(snr_exponent(s.system, s.target, 40.0, 0.5) == doctest::Approx(16 * base));
  CHECK(snr_exponent(s.system, s.target, 20.0, 0.25) == doctest::Approx(2 * base));
}

TEST_CASE("coverage is monotone in its parameters") {
  const Scenario s = uhf();
  auto p = [](const Scenario& v, double kappa, double eps) {
    return coverage_probability(v.system, v.target, v.clutter, kappa, eps).p_dc;
  };
  const double ref = p(s, 40, 0.5);
  Scenario t = s;
  t.system.gamma = 2.0;
  CHECK(p(t, 40, 0.5) < ref);
  CHECK(p(s, 50, 0.5) < ref);
  CHECK(p(s, 40, 0.7) > ref);
  t = s;
  t.clutter.density_rho_c = 0.02;
  CHECK(p(t, 40, 0.5) < ref);
  t = s;
  t.clutter.mean_rcs_c = 2.0;
  CHECK(p(t, 40, 0.5) < ref);

  // With clutter, more power stops helping; without, it keeps helping.
  t = s;
  t.system.ptx = 1.0;
  const double high = p(t, 40, 0.5);
  t.system.ptx = 10.0;
  CHECK(p(t, 40, 0.5) - high < 0.01);
  t.clutter.density_rho_c = 0.0;
  t.system.ptx = 1e-3;
  const double clean = p(t, 40, 0.5);
  t.system.ptx = 1e-2;
  CHECK(p(t, 40, 0.5) > clean);
}

TEST_CASE("exponential clutter kernel equals its quadrature") {
  for (double gamma : {0.01, 0.5, 1.0, 2.0, 30.0}) {
    for (double ratio : {0.1, 1.0, 7.0}) {
      const double c = gamma * ratio;
      CHECK(weibull_kernel_quadrature(c, 1.0) == doctest::Approx(c / (1 + c)).epsilon(1e-9));
    }
  }
  CHECK(weibull_kernel_quadrature(0.0, 2.0) == 0.0);
  CHECK_THROWS_AS(weibull_kernel_quadrature(-1.0, 1.0), Error);
}

TEST_CASE("clutter integral") {
  Scenario s = uhf();
  const auto& c = s.system;
  const double J = clutter_cell_constant(c, s.clutter, 50.0, 0.5);
  CHECK(weibull_clutter_integral(c, s.target, s.clutter, 50.0, 0.5) ==
        doctest::Approx(std::exp(-J * 0.5)).epsilon(1e-12));

  s.system.gamma = 0.0;
  CHECK(weibull_clutter_integral(s.system, s.target, s.clutter, 50.0, 0.5) == 1.0);

  for (double alpha : {0.7, 2.0}) {
    Scenario w = uhf();
    w.clutter.weibull_alpha = alpha;
    const double scale = weibull_scale(w.clutter);
    CHECK(scale * std::tgamma(1 + 1 / alpha) == doctest::Approx(1.0));
    const auto mc = oracle::weibull_expectation_mc(alpha, scale, 1.0, 200000, 99);
    const double k = clutter_kernel(w.system, w.target, w.clutter);
    CHECK(std::abs(k - mc.mean) < 4 * mc.std_error);
    const double Jw = clutter_cell_constant(w.system, w.clutter, 50.0, 0.5);
    CHECK(weibull_clutter_integral(w.system, w.target, w.clutter, 50.0, 0.5) ==
          doctest::Approx(std::exp(-Jw * k)).epsilon(1e-12));
  }
}

TEST_CASE("Laplace transform of the clutter cross-section") {
  ClutterModel clut;
  for (double s : {0.0, 0.3, 4.0}) {
    CHECK(weibull_laplace(clut, s) == doctest::Approx(1 / (1 + s)).epsilon(1e-15));
  }
  clut.weibull_alpha = 2.0;
  std::mt19937_64 gen(5);
  std::weibull_distribution<double> dist(2.0, weibull_scale(clut));
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) sum += std::exp(-0.8 * dist(gen));
  CHECK(weibull_laplace(clut, 0.8) == doctest::Approx(sum / n).epsilon(3e-3));
}

TEST_CASE("mean detected users and throughput") {
  const Scenario s = uhf();
  const auto& c = s.system;
  TargetModel none = s.target;
  none.density_rho_m = 0.0;
  CHECK(mean_detected_users(c, none, s.clutter, 50, 0.5) == 0.0);

  Scenario mono = s;
  mono.system.geometry.baseline_L = 0.0;
  const double p = coverage_probability(mono.system, s.target, s.clutter, 50, 0.5).p_dc;
  CHECK(mean_detected_users(mono.system, s.target, s.clutter, 50, 0.5) ==
        doctest::Approx(p * oracle::kPi * 50 * s.target.density_rho_m * oracle::kC * c.tau)
            .epsilon(1e-13));
  CHECK(mean_detected_users(mono.system, s.target, s.clutter, 50, 0.5, UsersGeometry::exact) ==
        doctest::Approx(mean_detected_users(mono.system, s.target, s.clutter, 50, 0.5))
            .epsilon(1e-10));

  const auto t = network_throughput(c, s.target, s.clutter, 50, 0.3);
  CHECK(t.upsilon == doctest::Approx(t.eta * 0.7 * c.rate_D).epsilon(1e-14));
  CHECK(t.eta == doctest::Approx(mean_detected_users(c, s.target, s.clutter, 50, 0.3)));
  CHECK(network_throughput(c, s.target, s.clutter, 50, 1.0).upsilon == 0.0);
}

TEST_CASE("mean detected users: closed-form and integrated geometry") {
  const Scenario base = uhf();
  for (double L : {1.0, 5.0, 10.0}) {
    Scenario s = base;
    s.system.geometry.baseline_L = L;
    for (double kappa : {2 * L, 4 * L, 10 * L}) {
      if (kappa > 100) continue;
      const double a = mean_detected_users(s.system, s.target, s.clutter, kappa, 0.5);
      const double e =
          mean_detected_users(s.system, s.target, s.clutter, kappa, 0.5, UsersGeometry::exact);
      CAPTURE(L);
      CAPTURE(kappa);
      CHECK(std::abs(a - e) / e < 0.015);
    }
  }
}

TEST_CASE("monostatic coverage") {
  Scenario s = uhf();
  s.system.geometry.baseline_L = 0.0;
  for (double r : {5.0, 20.0, 70.0}) {
    for (double eps : {0.1, 0.6}) {
      const auto m = monostatic_coverage(s.system, s.target, s.clutter, r, eps);
      const auto b = coverage_probability(s.system, s.target, s.clutter, r, eps);
      CHECK(m.p_dc == doctest::Approx(b.p_dc).epsilon(1e-14));
      CHECK(m.log_snr_term == doctest::Approx(b.log_snr_term).epsilon(1e-14));
      CHECK(m.log_scr_term == doctest::Approx(b.log_scr_term).epsilon(1e-14));
    }
  }
  s.system.gamma = 1e12;
  CHECK(monostatic_coverage(s.system, s.target, s.clutter, 20, 0.5).p_dc < 1e-300);

  s = uhf();
  s.clutter.density_rho_c = 0.0;
  std::vector<double> x, y;
  for (double r : {20.0, 30.0, 45.0, 60.0, 80.0}) {
    x.push_back(std::log(r));
    y.push_back(std::log(-std::log(monostatic_coverage(s.system, s.target, s.clutter, r, 0.5).p_dc)));
  }
  CHECK(oracle::fit_slope(x, y) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_THROWS_AS(monostatic_coverage(s.system, s.target, s.clutter, 0.0, 0.5), Error);
}

}  // TEST_SUITE
