#include <doctest.h>

#include <cmath>

#include "jrcnet/error.hpp"
#include "jrcnet/geometry.hpp"
#include "support/oracles.hpp"

using namespace jrc;

namespace {

GeometryConfig geo(double L) {
  GeometryConfig g;
  g.baseline_L = L;
  return g;
}

double oval_residual(double L, double kappa, double theta, double r) {
  const double a = r * r + 0.25 * L * L;
  const double c = std::cos(theta);
  return a * a - r * r * L * L * c * c - std::pow(kappa, 4);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("ranges collapse to the monostatic case at L = 0") {
  for (double theta : {0.0, 1.0, 2.5, 4.0}) {
    const auto r = ranges_from_point(geo(0.0), {10.0, theta});
    CHECK(r.r_tx == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(r.r_rx == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(r.kappa == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(r.beta == doctest::Approx(0.0));
  }
}

TEST_CASE("point on the perpendicular bisector") {
  const auto r = ranges_from_point(geo(5.0), {10.0, kPi / 2});
  const double d = std::sqrt(106.25);
  CHECK(r.r_tx == doctest::Approx(d).epsilon(1e-14));
  CHECK(r.r_rx == doctest::Approx(d).epsilon(1e-14));
  CHECK(r.kappa == doctest::Approx(d).epsilon(1e-14));
  CHECK(r.beta == doctest::Approx(2 * std::atan(2.5 / 10.0)).epsilon(1e-13));
}

TEST_CASE("ranges agree with a Cartesian distance computation") {
  for (double L : {0.0, 5.0, 12.0}) {
    for (double r : {3.0, 20.0, 77.0}) {
      for (double theta : {0.0, 0.7, 1.9, 3.3, 5.8}) {
        double tx, rx;
        oracle::site_distances(L, r, theta, tx, rx);
        const auto got = ranges_from_point(geo(L), {r, theta});
        CHECK(got.r_tx == doctest::Approx(tx).epsilon(1e-12));
        CHECK(got.r_rx == doctest::Approx(rx).epsilon(1e-12));
        CHECK(got.kappa * got.kappa == doctest::Approx(tx * rx).epsilon(1e-12));
        CHECK(got.beta == doctest::Approx(oracle::bistatic_angle(L, r, theta)).epsilon(1e-9));
        CHECK(got.beta >= 0.0);
        CHECK(got.beta <= kPi);
      }
    }
  }
}

TEST_CASE("ranges reject a point on a radar site") {
  CHECK_THROWS_AS(ranges_from_point(geo(5.0), {2.5, kPi}), Error);
  CHECK_THROWS_AS(ranges_from_point(geo(5.0), {2.5, 0.0}), Error);
}

TEST_CASE("polar and Cartesian conversions are inverse") {
  for (double theta : {0.0, 0.4, 3.0, 6.0}) {
    const auto p = to_polar(to_cartesian({7.0, theta}));
    CHECK(p.r == doctest::Approx(7.0));
    CHECK(p.theta == doctest::Approx(theta).epsilon(1e-12));
  }
  CHECK(wrap_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(wrap_angle(kTwoPi + 0.25) == doctest::Approx(0.25));
}

TEST_CASE("maximum bistatic angle") {
  CHECK(max_bistatic_angle(geo(0.0), 50.0) == 0.0);
  CHECK(max_bistatic_angle(geo(5.0), 50.0) == doctest::Approx(std::asin(0.1)).epsilon(1e-15));
  CHECK_THROWS_AS(max_bistatic_angle(geo(5.0), 5.0), Error);

  // Against the true largest angle on the kappa = 10 oval: asin(L/kappa) is an
  // estimate, so only the order of magnitude and the upper-bound direction hold.
  const double L = 5.0, kappa = 10.0;
  const double exact = oracle::maximize_dense(
      [&](double th) {
        return oracle::bistatic_angle(L, oracle::cassini_radius_bisect(L, kappa, th), th);
      },
      0.0, kPi);
  const double approx = max_bistatic_angle(geo(L), kappa);
  CHECK(std::abs(approx - exact) / exact < 0.05);
  // Exact maximum of the oval: sin(beta_max / 2) = L / (2 kappa).
  CHECK(exact == doctest::Approx(2 * std::asin(L / (2 * kappa))).epsilon(1e-6));
}

TEST_CASE("oval radius") {
  for (double theta : {0.0, 1.0, 2.0, 4.5}) {
    CHECK(cassini_radius(geo(0.0), 30.0, theta) == doctest::Approx(30.0).epsilon(1e-15));
  }
  CHECK(cassini_radius(geo(5.0), 20.0, kPi / 2) ==
        doctest::Approx(std::sqrt(400.0 - 6.25)).epsilon(1e-14));
  const double r = cassini_radius(geo(5.0), 20.0, 0.3);
  CHECK(std::abs(oval_residual(5.0, 20.0, 0.3, r)) < 1e-9 * std::pow(20.0, 4));
  CHECK(r == doctest::Approx(oracle::cassini_radius_bisect(5.0, 20.0, 0.3)).epsilon(1e-12));
  CHECK_THROWS_AS(cassini_radius(geo(5.0), 2.5, 0.0), Error);
}

TEST_CASE("oval radius residual and kappa round trip over a grid") {
  for (double L : {0.5, 1.0, 5.0, 10.0}) {
    for (double kappa : {0.51 * L, 0.8 * L, 2 * L, 10 * L, 100 * L}) {
      for (int i = 0; i < 37; ++i) {
        const double theta = kTwoPi * i / 37.0;
        const double r = cassini_radius(geo(L), kappa, theta);
        CHECK(std::abs(oval_residual(L, kappa, theta, r)) < 1e-9 * std::pow(kappa, 4));
        const auto k = ranges_from_point(geo(L), {r, theta}).kappa;
        CHECK(k == doctest::Approx(kappa).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("circumference") {
  const double circle = 2 * kPi * 50.0;
  CHECK(cassini_circumference(geo(0.0), 50.0, CircumferenceMode::approximate) ==
        doctest::Approx(circle).epsilon(1e-15));
  CHECK(cassini_circumference(geo(0.0), 50.0, CircumferenceMode::exact) ==
        doctest::Approx(circle).epsilon(1e-12));

  const double approx = cassini_circumference(geo(5.0), 50.0, CircumferenceMode::approximate);
  CHECK(approx == doctest::Approx(100 * kPi - 75 * kPi / 400).epsilon(1e-15));
  const double exact = cassini_circumference(geo(5.0), 50.0, CircumferenceMode::exact);
  CHECK(std::abs(exact - approx) / approx < 0.01);

  // Independent composite Simpson evaluation of the same integral.
  const double simpson = oracle::simpson(
      [](double th) { return oracle::cassini_radius_bisect(5.0, 50.0, th); }, 0.0, kTwoPi,
      4000);
  CHECK(exact == doctest::Approx(simpson).epsilon(1e-9));

  for (auto mode : {CircumferenceMode::approximate, CircumferenceMode::exact}) {
    CHECK(cassini_circumference(geo(5.0), 500.0, mode) ==
          doctest::Approx(2 * kPi * 500.0).epsilon(1e-4));
  }
  CHECK_THROWS_AS(cassini_circumference(geo(5.0), 4.0, CircumferenceMode::approximate), Error);
  CHECK_THROWS_AS(cassini_circumference(geo(5.0), 2.0, CircumferenceMode::exact), Error);
}

TEST_CASE("circumference quadrature values are stable") {
  // Frozen values of the polar integral; these pin the quadrature, they are
  // not an accuracy claim for the closed-form estimate.
  CHECK(cassini_circumference(geo(1.0), 2.0, CircumferenceMode::exact) ==
        doctest::Approx(oracle::simpson(
                            [](double th) { return oracle::cassini_radius_bisect(1.0, 2.0, th); },
                            0.0, kTwoPi, 4000))
            .epsilon(1e-9));
  CHECK(cassini_circumference(geo(10.0), 20.0, CircumferenceMode::exact) ==
        doctest::Approx(oracle::simpson(
                            [](double th) { return oracle::cassini_radius_bisect(10.0, 20.0, th); },
                            0.0, kTwoPi, 4000))
            .epsilon(1e-9));
}

TEST_CASE("resolution cell area") {
  const double tau = 1e-9, ct = kSpeedOfLight * tau;
  CHECK(resolution_cell_area(geo(0.0), 40.0, tau, 0.1) ==
        doctest::Approx(0.5 * ct * 40.0 * 0.1).epsilon(1e-14));

  // Cell as range resolution times arc: delta_r(beta_max) * kappa^2 dtheta / R with
  // sin(beta_max) = L / kappa reproduces the closed form.
  const double L = 5.0, kappa = 50.0, bw = 0.1;
  const double area = resolution_cell_area(geo(L), kappa, tau, bw);
  const double beta = std::asin(L / kappa);
  const double oracle_area = ct * kappa * kappa * bw / (kappa * (1 + std::cos(beta)));
  CHECK(area == doctest::Approx(oracle_area).epsilon(1e-13));
  CHECK(resolution_cell_area(geo(L), kappa, tau, 2 * bw) == doctest::Approx(2 * area));
  CHECK(resolution_cell_area(geo(L), 60.0, tau, bw) > area);
  CHECK(resolution_cell_area(geo(L), kappa, 2 * tau, bw) > area);
  CHECK_THROWS_AS(resolution_cell_area(geo(L), 5.0, tau, bw), Error);
}

TEST_CASE("range resolution") {
  CHECK(range_resolution(geo(0.0), 30.0, 1e-9) == doctest::Approx(0.14989622900).epsilon(1e-10));
  CHECK(range_resolution(geo(0.0), 30.0, 1e-9) == doctest::Approx(0.14990).epsilon(1e-4));
  const double L = 5.0, kappa = 50.0;
  const double exact_half_angle = std::cos(0.5 * std::asin(L / kappa));
  const double got = range_resolution(geo(L), kappa, 1e-9);
  CHECK(got == doctest::Approx(0.5 * kSpeedOfLight * 1e-9 / std::sqrt(1 - 0.0025)).epsilon(1e-14));
  CHECK(got == doctest::Approx(0.5 * kSpeedOfLight * 1e-9 / exact_half_angle).epsilon(1e-5));
  CHECK_THROWS_AS(range_resolution(geo(L), 2.5, 1e-9), Error);
}

TEST_CASE("maximum unambiguous bistatic range") {
  CHECK(max_unambiguous_kappa(geo(0.0), 1e-6) ==
        doctest::Approx(0.5 * kSpeedOfLight * 1e-6).epsilon(1e-15));
  const double k = max_unambiguous_kappa(geo(5.0), 1e-6);
  CHECK(k == doctest::Approx(0.5 * std::sqrt(299.792458 * 299.792458 - 25)).epsilon(1e-14));
  const double R = kSpeedOfLight * 1e-6;
  CHECK(R * R == doctest::Approx(25 + 4 * k * k).epsilon(1e-14));
  CHECK_THROWS_AS(max_unambiguous_kappa(geo(5.0), 1e-9), Error);
}

TEST_CASE("small baselines approach the monostatic values") {
  const double L = 1e-6;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  CHECK(rel(cassini_radius(geo(L), 40.0, 0.6), cassini_radius(geo(0.0), 40.0, 0.6)) < 1e-4);
  CHECK(rel(cassini_circumference(geo(L), 40.0, CircumferenceMode::exact),
            cassini_circumference(geo(0.0), 40.0, CircumferenceMode::exact)) < 1e-4);
  CHECK(rel(resolution_cell_area(geo(L), 40.0, 1e-9, 0.1),
            resolution_cell_area(geo(0.0), 40.0, 1e-9, 0.1)) < 1e-4);
  CHECK(rel(range_resolution(geo(L), 40.0, 1e-9), range_resolution(geo(0.0), 40.0, 1e-9)) <
        1e-4);
  CHECK(rel(max_unambiguous_kappa(geo(L), 1e-6), max_unambiguous_kappa(geo(0.0), 1e-6)) < 1e-4);
}

TEST_CASE("configuration checks") {
  CHECK_THROWS_AS(geo(-1.0).validate(), Error);
  GeometryConfig g;
  g.search_space_Omega = 7.0;
  CHECK_THROWS_AS(g.validate(), Error);
  CHECK(is_cosite(geo(5.0), 2.6));
  CHECK_FALSE(is_cosite(geo(5.0), 2.5));
}

}  // TEST_SUITE
