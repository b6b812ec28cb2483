#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "jrcnet/jrcnet.h"

namespace {

struct Handle {
  jrc_scenario* s = nullptr;
  Handle() { REQUIRE(jrc_scenario_create(&s) == JRC_OK); }
  ~Handle() { jrc_scenario_destroy(s); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("library identity") {
  CHECK(std::string(jrc_version()) == "0.1.0");
  CHECK(std::string(jrc_rng_name()) == "philox4x32-10");
  CHECK(jrc_parameter_count() == 20);
  CHECK(std::string(jrc_parameter_name(0)) == "ptx");
  CHECK(jrc_parameter_name(1000) == nullptr);
}

TEST_CASE("scenario handles") {
  Handle h;
  double v = 0;
  CHECK(jrc_scenario_get_double(h.s, "wavelength", &v) == JRC_OK);
  CHECK(v == 0.005);
  CHECK(jrc_scenario_set(h.s, "gamma", "3dB") == JRC_OK);
  CHECK(jrc_scenario_get_double(h.s, "gamma", &v) == JRC_OK);
  CHECK(v == doctest::Approx(std::pow(10.0, 0.3)));
  CHECK(jrc_scenario_set_double(h.s, "kappa", 40.0) == JRC_OK);

  CHECK(jrc_scenario_set(h.s, "bogus", "1") == JRC_E_CONFIG);
  CHECK(std::string(jrc_last_error()).find("bogus") != std::string::npos);
  CHECK(jrc_scenario_get_double(h.s, "bogus", &v) == JRC_E_CONFIG);
  CHECK(jrc_scenario_get_double(nullptr, "kappa", &v) == JRC_E_INVALID_ARGUMENT);
  CHECK(jrc_scenario_create(nullptr) == JRC_E_INVALID_ARGUMENT);

  size_t needed = 0;
  CHECK(jrc_scenario_format(h.s, nullptr, 0, &needed) == JRC_OK);
  std::vector<char> buf(needed);
  CHECK(jrc_scenario_format(h.s, buf.data(), buf.size(), nullptr) == JRC_OK);
  CHECK(jrc_scenario_format(h.s, buf.data(), 3, nullptr) == JRC_E_INVALID_ARGUMENT);

  jrc_scenario* copy = nullptr;
  CHECK(jrc_scenario_parse(buf.data(), &copy) == JRC_OK);
  CHECK(jrc_scenario_get_double(copy, "kappa", &v) == JRC_OK);
  CHECK(v == 40.0);
  jrc_scenario* clone = nullptr;
  CHECK(jrc_scenario_clone(copy, &clone) == JRC_OK);
  jrc_scenario_destroy(copy);
  jrc_scenario_destroy(clone);
  jrc_scenario_destroy(nullptr);

  jrc_scenario* bad = nullptr;
  CHECK(jrc_scenario_parse("ptx = 1\nptx = 2\n", &bad) == JRC_E_CONFIG);
  CHECK(bad == nullptr);
  CHECK(jrc_scenario_load("no/such/file.cfg", &bad) == JRC_E_CONFIG);

  CHECK(jrc_scenario_set_double(h.s, "epsilon", 0.0) == JRC_OK);
  CHECK(jrc_scenario_validate(h.s) == JRC_E_CONFIG);
}

TEST_CASE("analytic calls") {
  Handle h;
  jrc_scenario_set_double(h.s, "wavelength", 2.5);
  jrc_coverage c{};
  REQUIRE(jrc_coverage_at(h.s, &c) == JRC_OK);
  CHECK(c.p_dc > 0.0);
  CHECK(c.p_dc < 1.0);
  CHECK(c.p_dc == doctest::Approx(c.snr_term * c.scr_term));
  CHECK(c.kappa == 50.0);

  jrc_throughput t{}, te{};
  REQUIRE(jrc_throughput_at(h.s, 0, &t) == JRC_OK);
  REQUIRE(jrc_throughput_at(h.s, 1, &te) == JRC_OK);
  CHECK(t.upsilon == doctest::Approx(t.eta * 0.5));
  CHECK(std::abs(t.eta - te.eta) / te.eta < 0.015);

  jrc_duty_solution d{};
  REQUIRE(jrc_solve_duty(1.0, 1.0, &d) == JRC_OK);
  CHECK(d.epsilon_star == doctest::Approx(0.6180339887));
  CHECK(jrc_solve_duty(0.0, 1.0, &d) == JRC_E_CONFIG);
  REQUIRE(jrc_optimal_duty(h.s, &d) == JRC_OK);
  CHECK(std::abs(d.epsilon_star - d.epsilon_numeric) < 1e-6);

  jrc_bandwidth_solution b{};
  REQUIRE(jrc_optimal_bandwidth(h.s, &b) == JRC_OK);
  CHECK(std::abs(b.coverage_argmax - b.closed_form) / b.closed_form < 1e-6);

  jrc_pri_solution p{};
  REQUIRE(jrc_optimal_pri(h.s, &p) == JRC_OK);
  CHECK(std::abs(p.numeric_argmax - p.closed_form) / p.closed_form < 1e-6);
  double u = 0;
  REQUIRE(jrc_throughput_vs_pri(h.s, p.closed_form, &u) == JRC_OK);
  CHECK(u == doctest::Approx(p.upsilon_at_optimum));

  jrc_coverage m{};
  REQUIRE(jrc_coverage_at_max_range(h.s, &m) == JRC_OK);
  CHECK(m.kappa > 100.0);

  jrc_scenario_set_double(h.s, "baseline_L", 0.0);
  jrc_coverage mono{}, bi{};
  REQUIRE(jrc_monostatic_coverage(h.s, &mono) == JRC_OK);
  REQUIRE(jrc_coverage_at(h.s, &bi) == JRC_OK);
  CHECK(mono.p_dc == doctest::Approx(bi.p_dc).epsilon(1e-14));

  CHECK(jrc_coverage_at(h.s, nullptr) == JRC_E_INVALID_ARGUMENT);
  jrc_scenario_set_double(h.s, "baseline_L", 60.0);
  CHECK(jrc_coverage_at(h.s, &c) == JRC_E_CONFIG);
}

TEST_CASE("simulation and meta-distribution calls") {
  Handle h;
  jrc_scenario_set_double(h.s, "wavelength", 2.5);
  jrc_estimate a{}, b{};
  REQUIRE(jrc_estimate_pdc(h.s, 2000, 5, 1, &a) == JRC_OK);
  REQUIRE(jrc_estimate_pdc(h.s, 2000, 5, 2, &b) == JRC_OK);
  CHECK(a.successes == b.successes);
  CHECK(a.mean == b.mean);
  CHECK(a.seed == 5);
  CHECK(jrc_estimate_pdc(h.s, 10, 5, 1, &a) == JRC_E_CONFIG);
  REQUIRE(jrc_estimate_throughput(h.s, 500, 5, 1, &a) == JRC_OK);
  CHECK(a.mean > 0.0);

  jrc_scenario_set_double(h.s, "tau", 150e-9);
  jrc_scenario_set_double(h.s, "wavelength", 0.26);
  const std::vector<double> z{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> F(z.size()), E(z.size());
  jrc_curve_info info{};
  REQUIRE(jrc_metadist(h.s, JRC_BRANCH_APPROX, z.data(), z.size(), 1, F.data(), &info) == JRC_OK);
  CHECK(info.moment_evaluations > 0);
  for (std::size_t i = 1; i < F.size(); ++i) CHECK(F[i] <= F[i - 1]);
  REQUIRE(jrc_metadist_empirical(h.s, z.data(), z.size(), 2000, 3, 1, E.data()) == JRC_OK);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(F[i] - E[i]) < 0.1);
  CHECK(jrc_reliability_ceiling(z.data(), F.data(), z.size()) <= 0.9);
  CHECK(jrc_reliability_ceiling(nullptr, F.data(), 0) == 0.0);
  CHECK(jrc_metadist(h.s, static_cast<jrc_branch>(7), z.data(), z.size(), 1, F.data(), nullptr) ==
        JRC_E_INVALID_ARGUMENT);
  const double bad_z[] = {0.5, 0.2};
  CHECK(jrc_metadist(h.s, JRC_BRANCH_APPROX, bad_z, 2, 1, F.data(), nullptr) == JRC_E_CONFIG);
}

}  // TEST_SUITE
