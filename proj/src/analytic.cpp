#include "jrcnet/analytic.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "jrcnet/error.hpp"
#include "jrcnet/quadrature.hpp"

namespace jrc {

namespace {

constexpr double kKernelTruncation = 60.0;  // e^-60 ~ 9e-27 relative tail

void require_duty(double epsilon) {
  if (epsilon == 0.0) fail_config("no search time (epsilon = 0)");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
}

void require_far_field(const SystemConfig& cfg, double kappa) {
  if (!(kappa > cfg.geometry.baseline_L) || !(kappa > 0.0)) {
    fail_config("kappa must exceed the baseline L (kappa = " + std::to_string(kappa) +
                ", L = " + std::to_string(cfg.geometry.baseline_L) + ")");
  }
}

// Integral over t of g(c t^(1/alpha)) e^-t on [0, 60] with g(x) = 1 - e^-x
// (complement = false) or e^-x (complement = true).
double weibull_expectation(double c, double alpha, bool complement) {
  if (!(c >= 0.0) || !std::isfinite(c)) fail_config("weibull kernel: c must be finite and >= 0");
  if (!(alpha > 0.0)) fail_config("weibull kernel: alpha must be > 0");
  if (c == 0.0) return complement ? 1.0 : 0.0;
  const double inv_alpha = 1.0 / alpha;
  auto integrand = [&](double t) {
    const double x = c * std::pow(t, inv_alpha);
    return (complement ? std::exp(-x) : -std::expm1(-x)) * std::exp(-t);
  };
  // The integrand changes fastest where c t^(1/alpha) ~ 1; split there and at
  // geometric steps past it so no single panel straddles the boundary layer.
  double knee = std::pow(1.0 / c, alpha);
  if (!(knee > 1e-300)) knee = 1e-300;
  double total = 0.0;
  double error = 0.0;
  double lo = 0.0;
  std::vector<double> breaks;
  for (double b = knee; b < 1.0; b *= 4.0) breaks.push_back(b);
  breaks.push_back(1.0);
  breaks.push_back(kKernelTruncation);
  for (double hi : breaks) {
    if (!(hi > lo) || hi > kKernelTruncation) continue;
    const auto res = quad::integrate(integrand, lo, hi, {1e-300, 1e-13, 4000});
    total += res.value;
    error += res.abs_error;
    lo = hi;
  }
  if (!(error <= 1e-10 * std::abs(total) + 1e-280)) {
    fail_numerical("weibull kernel quadrature did not converge (c = " + std::to_string(c) +
                   ", alpha = " + std::to_string(alpha) +
                   ", error = " + std::to_string(error) + ")");
  }
  return total;
}

CoverageReport make_report(double log_snr, double log_scr, double kappa, double epsilon) {
  CoverageReport r;
  r.log_snr_term = log_snr;
  r.log_scr_term = log_scr;
  r.snr_term = std::exp(log_snr);
  r.scr_term = std::exp(log_scr);
  r.p_dc = std::exp(log_snr + log_scr);
  r.kappa = kappa;
  r.epsilon = epsilon;
  return r;
}

}  // namespace

double snr_exponent(const SystemConfig& cfg, const TargetModel& tgt, double kappa,
                    double epsilon) {
  require_duty(epsilon);
  if (!(kappa > 0.0)) fail_config("kappa must be > 0");
  const auto d = DerivedConstants::from(cfg);
  const double k2 = kappa * kappa;
  return cfg.gamma * d.noise_Ns * k2 * k2 /
         (tgt.mean_rcs_m * cfg.ptx * cfg.g0 * d.b0 * epsilon * d.h0);
}

double clutter_cell_constant(const SystemConfig& cfg, const ClutterModel& clut,
                             double kappa, double epsilon) {
  require_far_field(cfg, kappa);
  const double width = beamwidth_from_duty(cfg, epsilon);
  return clut.density_rho_c *
         resolution_cell_area(cfg.geometry, kappa, cfg.tau, width);
}

double weibull_scale(const ClutterModel& clut) {
  return clut.mean_rcs_c / std::tgamma(1.0 + 1.0 / clut.weibull_alpha);
}

double weibull_kernel_quadrature(double c, double alpha) {
  return weibull_expectation(c, alpha, false);
}

double weibull_laplace(const ClutterModel& clut, double s) {
  if (!(s >= 0.0)) fail_config("weibull_laplace: s must be >= 0");
  if (clut.weibull_alpha == 1.0) return 1.0 / (1.0 + s * clut.mean_rcs_c);
  return weibull_expectation(s * weibull_scale(clut), clut.weibull_alpha, true);
}

double clutter_kernel(const SystemConfig& cfg, const TargetModel& tgt,
                      const ClutterModel& clut) {
  const double g = cfg.gamma * clut.mean_rcs_c;
  if (clut.weibull_alpha == 1.0) return g / (tgt.mean_rcs_m + g);
  const double c = cfg.gamma * weibull_scale(clut) / tgt.mean_rcs_m;
  return weibull_kernel_quadrature(c, clut.weibull_alpha);
}

double weibull_clutter_integral(const SystemConfig& cfg, const TargetModel& tgt,
                                const ClutterModel& clut, double kappa, double epsilon) {
  const double J = clutter_cell_constant(cfg, clut, kappa, epsilon);
  const double c = cfg.gamma * weibull_scale(clut) / tgt.mean_rcs_m;
  return std::exp(-J * weibull_kernel_quadrature(c, clut.weibull_alpha));
}

CoverageReport coverage_probability(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon) {
  require_duty(epsilon);
  require_far_field(cfg, kappa);
  const double log_snr = -snr_exponent(cfg, tgt, kappa, epsilon);
  const double J = clutter_cell_constant(cfg, clut, kappa, epsilon);
  const double log_scr = J == 0.0 ? 0.0 : -J * clutter_kernel(cfg, tgt, clut);
  return make_report(log_snr, log_scr, kappa, epsilon);
}

double mean_detected_users(const SystemConfig& cfg, const TargetModel& tgt,
                           const ClutterModel& clut, double kappa, double epsilon,
                           UsersGeometry geometry) {
  const double p = coverage_probability(cfg, tgt, clut, kappa, epsilon).p_dc;
  const auto& geo = cfg.geometry;
  if (geometry == UsersGeometry::approximate) {
    return p * cassini_circumference(geo, kappa, CircumferenceMode::approximate) *
           tgt.density_rho_m * range_resolution(geo, kappa, cfg.tau);
  }
  const double half_c_tau = 0.5 * kSpeedOfLight * cfg.tau;
  auto integrand = [&](double theta) {
    const double r = cassini_radius(geo, kappa, theta);
    const auto ranges = ranges_from_point(geo, {r, theta});
    return r * half_c_tau / std::cos(0.5 * ranges.beta);
  };
  // beta(theta) shares the oval's symmetry about both axes.
  const auto res = quad::integrate(integrand, 0.0, 0.5 * kPi, {0.0, 1e-12, 2000});
  if (!res.converged) {
    fail_numerical("mean_detected_users: exact-geometry quadrature did not converge");
  }
  return p * tgt.density_rho_m * 4.0 * res.value;
}

ThroughputReport network_throughput(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon, UsersGeometry geometry) {
  ThroughputReport out;
  out.coverage = coverage_probability(cfg, tgt, clut, kappa, epsilon);
  out.eta = mean_detected_users(cfg, tgt, clut, kappa, epsilon, geometry);
  out.upsilon = out.eta * (1.0 - epsilon) * cfg.rate_D;
  return out;
}

CoverageReport monostatic_coverage(const SystemConfig& cfg, const TargetModel& tgt,
                                   const ClutterModel& clut, double r_m, double epsilon) {
  require_duty(epsilon);
  if (!(r_m > 0.0)) fail_config("monostatic_coverage: r_m must be > 0");
  const double width = beamwidth_from_duty(cfg, epsilon);  // 1 / (B0 epsilon)
  const double log_snr = -snr_exponent(cfg, tgt, r_m, epsilon);
  const double cell = 0.5 * kSpeedOfLight * cfg.tau * r_m * width;
  const double log_scr =
      clut.density_rho_c == 0.0 ? 0.0 : -clut.density_rho_c * cell * clutter_kernel(cfg, tgt, clut);
  return make_report(log_snr, log_scr, r_m, epsilon);
}

}  // namespace jrc
