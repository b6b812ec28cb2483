#include "jrcnet/optimize.hpp"

#include <cmath>
#include <string>

#include "jrcnet/error.hpp"
#include "jrcnet/search.hpp"

namespace jrc {

namespace {

constexpr double kBandwidthLo = 1e3;   // Hz
constexpr double kBandwidthHi = 1e15;  // Hz
constexpr double kPriLo = 1e-12;       // s
constexpr double kPriHi = 1e3;         // s

// Clutter-cell constant per unit pulse width and per unit 1/(B0 epsilon).
double clutter_strength(const SystemConfig& cfg, const TargetModel& tgt,
                        const ClutterModel& clut) {
  return clut.density_rho_c * clutter_kernel(cfg, tgt, clut);
}

}  // namespace

double optimal_duty_from_decay(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    fail_config("degenerate: throughput maximized at epsilon -> 0 (a = " + std::to_string(a) +
                ")");
  }
  // (sqrt(a^2 + 4a) - a) / 2 without the cancellation for small a.
  return 2.0 * a / (std::sqrt(a * a + 4.0 * a) + a);
}

DutyCycleSolution solve_duty_cycle(double a, double amplitude_A0) {
  DutyCycleSolution s;
  s.decay_a = a;
  s.amplitude_A0 = amplitude_A0;
  s.epsilon_star = optimal_duty_from_decay(a);
  auto upsilon = [&](double e) { return amplitude_A0 * std::exp(-a / e) * (1.0 - e); };
  s.upsilon_at_star = upsilon(s.epsilon_star);
  // Maximize the logarithm; the amplitude only shifts it.
  auto log_upsilon = [&](double e) { return -a / e + std::log1p(-e); };
  const auto best = search::scan_maximize(log_upsilon, 1e-9, 1.0 - 1e-9,
                                          search::Grid::linear, 64, 1e-10);
  s.epsilon_numeric = best.x;
  s.upsilon_numeric = upsilon(best.x);
  return s;
}

double duty_decay_constant(const SystemConfig& cfg, const TargetModel& tgt,
                           const ClutterModel& clut, double kappa) {
  const auto full = coverage_probability(cfg, tgt, clut, kappa, 1.0);
  return -(full.log_snr_term + full.log_scr_term);
}

DutyCycleSolution optimal_duty_cycle(const SystemConfig& cfg, const TargetModel& tgt,
                                     const ClutterModel& clut, double kappa) {
  const double a = duty_decay_constant(cfg, tgt, clut, kappa);
  const auto& geo = cfg.geometry;
  const double A0 = cassini_circumference(geo, kappa, CircumferenceMode::approximate) *
                    tgt.density_rho_m * range_resolution(geo, kappa, cfg.tau) * cfg.rate_D;
  return solve_duty_cycle(a, A0);
}

BandwidthSolution optimal_bandwidth(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon) {
  const auto& geo = cfg.geometry;
  const double L = geo.baseline_L;
  if (!(kappa > L)) fail_config("optimal_bandwidth: requires kappa > L");
  if (!(cfg.gamma > 0.0)) fail_config("optimal_bandwidth: gamma = 0 leaves no exponent");
  const double strength = clutter_strength(cfg, tgt, clut);
  const auto d = DerivedConstants::from(cfg);
  const double k2 = kappa * kappa;

  BandwidthSolution out;
  // exponent(BW) = noise_coef * BW + clutter_coef / BW; the B0 epsilon factors cancel.
  const double noise_coef = cfg.gamma * kBoltzmann * cfg.t_sys * k2 * k2 /
                            (tgt.mean_rcs_m * cfg.ptx * cfg.g0 * d.h0);
  const double clutter_coef =
      strength * kSpeedOfLight * k2 / (kappa + std::sqrt(k2 - L * L));
  out.closed_form = std::sqrt(clutter_coef / noise_coef);

  auto with_bandwidth = [&](double bw) {
    SystemConfig c = cfg;
    c.tau = 1.0 / bw;
    return c;
  };
  auto log_coverage = [&](double bw) {
    const auto r = coverage_probability(with_bandwidth(bw), tgt, clut, kappa, epsilon);
    return r.log_snr_term + r.log_scr_term;
  };
  auto log_throughput = [&](double bw) {
    // eta is proportional to P_DC times the range resolution c tau / (2 cos).
    const auto c = with_bandwidth(bw);
    return log_coverage(bw) + std::log(range_resolution(c.geometry, kappa, c.tau));
  };
  out.coverage_argmax =
      search::scan_maximize(log_coverage, kBandwidthLo, kBandwidthHi, search::Grid::log).x;
  out.throughput_argmax =
      search::scan_maximize(log_throughput, kBandwidthLo, kBandwidthHi, search::Grid::log).x;
  return out;
}

double throughput_vs_pri(const SystemConfig& cfg, const TargetModel& tgt,
                         const ClutterModel& clut, double epsilon, double t_pri) {
  if (!(t_pri >= 0.0)) fail_config("throughput_vs_pri: t_pri must be >= 0");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
  const double b0 = DerivedConstants::from(cfg).b0;
  const double c2tau_t = kSpeedOfLight * kSpeedOfLight * cfg.tau * t_pri;
  const double decay = clutter_strength(cfg, tgt, clut) * c2tau_t / (4.0 * b0 * epsilon);
  return std::exp(-decay) * 0.5 * kPi * c2tau_t * tgt.density_rho_m * (1.0 - epsilon) *
         cfg.rate_D;
}

double optimal_pri_closed_form(const SystemConfig& cfg, const TargetModel& tgt,
                               const ClutterModel& clut, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
  const double strength = clutter_strength(cfg, tgt, clut);
  if (!(strength > 0.0)) fail_config("optimal_pri: no clutter, throughput grows without bound");
  const double b0 = DerivedConstants::from(cfg).b0;
  return 4.0 * b0 * epsilon / (strength * kSpeedOfLight * kSpeedOfLight * cfg.tau);
}

PriSolution optimal_pri(const SystemConfig& cfg, const TargetModel& tgt,
                        const ClutterModel& clut, double epsilon) {
  PriSolution out;
  out.closed_form = optimal_pri_closed_form(cfg, tgt, clut, epsilon);
  auto log_upsilon = [&](double t) {
    return std::log(throughput_vs_pri(cfg, tgt, clut, epsilon, t));
  };
  out.numeric_argmax =
      search::scan_maximize(log_upsilon, kPriLo, kPriHi, search::Grid::log, 64, 1e-10).x;
  out.upsilon_at_optimum = throughput_vs_pri(cfg, tgt, clut, epsilon, out.closed_form);
  return out;
}

CoverageReport coverage_at_max_range(const SystemConfig& cfg, const TargetModel& tgt,
                                     const ClutterModel& clut, double epsilon,
                                     double t_pri) {
  const double kappa_max = max_unambiguous_kappa(cfg.geometry, t_pri);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
  const double b0 = DerivedConstants::from(cfg).b0;
  const double reach = kSpeedOfLight * t_pri;
  const double L = cfg.geometry.baseline_L;
  const double span2 = reach * reach - L * L;  // 4 kappa_max^2
  CoverageReport r;
  r.kappa = kappa_max;
  r.epsilon = epsilon;
  r.log_snr_term = -snr_exponent(cfg, tgt, 1.0, epsilon) * span2 * span2 / 16.0;
  r.log_scr_term = -clutter_strength(cfg, tgt, clut) * kSpeedOfLight * cfg.tau *
                   std::sqrt(span2) / (4.0 * b0 * epsilon);
  r.snr_term = std::exp(r.log_snr_term);
  r.scr_term = std::exp(r.log_scr_term);
  r.p_dc = std::exp(r.log_snr_term + r.log_scr_term);
  return r;
}

}  // namespace jrc
