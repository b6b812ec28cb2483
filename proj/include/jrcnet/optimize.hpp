#pragma once

// Closed-form parameter optimizers and their numeric cross-checks.
//
// The clutter factor enters every optimizer through the kernel
// k = E[1 - exp(-gamma sigma_c / mean_rcs_m)], which equals
// gamma mean_rcs_c / (mean_rcs_m + gamma mean_rcs_c) for exponential clutter.

#include "jrcnet/analytic.hpp"

namespace jrc {

struct DutyCycleSolution {
  double epsilon_star = 0.0;      // closed form
  double decay_a = 0.0;           // P_DC = exp(-a / epsilon)
  double amplitude_A0 = 0.0;      // upsilon = A0 exp(-a / epsilon) (1 - epsilon)
  double upsilon_at_star = 0.0;
  double epsilon_numeric = 0.0;   // golden-section argmax of upsilon
  double upsilon_numeric = 0.0;
};

struct BandwidthSolution {
  double closed_form = 0.0;         // Hz
  double coverage_argmax = 0.0;     // argmax of P_DC over BW (kappa, epsilon fixed)
  double throughput_argmax = 0.0;   // argmax of upsilon over BW, which also carries tau in eta
};

struct PriSolution {
  double closed_form = 0.0;  // s
  double numeric_argmax = 0.0;
  double upsilon_at_optimum = 0.0;
};

/// (sqrt(a^2 + 4a) - a) / 2 for a > 0.
double optimal_duty_from_decay(double a);

/// Closed form and numeric argmax of A0 exp(-a / epsilon) (1 - epsilon).
DutyCycleSolution solve_duty_cycle(double a, double amplitude_A0);

/// a = epsilon * (-ln P_DC), which does not depend on epsilon.
double duty_decay_constant(const SystemConfig& cfg, const TargetModel& tgt,
                           const ClutterModel& clut, double kappa);

DutyCycleSolution optimal_duty_cycle(const SystemConfig& cfg, const TargetModel& tgt,
                                     const ClutterModel& clut, double kappa);

/// Minimizer of the coverage exponent over BW, with tau = 1 / BW in both the
/// noise power and the cell size.
BandwidthSolution optimal_bandwidth(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon);

/// Clutter-limited throughput with the cell reaching out to c t_pri / 2.
double throughput_vs_pri(const SystemConfig& cfg, const TargetModel& tgt,
                         const ClutterModel& clut, double epsilon, double t_pri);

/// 4 B0 epsilon / (rho_c c^2 tau k).
double optimal_pri_closed_form(const SystemConfig& cfg, const TargetModel& tgt,
                               const ClutterModel& clut, double epsilon);

PriSolution optimal_pri(const SystemConfig& cfg, const TargetModel& tgt,
                        const ClutterModel& clut, double epsilon);

/// P_DC at the maximum unambiguous bistatic range, in the kappa >> L form.
CoverageReport coverage_at_max_range(const SystemConfig& cfg, const TargetModel& tgt,
                                     const ClutterModel& clut, double epsilon,
                                     double t_pri);

}  // namespace jrc
