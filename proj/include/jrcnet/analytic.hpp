#pragma once

// Closed-form detection coverage and throughput of the JRC network.
//
// P_DC factors as exp(-snr_exponent) * exp(-J * k): a noise term and a clutter
// term, where J is the mean clutter count in the resolution cell and k is the
// probability that one unit-path-loss clutter return alone pushes the target
// below threshold, k = E[1 - exp(-gamma sigma_c / mean_rcs_m)].

#include "jrcnet/model.hpp"

namespace jrc {

struct CoverageReport {
  double p_dc = 0.0;
  double snr_term = 0.0;
  double scr_term = 0.0;
  double log_snr_term = 0.0;  // kept separately: the terms underflow long before
  double log_scr_term = 0.0;  // their logarithms lose precision
  double kappa = 0.0;
  double epsilon = 0.0;
};

struct ThroughputReport {
  double upsilon = 0.0;  // units of rate_D
  double eta = 0.0;      // expected number of detected users
  CoverageReport coverage;
};

enum class UsersGeometry {
  approximate,  // oval circumference and range resolution at beta_max
  exact,        // integral of r(theta) * c tau / (2 cos(beta(theta)/2)) over the oval
};

/// gamma N_s kappa^4 / (mean_rcs_m P_tx G0 B0 epsilon H0).
double snr_exponent(const SystemConfig& cfg, const TargetModel& tgt, double kappa,
                    double epsilon);

/// J = rho_c c tau kappa^2 / (B0 epsilon (kappa + sqrt(kappa^2 - L^2))), the mean
/// number of clutter scatterers in the resolution cell.
double clutter_cell_constant(const SystemConfig& cfg, const ClutterModel& clut,
                             double kappa, double epsilon);

/// Mean-calibrated Weibull scale mean_rcs_c / Gamma(1 + 1/alpha).
double weibull_scale(const ClutterModel& clut);

/// Integral of (1 - exp(-c t^(1/alpha))) e^-t over t >= 0, i.e.
/// E[1 - exp(-c sigma / scale)] for sigma ~ Weibull(alpha, scale). Always
/// evaluated by quadrature.
double weibull_kernel_quadrature(double c, double alpha);

/// E[exp(-s sigma_c)] for the mean-calibrated Weibull clutter RCS. Closed form
/// for alpha = 1.
double weibull_laplace(const ClutterModel& clut, double s);

/// k = E[1 - exp(-gamma sigma_c / mean_rcs_m)]; closed form for alpha = 1.
double clutter_kernel(const SystemConfig& cfg, const TargetModel& tgt,
                      const ClutterModel& clut);

/// Clutter factor exp(-J k) with k from quadrature for every alpha.
double weibull_clutter_integral(const SystemConfig& cfg, const TargetModel& tgt,
                                const ClutterModel& clut, double kappa, double epsilon);

CoverageReport coverage_probability(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon);

double mean_detected_users(const SystemConfig& cfg, const TargetModel& tgt,
                           const ClutterModel& clut, double kappa, double epsilon,
                           UsersGeometry geometry = UsersGeometry::approximate);

ThroughputReport network_throughput(const SystemConfig& cfg, const TargetModel& tgt,
                                    const ClutterModel& clut, double kappa,
                                    double epsilon,
                                    UsersGeometry geometry = UsersGeometry::approximate);

/// Co-located transmitter and receiver at range r_m.
CoverageReport monostatic_coverage(const SystemConfig& cfg, const TargetModel& tgt,
                                   const ClutterModel& clut, double r_m, double epsilon);

}  // namespace jrc
