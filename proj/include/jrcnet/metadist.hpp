#pragma once

// Meta-distribution of the conditional detection probability P_DC | Phi.
//
// Conditional on the clutter positions (RCS values averaged out), a target is
// detected with probability
//   P = T * prod_i w_i,   T = exp(-snr_exponent),
//   w_i = E[exp(-gamma sigma_c g_i / mean_rcs_m)],  g_i = kappa^4 / (R_tx,i R_rx,i)^2,
// which is mean_rcs_m / (mean_rcs_m + gamma mean_rcs_c g_i) for exponential
// clutter. F(z) = Pr(P >= z) is recovered from the moments M_b = E[P^b] at
// imaginary b by Gil-Pelaez inversion.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jrcnet/montecarlo.hpp"

namespace jrc {

enum class MomentBranch {
  path_loss_approx,     // every in-cell scatterer at the target's path loss
  exact_cell_integral,  // per-point path loss over the polar resolution cell
};

enum class PathLoss { exact, at_target };

struct MomentRequest {
  std::complex<double> order_b;
  double kappa = 0.0;
  double epsilon = 0.0;
  MomentBranch approximation = MomentBranch::path_loss_approx;
};

struct MetaDistCurve {
  std::vector<double> z_grid;
  std::vector<double> ccdf_values;
  double gamma = 0.0;
  // Inversion diagnostics.
  double u_max = 0.0;                 // upper end of the u integral
  bool tapered = false;               // moments had not decayed below 1e-8 by u_max
  double max_adjustment = 0.0;        // largest clamp / monotonicity correction
  std::int64_t moment_evaluations = 0;
};

/// A point mass of the conditional P_DC handled in closed form during inversion.
struct Atom {
  double location = 0.0;  // value of P
  double weight = 0.0;    // probability
};

struct GilPelaezOptions {
  double panel_width = 0.5;    // width of each Gauss-Kronrod panel in u
  double u_cap = 4000.0;       // hard upper limit of the u integral
  double decay_cutoff = 1e-8;  // stop early once |M| drops below this
  std::vector<Atom> atoms;     // subtracted from M and added back exactly
  int threads = 0;
};

/// Per-point clutter factor w for path-loss ratio g.
double clutter_factor(const SystemConfig& cfg, const TargetModel& tgt,
                      const ClutterModel& clut, double g);

/// T * prod_i w_i over the given in-cell scatterers. With PathLoss::at_target
/// every g_i is 1.
double conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, std::span<const ClutterReturn> in_cell,
                       double kappa, double epsilon, PathLoss path_loss = PathLoss::exact);

/// Filters the realization through the target's resolution cell first.
double conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, const ClutterRealization& realization,
                       PolarPoint target, double epsilon,
                       PathLoss path_loss = PathLoss::exact);

/// Discretisation of the exact cell integral.
struct ExactCellOptions {
  int theta_m_intervals = 16;  // trapezoid intervals over the target azimuth in [0, pi]
  int radial_panels = 8;       // Gauss-Kronrod panels across the range cell
  int angular_panels = 1;      // Gauss-Kronrod panels across the beam
};

/// Precomputed exact-branch moment generator for one (kappa, epsilon).
class ExactCellMoments {
public:
  ExactCellMoments(const SystemConfig& cfg, const TargetModel& tgt, const ClutterModel& clut,
                   double kappa, double epsilon, const ExactCellOptions& opt = {});

  std::complex<double> moment(std::complex<double> b) const;

  /// The clutter-free realizations: P = T with probability E[exp(-rho_c |cell|)].
  Atom clutter_free_atom() const;

  /// Spread of ln w over the cell, which sets the oscillation rate in u.
  double log_factor_span() const { return log_w_max_ - log_w_min_; }

private:
  struct Azimuth {
    double weight;      // trapezoid weight / pi
    double cell_mass;   // rho_c * cell area
    std::vector<double> node_weight;  // rho_c * y dy dtheta
    std::vector<double> log_w;
  };
  double log_snr_;
  std::vector<Azimuth> azimuths_;
  double log_w_min_ = 0.0, log_w_max_ = 0.0;
};

/// Number of radial panels that resolve the cell integral up to u_cap.
ExactCellOptions exact_cell_options_for(const SystemConfig& cfg, const TargetModel& tgt,
                                        const ClutterModel& clut, double kappa,
                                        double epsilon, double u_cap);

std::complex<double> moment(const SystemConfig& cfg, const TargetModel& tgt,
                            const ClutterModel& clut, const MomentRequest& req);

/// F(z) = 1/2 M_0 + (1/pi) int_0^inf Im(exp(-j u ln z) M_{ju}) / u du, with
/// atoms removed from M beforehand and added back as exact steps. Past u_cap/2
/// the integrand is tapered by a raised cosine when the moments do not decay.
MetaDistCurve invert_gil_pelaez(const std::function<std::complex<double>(double)>& moment_fn,
                                std::span<const double> z_grid,
                                const GilPelaezOptions& opt = {});

/// Curve for one branch at the scenario's gamma.
MetaDistCurve meta_distribution(const SystemConfig& cfg, const TargetModel& tgt,
                                const ClutterModel& clut, double kappa, double epsilon,
                                MomentBranch branch, std::span<const double> z_grid,
                                int threads = 0);

/// Largest z with F(z) > 0.005; 0 when there is none.
double reliability_ceiling(const MetaDistCurve& curve);

/// Conditional P_DC of trials 0..n-1 of `seed`, with the target and clutter
/// positions drawn exactly as in run_trial.
std::vector<double> sample_conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                                           const ClutterModel& clut,
                                           const SimRegion& region, double kappa,
                                           double epsilon, std::int64_t n_samples,
                                           std::uint64_t seed, int threads = 0,
                                           PathLoss path_loss = PathLoss::exact);

/// Fraction of samples >= z at each z.
MetaDistCurve empirical_ccdf(std::span<const double> samples, std::span<const double> z_grid,
                             double gamma);

}  // namespace jrc
