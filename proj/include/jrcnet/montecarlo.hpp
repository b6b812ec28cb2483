#pragma once

// Monte Carlo validation of the coverage analysis.
//
// One trial places a single user on the kappa-oval, draws a Poisson clutter
// field over the square region [-E, E]^2, keeps the scatterers that share the
// user's resolution cell, and thresholds the SCNR computed with the exact
// per-point path loss.
//
// Random numbers per trial (seed, trial):
//   stream 0, block 0     target azimuth and Swerling-1 RCS
//   stream 1, sequential  clutter count
//   stream 2, block i     position of scatterer i
//   stream 3, block i     RCS of scatterer i

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "jrcnet/model.hpp"

namespace jrc {

struct SimRegion {
  double half_extent = 100.0;  // m

  void validate() const;
  double area() const { return 4.0 * half_extent * half_extent; }
};

struct TrialKey {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct ClutterPoint {
  PolarPoint position;
  double sigma_c = 0.0;
};

struct ClutterRealization {
  std::vector<ClutterPoint> points;
};

struct TargetDraw {
  PolarPoint position;
  double sigma_m = 0.0;
};

struct TrialOutcome {
  bool detected = false;
  double scnr_value = 0.0;
  int in_cell_clutter_count = 0;
  PolarPoint target_position;
  double target_sigma = 0.0;
};

struct EmpiricalEstimate {
  double mean = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::int64_t n_trials = 0;
  std::int64_t successes = 0;
  std::uint64_t seed = 0;
};

/// Wilson score interval at 95 %.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t n);

/// Throws unless the kappa-oval and its range cell fit inside the region.
void check_region(const SystemConfig& cfg, const SimRegion& region, double kappa);

ClutterRealization draw_clutter(const SimRegion& region, const ClutterModel& clut,
                                TrialKey key);

TargetDraw draw_target(const SystemConfig& cfg, const TargetModel& tgt, double kappa,
                       TrialKey key);

/// Precomputed resolution-cell membership for one target.
class CellFilter {
public:
  CellFilter(const SystemConfig& cfg, PolarPoint target, double epsilon);

  bool contains(PolarPoint p) const;
  bool contains(CartesianPoint p) const;

  double target_kappa() const { return kappa_; }

private:
  double half_L_;
  double ux_, uy_;         // unit vector from the base station to the target
  double cos_half_width_;  // cos(beamwidth / 2)
  double range_sum_;       // R_tx + R_rx of the target
  double delta_r_;
  double kappa_;
};

/// Same BS mainlobe (azimuth within half a beamwidth) and same range cell
/// (range sums within delta_r of the target's).
bool in_cell_test(const SystemConfig& cfg, PolarPoint target, PolarPoint clutter_point,
                  double epsilon);

/// In-cell scatterers of trial `key` for the given target, with RCS drawn only
/// for the scatterers kept. Identical to filtering draw_clutter(region, clut, key).
std::vector<ClutterReturn> in_cell_clutter(const SystemConfig& cfg,
                                           const ClutterModel& clut,
                                           const SimRegion& region, PolarPoint target,
                                           double epsilon, TrialKey key);

TrialOutcome run_trial(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, const SimRegion& region, double kappa,
                       double epsilon, TrialKey key);

struct MonteCarloOptions {
  std::int64_t n_trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 selects hardware concurrency
};

/// Detection rate over trials 0..n-1 of `seed`. The result does not depend on
/// the number of threads.
EmpiricalEstimate estimate_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                               const ClutterModel& clut, const SimRegion& region,
                               double kappa, double epsilon, const MonteCarloOptions& opt);

/// Empirical P_DC scaled by C(kappa) rho_m delta_r (1 - epsilon) D.
EmpiricalEstimate estimate_throughput(const SystemConfig& cfg, const TargetModel& tgt,
                                      const ClutterModel& clut, const SimRegion& region,
                                      double kappa, double epsilon,
                                      const MonteCarloOptions& opt);

/// Runs body(i) for i in [0, n) on up to `threads` workers in contiguous chunks.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& body);

int resolve_threads(int requested);

}  // namespace jrc
