#include "jrcnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "jrcnet/analytic.hpp"
#include "jrcnet/error.hpp"
#include "jrcnet/rng.hpp"

namespace jrc {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

enum StreamId : std::uint32_t { kTargetStream = 0, kCountStream = 1, kPositionStream = 2,
                                kRcsStream = 3 };

int clutter_count(const SimRegion& region, const ClutterModel& clut, TrialKey key) {
  const double mean = clut.density_rho_c * region.area();
  if (mean == 0.0) return 0;
  rng::Stream s(key.seed, key.trial, kCountStream);
  std::poisson_distribution<int> dist(mean);
  return dist(s);
}

CartesianPoint clutter_position(const SimRegion& region, TrialKey key, std::uint32_t i) {
  const auto b = rng::Stream(key.seed, key.trial, kPositionStream).block(i);
  const double E = region.half_extent;
  return {-E + 2.0 * E * rng::uniform(b, 0), -E + 2.0 * E * rng::uniform(b, 1)};
}

double clutter_rcs(const ClutterModel& clut, double scale, TrialKey key, std::uint32_t i) {
  const auto b = rng::Stream(key.seed, key.trial, kRcsStream).block(i);
  return rng::weibull(rng::uniform(b, 0), clut.weibull_alpha, scale);
}

}  // namespace

void SimRegion::validate() const {
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    fail_config("half_extent must be > 0");
  }
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t n) {
  if (n <= 0 || successes < 0 || successes > n) {
    fail_config("wilson_interval: need 0 <= successes <= n and n > 0");
  }
  const double nn = double(n);
  const double p = double(successes) / nn;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      kWilsonZ * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, std::min(p, center - half)), std::min(1.0, std::max(p, center + half))};
}

void check_region(const SystemConfig& cfg, const SimRegion& region, double kappa) {
  region.validate();
  const auto& geo = cfg.geometry;
  const double outer = cassini_radius(geo, kappa, 0.0) + range_resolution(geo, kappa, cfg.tau);
  if (outer > region.half_extent) {
    fail_config("kappa-oval and its range cell (reach " + std::to_string(outer) +
                " m) exceed the simulation region half extent " +
                std::to_string(region.half_extent) + " m");
  }
}

ClutterRealization draw_clutter(const SimRegion& region, const ClutterModel& clut,
                                TrialKey key) {
  ClutterRealization out;
  const int n = clutter_count(region, clut, key);
  const double scale = weibull_scale(clut);
  out.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto u = std::uint32_t(i);
    out.points.push_back({to_polar(clutter_position(region, key, u)),
                          clutter_rcs(clut, scale, key, u)});
  }
  return out;
}

TargetDraw draw_target(const SystemConfig& cfg, const TargetModel& tgt, double kappa,
                       TrialKey key) {
  const auto b = rng::Stream(key.seed, key.trial, kTargetStream).block(0);
  TargetDraw t;
  t.position.theta = kTwoPi * rng::uniform(b, 0);
  t.position.r = cassini_radius(cfg.geometry, kappa, t.position.theta);
  t.sigma_m = rng::exponential(rng::uniform(b, 1), tgt.mean_rcs_m);
  return t;
}

CellFilter::CellFilter(const SystemConfig& cfg, PolarPoint target, double epsilon)
    : half_L_(0.5 * cfg.geometry.baseline_L) {
  const auto ranges = ranges_from_point(cfg.geometry, target);
  const CartesianPoint c = to_cartesian(target);
  ux_ = (c.x + half_L_) / ranges.r_tx;
  uy_ = c.y / ranges.r_tx;
  cos_half_width_ = std::cos(0.5 * beamwidth_from_duty(cfg, epsilon));
  range_sum_ = ranges.r_tx + ranges.r_rx;
  kappa_ = ranges.kappa;
  delta_r_ = range_resolution(cfg.geometry, kappa_, cfg.tau);
}

bool CellFilter::contains(CartesianPoint p) const {
  const double vx = p.x + half_L_;
  const double vy = p.y;
  const double r_tx = std::hypot(vx, vy);
  if (r_tx == 0.0) return false;
  if (ux_ * vx + uy_ * vy < r_tx * cos_half_width_) return false;
  const double r_rx = std::hypot(p.x - half_L_, p.y);
  if (r_rx == 0.0) return false;
  return std::abs(r_tx + r_rx - range_sum_) <= delta_r_;
}

bool CellFilter::contains(PolarPoint p) const { return contains(to_cartesian(p)); }

bool in_cell_test(const SystemConfig& cfg, PolarPoint target, PolarPoint clutter_point,
                  double epsilon) {
  return CellFilter(cfg, target, epsilon).contains(clutter_point);
}

std::vector<ClutterReturn> in_cell_clutter(const SystemConfig& cfg,
                                           const ClutterModel& clut,
                                           const SimRegion& region, PolarPoint target,
                                           double epsilon, TrialKey key) {
  const CellFilter cell(cfg, target, epsilon);
  const int n = clutter_count(region, clut, key);
  const double scale = weibull_scale(clut);
  std::vector<ClutterReturn> out;
  for (int i = 0; i < n; ++i) {
    const auto u = std::uint32_t(i);
    // Same Cartesian -> polar -> Cartesian round trip as draw_clutter, so the
    // membership decision is identical bit for bit.
    const PolarPoint p = to_polar(clutter_position(region, key, u));
    if (!cell.contains(p)) continue;
    out.push_back({ranges_from_point(cfg.geometry, p), clutter_rcs(clut, scale, key, u)});
  }
  return out;
}

TrialOutcome run_trial(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, const SimRegion& region, double kappa,
                       double epsilon, TrialKey key) {
  const TargetDraw target = draw_target(cfg, tgt, kappa, key);
  const auto cell = in_cell_clutter(cfg, clut, region, target.position, epsilon, key);
  const double s = signal_power(cfg, kappa, epsilon, target.sigma_m);
  const double c = clutter_power(cfg, cell, epsilon);
  TrialOutcome out;
  out.scnr_value = scnr(cfg, s, c);
  out.detected = out.scnr_value >= cfg.gamma;
  out.in_cell_clutter_count = int(cell.size());
  out.target_position = target.position;
  out.target_sigma = target.sigma_m;
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t)>& body) {
  const int workers = int(std::min<std::int64_t>(resolve_threads(threads), std::max<std::int64_t>(n, 1)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = n * w / workers;
    const std::int64_t end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

EmpiricalEstimate estimate_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                               const ClutterModel& clut, const SimRegion& region,
                               double kappa, double epsilon, const MonteCarloOptions& opt) {
  if (opt.n_trials < 100) fail_config("estimate_pdc: n_trials must be >= 100");
  check_region(cfg, region, kappa);
  beamwidth_from_duty(cfg, epsilon);
  std::vector<unsigned char> hits(std::size_t(opt.n_trials), 0);
  parallel_for(opt.n_trials, opt.threads, [&](std::int64_t i) {
    hits[std::size_t(i)] =
        run_trial(cfg, tgt, clut, region, kappa, epsilon, {opt.seed, std::uint64_t(i)}).detected;
  });
  EmpiricalEstimate e;
  for (unsigned char h : hits) e.successes += h;
  e.n_trials = opt.n_trials;
  e.seed = opt.seed;
  e.mean = double(e.successes) / double(e.n_trials);
  std::tie(e.ci95_low, e.ci95_high) = wilson_interval(e.successes, e.n_trials);
  return e;
}

EmpiricalEstimate estimate_throughput(const SystemConfig& cfg, const TargetModel& tgt,
                                      const ClutterModel& clut, const SimRegion& region,
                                      double kappa, double epsilon,
                                      const MonteCarloOptions& opt) {
  EmpiricalEstimate e = estimate_pdc(cfg, tgt, clut, region, kappa, epsilon, opt);
  const auto& geo = cfg.geometry;
  const double scale = cassini_circumference(geo, kappa, CircumferenceMode::approximate) *
                       tgt.density_rho_m * range_resolution(geo, kappa, cfg.tau) *
                       (1.0 - epsilon) * cfg.rate_D;
  e.mean *= scale;
  e.ci95_low *= scale;
  e.ci95_high *= scale;
  return e;
}

}  // namespace jrc
