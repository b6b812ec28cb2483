#include "jrcnet/metadist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jrcnet/analytic.hpp"
#include "jrcnet/error.hpp"
#include "jrcnet/quadrature.hpp"

namespace jrc {

namespace {

using cplx = std::complex<double>;

constexpr double kCeilingBand = 0.005;

double log_clutter_factor(const SystemConfig& cfg, const TargetModel& tgt,
                          const ClutterModel& clut, double g) {
  const double s = cfg.gamma * g / tgt.mean_rcs_m;
  if (clut.weibull_alpha == 1.0) return -std::log1p(s * clut.mean_rcs_c);
  return std::log(weibull_laplace(clut, s));
}

void require_z_grid(std::span<const double> z_grid) {
  if (z_grid.empty()) fail_config("z grid must not be empty");
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    if (!(z_grid[i] > 0.0 && z_grid[i] < 1.0)) fail_config("z grid values must lie in (0, 1)");
    if (i > 0 && !(z_grid[i] > z_grid[i - 1])) {
      fail_config("z grid must be strictly increasing");
    }
  }
}

double taper(double u, double u_max) {
  const double start = 0.5 * u_max;
  if (u <= start) return 1.0;
  return 0.5 * (1.0 + std::cos(kPi * (u - start) / (u_max - start)));
}

}  // namespace

double clutter_factor(const SystemConfig& cfg, const TargetModel& tgt,
                      const ClutterModel& clut, double g) {
  return std::exp(log_clutter_factor(cfg, tgt, clut, g));
}

double conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, std::span<const ClutterReturn> in_cell,
                       double kappa, double epsilon, PathLoss path_loss) {
  double log_p = -snr_exponent(cfg, tgt, kappa, epsilon);
  const double k2 = kappa * kappa;
  for (const auto& c : in_cell) {
    double g = 1.0;
    if (path_loss == PathLoss::exact) {
      const double ratio = k2 / (c.ranges.r_tx * c.ranges.r_rx);
      g = ratio * ratio;
    }
    log_p += log_clutter_factor(cfg, tgt, clut, g);
  }
  return std::exp(log_p);
}

double conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                       const ClutterModel& clut, const ClutterRealization& realization,
                       PolarPoint target, double epsilon, PathLoss path_loss) {
  const CellFilter cell(cfg, target, epsilon);
  std::vector<ClutterReturn> kept;
  for (const auto& p : realization.points) {
    if (cell.contains(p.position)) {
      kept.push_back({ranges_from_point(cfg.geometry, p.position), p.sigma_c});
    }
  }
  return conditional_pdc(cfg, tgt, clut, kept, cell.target_kappa(), epsilon, path_loss);
}

ExactCellMoments::ExactCellMoments(const SystemConfig& cfg, const TargetModel& tgt,
                                   const ClutterModel& clut, double kappa, double epsilon,
                                   const ExactCellOptions& opt) {
  if (opt.theta_m_intervals < 1 || opt.radial_panels < 1 || opt.angular_panels < 1) {
    fail_config("exact cell integral needs at least one interval per direction");
  }
  const auto& geo = cfg.geometry;
  const double L = geo.baseline_L;
  const double half_L = 0.5 * L;
  log_snr_ = -snr_exponent(cfg, tgt, kappa, epsilon);
  const double width = beamwidth_from_duty(cfg, epsilon);
  const double delta_r = range_resolution(geo, kappa, cfg.tau);
  const double k4 = kappa * kappa * kappa * kappa;
  const double rho = clut.density_rho_c;
  log_w_min_ = std::numeric_limits<double>::infinity();
  log_w_max_ = -std::numeric_limits<double>::infinity();

  const int n = opt.theta_m_intervals;
  azimuths_.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    // Reflection in the baseline maps theta_m to -theta_m, so [0, pi] suffices.
    const double theta_m = kPi * j / n;
    const CartesianPoint t = to_cartesian({cassini_radius(geo, kappa, theta_m), theta_m});
    const double r_tx = std::hypot(t.x + half_L, t.y);
    const double phi = std::atan2(t.y, t.x + half_L);
    const double y_lo = std::max(0.0, r_tx - 0.5 * delta_r);
    const double y_hi = r_tx + 0.5 * delta_r;

    Azimuth& az = azimuths_[j];
    az.weight = (j == 0 || j == n) ? 0.5 / n : 1.0 / n;
    az.cell_mass = rho * width * 0.5 * (y_hi * y_hi - y_lo * y_lo);
    for (int a = 0; a < opt.angular_panels; ++a) {
      const double t0 = phi - 0.5 * width + width * a / opt.angular_panels;
      const double t1 = phi - 0.5 * width + width * (a + 1) / opt.angular_panels;
      const auto ang = quad::panel_rule(t0, t1);
      for (int ia = 0; ia < 15; ++ia) {
        const double cos_t = std::cos(ang.nodes[ia]);
        for (int r = 0; r < opt.radial_panels; ++r) {
          const double r0 = y_lo + (y_hi - y_lo) * r / opt.radial_panels;
          const double r1 = y_lo + (y_hi - y_lo) * (r + 1) / opt.radial_panels;
          const auto rad = quad::panel_rule(r0, r1);
          for (int ir = 0; ir < 15; ++ir) {
            const double y = rad.nodes[ir];
            const double yr2 = y * y + L * L - 2.0 * y * L * cos_t;
            if (!(y > 0.0) || !(yr2 > 0.0)) continue;
            const double g = k4 / (y * y * yr2);
            const double lw = log_clutter_factor(cfg, tgt, clut, g);
            az.node_weight.push_back(rho * ang.kronrod[ia] * rad.kronrod[ir] * y);
            az.log_w.push_back(lw);
            log_w_min_ = std::min(log_w_min_, lw);
            log_w_max_ = std::max(log_w_max_, lw);
          }
        }
      }
    }
  }
}

cplx ExactCellMoments::moment(cplx b) const {
  cplx total = 0.0;
  for (const auto& az : azimuths_) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < az.log_w.size(); ++i) {
      s += az.node_weight[i] * std::exp(b * az.log_w[i]);
    }
    total += az.weight * std::exp(s - az.cell_mass);
  }
  return std::exp(b * log_snr_) * total;
}

Atom ExactCellMoments::clutter_free_atom() const {
  Atom a;
  a.location = std::exp(log_snr_);
  for (const auto& az : azimuths_) a.weight += az.weight * std::exp(-az.cell_mass);
  return a;
}

ExactCellOptions exact_cell_options_for(const SystemConfig& cfg, const TargetModel& tgt,
                                        const ClutterModel& clut, double kappa,
                                        double epsilon, double u_cap) {
  ExactCellOptions probe;
  probe.theta_m_intervals = 4;
  probe.radial_panels = 4;
  const ExactCellMoments coarse(cfg, tgt, clut, kappa, epsilon, probe);
  ExactCellOptions opt;
  // At most half an oscillation of exp(j u ln w) per radial panel.
  const double phase = u_cap * coarse.log_factor_span();
  opt.radial_panels = std::max(opt.radial_panels, int(std::ceil(phase / kPi)) + 1);
  return opt;
}

cplx moment(const SystemConfig& cfg, const TargetModel& tgt, const ClutterModel& clut,
            const MomentRequest& req) {
  if (!(req.order_b.real() >= 0.0)) fail_config("moment order must have Re(b) >= 0");
  if (req.approximation == MomentBranch::exact_cell_integral) {
    const double u_cap = std::max(50.0, std::abs(req.order_b));
    const auto opt = exact_cell_options_for(cfg, tgt, clut, req.kappa, req.epsilon, u_cap);
    return ExactCellMoments(cfg, tgt, clut, req.kappa, req.epsilon, opt).moment(req.order_b);
  }
  const auto report = coverage_probability(cfg, tgt, clut, req.kappa, req.epsilon);
  const double J = clutter_cell_constant(cfg, clut, req.kappa, req.epsilon);
  const double log_ell = log_clutter_factor(cfg, tgt, clut, 1.0);
  const cplx b = req.order_b;
  return std::exp(b * report.log_snr_term + J * (std::exp(b * log_ell) - 1.0));
}

MetaDistCurve invert_gil_pelaez(const std::function<cplx(double)>& moment_fn,
                                std::span<const double> z_grid, const GilPelaezOptions& opt) {
  require_z_grid(z_grid);
  if (!(opt.panel_width > 0.0) || !(opt.u_cap >= opt.panel_width)) {
    fail_config("Gil-Pelaez: need 0 < panel_width <= u_cap");
  }
  double atom_mass = 0.0;
  for (const auto& a : opt.atoms) {
    if (!(a.location > 0.0) || !(a.weight >= 0.0)) fail_config("Gil-Pelaez: invalid atom");
    atom_mass += a.weight;
  }
  auto residual = [&](double u) {
    cplx m = moment_fn(u);
    for (const auto& a : opt.atoms) {
      m -= a.weight * std::exp(cplx(0.0, u * std::log(a.location)));
    }
    return m;
  };

  const int panels = int(std::floor(opt.u_cap / opt.panel_width + 1e-9));
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<cplx> values;
  int used_panels = 0;
  bool decayed = false;
  const int batch = 32;
  while (used_panels < panels && !decayed) {
    const int count = std::min(batch, panels - used_panels);
    const std::size_t offset = nodes.size();
    for (int p = 0; p < count; ++p) {
      const double a = (used_panels + p) * opt.panel_width;
      const auto rule = quad::panel_rule(a, a + opt.panel_width);
      nodes.insert(nodes.end(), rule.nodes.begin(), rule.nodes.end());
      weights.insert(weights.end(), rule.kronrod.begin(), rule.kronrod.end());
    }
    values.resize(nodes.size());
    parallel_for(std::int64_t(nodes.size() - offset), opt.threads, [&](std::int64_t i) {
      values[offset + std::size_t(i)] = residual(nodes[offset + std::size_t(i)]);
    });
    for (int p = 0; p < count; ++p) {
      double peak = 0.0;
      for (int k = 0; k < 15; ++k) {
        peak = std::max(peak, std::abs(values[offset + std::size_t(15 * p + k)]));
      }
      if (!std::isfinite(peak)) {
        fail_numerical("Gil-Pelaez: moment is not finite near u = " +
                       std::to_string((used_panels + p) * opt.panel_width));
      }
      if (peak < opt.decay_cutoff) {
        decayed = true;
        used_panels += p + 1;
        break;
      }
    }
    if (!decayed) used_panels += count;
  }
  const std::size_t used_nodes = std::size_t(used_panels) * 15;

  MetaDistCurve curve;
  curve.z_grid.assign(z_grid.begin(), z_grid.end());
  curve.u_max = used_panels * opt.panel_width;
  curve.tapered = !decayed;
  curve.moment_evaluations = std::int64_t(values.size());
  std::vector<double> tap(used_nodes, 1.0);
  if (curve.tapered) {
    for (std::size_t k = 0; k < used_nodes; ++k) tap[k] = taper(nodes[k], curve.u_max);
  }

  curve.ccdf_values.resize(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double x = std::log(z_grid[i]);
    double integral = 0.0;
    for (std::size_t k = 0; k < used_nodes; ++k) {
      const double u = nodes[k];
      integral += weights[k] * tap[k] * (std::exp(cplx(0.0, -u * x)) * values[k]).imag() / u;
    }
    double f = 0.5 * (1.0 - atom_mass) + integral / kPi;
    for (const auto& a : opt.atoms) {
      if (a.location >= z_grid[i]) f += a.weight;
    }
    curve.ccdf_values[i] = f;
  }

  for (std::size_t i = 0; i < curve.ccdf_values.size(); ++i) {
    double f = std::clamp(curve.ccdf_values[i], 0.0, 1.0);
    if (i > 0) f = std::min(f, curve.ccdf_values[i - 1]);
    curve.max_adjustment = std::max(curve.max_adjustment, std::abs(f - curve.ccdf_values[i]));
    curve.ccdf_values[i] = f;
  }
  return curve;
}

MetaDistCurve meta_distribution(const SystemConfig& cfg, const TargetModel& tgt,
                                const ClutterModel& clut, double kappa, double epsilon,
                                MomentBranch branch, std::span<const double> z_grid,
                                int threads) {
  GilPelaezOptions opt;
  opt.threads = threads;
  MetaDistCurve curve;
  if (branch == MomentBranch::path_loss_approx) {
    const MomentRequest base{0.0, kappa, epsilon, MomentBranch::path_loss_approx};
    // Validate once; the closed form is cheap enough to rebuild per node.
    moment(cfg, tgt, clut, base);
    auto fn = [&](double u) {
      MomentRequest r = base;
      r.order_b = cplx(0.0, u);
      return moment(cfg, tgt, clut, r);
    };
    curve = invert_gil_pelaez(fn, z_grid, opt);
  } else {
    opt.panel_width = 1.0;
    opt.u_cap = 100.0;
    const auto cell_opt = exact_cell_options_for(cfg, tgt, clut, kappa, epsilon, opt.u_cap);
    const ExactCellMoments gen(cfg, tgt, clut, kappa, epsilon, cell_opt);
    opt.atoms.push_back(gen.clutter_free_atom());
    curve = invert_gil_pelaez([&](double u) { return gen.moment(cplx(0.0, u)); }, z_grid, opt);
  }
  curve.gamma = cfg.gamma;
  return curve;
}

double reliability_ceiling(const MetaDistCurve& curve) {
  double best = 0.0;
  for (std::size_t i = 0; i < curve.z_grid.size(); ++i) {
    if (curve.ccdf_values[i] > kCeilingBand) best = std::max(best, curve.z_grid[i]);
  }
  return best;
}

std::vector<double> sample_conditional_pdc(const SystemConfig& cfg, const TargetModel& tgt,
                                           const ClutterModel& clut,
                                           const SimRegion& region, double kappa,
                                           double epsilon, std::int64_t n_samples,
                                           std::uint64_t seed, int threads,
                                           PathLoss path_loss) {
  if (n_samples < 1) fail_config("sample_conditional_pdc: n_samples must be >= 1");
  check_region(cfg, region, kappa);
  std::vector<double> out(std::size_t(n_samples), 0.0);
  parallel_for(n_samples, threads, [&](std::int64_t i) {
    const TrialKey key{seed, std::uint64_t(i)};
    const TargetDraw target = draw_target(cfg, tgt, kappa, key);
    const auto cell = in_cell_clutter(cfg, clut, region, target.position, epsilon, key);
    out[std::size_t(i)] = conditional_pdc(cfg, tgt, clut, cell, kappa, epsilon, path_loss);
  });
  return out;
}

MetaDistCurve empirical_ccdf(std::span<const double> samples, std::span<const double> z_grid,
                             double gamma) {
  require_z_grid(z_grid);
  if (samples.empty()) fail_config("empirical_ccdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  MetaDistCurve curve;
  curve.gamma = gamma;
  curve.z_grid.assign(z_grid.begin(), z_grid.end());
  for (double z : z_grid) {
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), z);
    curve.ccdf_values.push_back(double(sorted.end() - first) / double(sorted.size()));
  }
  return curve;
}

}  // namespace jrc
