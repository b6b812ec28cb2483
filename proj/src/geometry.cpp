#include "jrcnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jrcnet/error.hpp"
#include "jrcnet/quadrature.hpp"

namespace jrc {

void GeometryConfig::validate() const {
  if (!(baseline_L >= 0.0) || !std::isfinite(baseline_L)) {
    fail_config("baseline_L must be >= 0");
  }
  if (!(search_space_Omega > 0.0) || search_space_Omega > kTwoPi * (1.0 + 1e-12)) {
    fail_config("search_space_Omega must lie in (0, 2pi]");
  }
}

CartesianPoint to_cartesian(PolarPoint p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

PolarPoint to_polar(CartesianPoint p) {
  return {std::hypot(p.x, p.y), wrap_angle(std::atan2(p.y, p.x))};
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

bool is_cosite(const GeometryConfig& cfg, double kappa) {
  return 2.0 * kappa > cfg.baseline_L;
}

BistaticRanges ranges_from_point(const GeometryConfig& cfg, PolarPoint p) {
  const CartesianPoint c = to_cartesian(p);
  const double half = 0.5 * cfg.baseline_L;
  BistaticRanges out;
  out.r_tx = std::hypot(c.x + half, c.y);
  out.r_rx = std::hypot(c.x - half, c.y);
  const double tol = 1e-12 * std::max({cfg.baseline_L, p.r, 1.0});
  if (out.r_tx <= tol || out.r_rx <= tol) {
    fail_config("degenerate geometry: point coincides with a radar site");
  }
  out.kappa = std::sqrt(out.r_tx * out.r_rx);
  const double L = cfg.baseline_L;
  const double cos_beta =
      (out.r_tx * out.r_tx + out.r_rx * out.r_rx - L * L) / (2.0 * out.r_tx * out.r_rx);
  out.beta = std::acos(std::clamp(cos_beta, -1.0, 1.0));
  return out;
}

double bs_azimuth(const GeometryConfig& cfg, CartesianPoint p) {
  return std::atan2(p.y, p.x + 0.5 * cfg.baseline_L);
}

double max_bistatic_angle(const GeometryConfig& cfg, double kappa) {
  if (!(kappa > cfg.baseline_L)) {
    fail_config("max_bistatic_angle: kappa outside approximation domain (kappa <= L)");
  }
  return std::asin(cfg.baseline_L / kappa);
}

double cassini_radius(const GeometryConfig& cfg, double kappa, double theta) {
  if (!is_cosite(cfg, kappa)) {
    fail_config("cassini_radius: oval splits into two lobes (2 kappa <= L)");
  }
  const double L2 = cfg.baseline_L * cfg.baseline_L;
  const double k2 = kappa * kappa;
  const double s2t = std::sin(2.0 * theta);
  // r^2 = (L^2/4) cos(2 theta) + sqrt(kappa^4 - (L^4/16) sin^2(2 theta))
  const double disc = k2 * k2 - (L2 * L2 / 16.0) * s2t * s2t;
  const double r2 = 0.25 * L2 * std::cos(2.0 * theta) + std::sqrt(disc);
  return std::sqrt(r2);
}

double cassini_circumference(const GeometryConfig& cfg, double kappa,
                             CircumferenceMode mode) {
  if (!is_cosite(cfg, kappa)) {
    fail_config("cassini_circumference: oval splits into two lobes (2 kappa <= L)");
  }
  const double L = cfg.baseline_L;
  if (mode == CircumferenceMode::approximate) {
    if (L > 0.0 && !(kappa > L)) {
      fail_config("cassini_circumference: approximate mode requires kappa > L");
    }
    return kTwoPi * kappa - 3.0 * kPi * L * L / (8.0 * kappa);
  }
  if (L == 0.0) return kTwoPi * kappa;
  // r(theta) has period pi and is even, so integrate a quarter and scale.
  auto r = [&](double t) { return cassini_radius(cfg, kappa, t); };
  const auto res = quad::integrate(r, 0.0, 0.5 * kPi, {0.0, 1e-12, 2000});
  if (!res.converged) {
    fail_numerical("cassini_circumference: quadrature did not converge (error " +
                   std::to_string(res.abs_error) + ")");
  }
  return 4.0 * res.value;
}

double resolution_cell_area(const GeometryConfig& cfg, double kappa,
                            double pulse_width_tau, double beamwidth) {
  const double L = cfg.baseline_L;
  if (!(kappa > L)) fail_config("resolution_cell_area: requires kappa > L");
  if (!(beamwidth > 0.0) || !(pulse_width_tau > 0.0)) {
    fail_config("resolution_cell_area: beamwidth and tau must be > 0");
  }
  return kSpeedOfLight * pulse_width_tau * kappa * kappa * beamwidth /
         (kappa + std::sqrt(kappa * kappa - L * L));
}

double range_resolution(const GeometryConfig& cfg, double kappa, double pulse_width_tau) {
  const double L = cfg.baseline_L;
  if (!(2.0 * kappa > L)) fail_config("range_resolution: requires 2 kappa > L");
  return kSpeedOfLight * pulse_width_tau /
         (2.0 * std::sqrt(1.0 - L * L / (4.0 * kappa * kappa)));
}

double max_unambiguous_kappa(const GeometryConfig& cfg, double t_pri) {
  const double reach = kSpeedOfLight * t_pri;
  const double L = cfg.baseline_L;
  if (!(reach > L)) fail_config("max_unambiguous_kappa: PRI too short for baseline");
  return 0.5 * std::sqrt(reach * reach - L * L);
}

}  // namespace jrc
