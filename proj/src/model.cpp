#include "jrcnet/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jrcnet/error.hpp"

namespace jrc {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail_config(std::string(name) + " must be a finite value > 0");
  }
}

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    fail_config(std::string(name) + " must be a finite value >= 0");
  }
}

}  // namespace

void SystemConfig::validate() const {
  require_positive(ptx, "ptx");
  require_positive(g0, "g0");
  require_positive(wavelength, "wavelength");
  require_positive(t_total, "t_total");
  require_positive(t_beam, "t_beam");
  require_positive(tau, "tau");
  require_positive(t_sys, "t_sys");
  require_non_negative(gamma, "gamma");
  require_positive(rate_D, "rate_D");
  require_positive(t_pri, "t_pri");
  if (t_beam > t_total) fail_config("t_beam must not exceed t_total");
  geometry.validate();
}

void TargetModel::validate() const {
  require_positive(mean_rcs_m, "mean_rcs_m");
  require_non_negative(density_rho_m, "density_rho_m");
}

void ClutterModel::validate() const {
  require_positive(mean_rcs_c, "mean_rcs_c");
  require_non_negative(density_rho_c, "density_rho_c");
  if (!(weibull_alpha >= 0.5 && weibull_alpha <= 4.0)) {
    fail_config("weibull_alpha must lie in [0.5, 4]");
  }
}

DerivedConstants DerivedConstants::from(const SystemConfig& cfg) {
  DerivedConstants d;
  const double four_pi = 4.0 * kPi;
  d.h0 = cfg.wavelength * cfg.wavelength / (four_pi * four_pi * four_pi);
  d.b0 = cfg.t_total / (cfg.geometry.search_space_Omega * cfg.t_beam);
  d.noise_Ns = kBoltzmann * cfg.t_sys / cfg.tau;
  return d;
}

double beamwidth_from_duty(const SystemConfig& cfg, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
  const double omega = cfg.geometry.search_space_Omega;
  const double width = omega * cfg.t_beam / (epsilon * cfg.t_total);
  if (width > omega * (1.0 + 1e-12)) {
    fail_config("duty cycle too small to form even one beam");
  }
  return std::min(width, omega);
}

double signal_power(const SystemConfig& cfg, double kappa, double epsilon, double sigma_m) {
  if (!(kappa > 0.0)) fail_config("signal_power: kappa must be > 0");
  if (!(sigma_m >= 0.0)) fail_config("signal_power: sigma_m must be >= 0");
  const auto d = DerivedConstants::from(cfg);
  const double k2 = kappa * kappa;
  return cfg.ptx * cfg.g0 * d.b0 * epsilon * sigma_m * d.h0 / (k2 * k2);
}

double clutter_power(const SystemConfig& cfg, std::span<const ClutterReturn> points,
                     double epsilon) {
  const auto d = DerivedConstants::from(cfg);
  const double scale = cfg.ptx * cfg.g0 * d.b0 * epsilon * d.h0;
  double sum = 0.0;
  for (const auto& p : points) {
    if (!(p.sigma_c >= 0.0)) fail_config("clutter_power: sigma_c must be >= 0");
    const double prod = p.ranges.r_tx * p.ranges.r_rx;  // kappa_c^2
    sum += p.sigma_c / (prod * prod);
  }
  return scale * sum;
}

double scnr(const SystemConfig& cfg, double signal, double clutter) {
  if (!(signal >= 0.0) || !(clutter >= 0.0)) {
    fail_config("scnr: signal and clutter must be >= 0");
  }
  return signal / (clutter + DerivedConstants::from(cfg).noise_Ns);
}

}  // namespace jrc
