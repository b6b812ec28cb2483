#pragma once

// System configuration and link-budget primitives for the radar search phase.

#include <span>

#include "jrcnet/geometry.hpp"

namespace jrc {

struct SystemConfig {
  double ptx = 1e-3;          // W, transmit power
  double g0 = 1.0;            // antenna gain constant, G_tx = g0 / beamwidth
  double wavelength = 0.005;  // m
  double t_total = 1.0;       // s, frame length T = T_search + T_serve
  double t_beam = 5e-3;       // s, dwell per beam
  double tau = 1e-9;          // s, pulse width; bandwidth is 1 / tau
  double t_sys = 300.0;       // K
  double gamma = 1.0;         // SCNR threshold (linear)
  double rate_D = 1.0;        // per-user rate; throughput is reported in units of D
  double t_pri = 1e-6;        // s
  GeometryConfig geometry;

  double bandwidth() const { return 1.0 / tau; }
  void validate() const;
};

struct TargetModel {
  double mean_rcs_m = 1.0;      // m^2, Swerling-1 mean
  double density_rho_m = 1e-3;  // users per m^2

  void validate() const;
};

struct ClutterModel {
  double mean_rcs_c = 1.0;       // m^2, Weibull mean
  double density_rho_c = 0.01;   // scatterers per m^2
  double weibull_alpha = 1.0;    // shape; 1 is exponential

  void validate() const;
};

/// Quantities derived from SystemConfig; recomputed on demand.
struct DerivedConstants {
  double h0 = 0.0;        // lambda^2 / (4 pi)^3
  double b0 = 0.0;        // T / (Omega T_beam), beams per radian per unit duty
  double noise_Ns = 0.0;  // k_B T_s BW

  static DerivedConstants from(const SystemConfig& cfg);
};

/// A clutter point as seen by the receiver.
struct ClutterReturn {
  BistaticRanges ranges;
  double sigma_c = 0.0;
};

/// Beamwidth Omega T_beam / (epsilon T) = 1 / (B0 epsilon).
double beamwidth_from_duty(const SystemConfig& cfg, double epsilon);

double signal_power(const SystemConfig& cfg, double kappa, double epsilon, double sigma_m);

/// Sum of in-cell clutter returns, each with its own path loss.
double clutter_power(const SystemConfig& cfg, std::span<const ClutterReturn> points,
                     double epsilon);

double scnr(const SystemConfig& cfg, double signal, double clutter);

}  // namespace jrc
