#pragma once

// Bistatic geometry. The base station (transmitter) sits at (-L/2, 0) and the
// passive receiver at (+L/2, 0); angles are measured from the positive x axis.

#include "jrcnet/constants.hpp"

namespace jrc {

struct GeometryConfig {
  double baseline_L = 5.0;            // m
  double search_space_Omega = kTwoPi;  // rad

  void validate() const;
};

struct PolarPoint {
  double r = 0.0;      // m, distance from the origin
  double theta = 0.0;  // rad, in [0, 2pi)
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

struct BistaticRanges {
  double r_tx = 0.0;   // distance to the base station
  double r_rx = 0.0;   // distance to the receiver
  double kappa = 0.0;  // sqrt(r_tx * r_rx)
  double beta = 0.0;   // bistatic angle at the point
};

enum class CircumferenceMode { approximate, exact };

CartesianPoint to_cartesian(PolarPoint p);
PolarPoint to_polar(CartesianPoint p);

/// Wraps an angle into [0, 2pi).
double wrap_angle(double theta);

/// Single connected oval: 2 kappa > L.
bool is_cosite(const GeometryConfig& cfg, double kappa);

BistaticRanges ranges_from_point(const GeometryConfig& cfg, PolarPoint p);

/// Azimuth of p as seen from the base station, in (-pi, pi].
double bs_azimuth(const GeometryConfig& cfg, CartesianPoint p);

/// asin(L / kappa), the small-angle estimate sin(beta_max) ~ L / kappa.
double max_bistatic_angle(const GeometryConfig& cfg, double kappa);

/// Positive root r of (r^2 + L^2/4)^2 - r^2 L^2 cos^2(theta) = kappa^4.
double cassini_radius(const GeometryConfig& cfg, double kappa, double theta);

/// Polar integral of cassini_radius over [0, 2pi) (exact) or its
/// 2 pi kappa - 3 pi L^2 / (8 kappa) estimate (approximate).
double cassini_circumference(const GeometryConfig& cfg, double kappa,
                             CircumferenceMode mode);

/// Range-resolution cell area c tau kappa^2 dtheta / (kappa + sqrt(kappa^2 - L^2)).
double resolution_cell_area(const GeometryConfig& cfg, double kappa,
                            double pulse_width_tau, double beamwidth);

/// c tau / (2 sqrt(1 - L^2 / (4 kappa^2))).
double range_resolution(const GeometryConfig& cfg, double kappa, double pulse_width_tau);

/// Largest bistatic range whose two-way path fits in one PRI: 0.5 sqrt(c^2 T^2 - L^2).
double max_unambiguous_kappa(const GeometryConfig& cfg, double t_pri);

}  // namespace jrc
