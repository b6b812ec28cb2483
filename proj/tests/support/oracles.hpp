#pragma once

// Reference computations for the tests. None of these call into the library's
// quadrature, search or RNG code, so agreement is an independent check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kC = 299792458.0;
inline constexpr double kBoltzmann = 1.380649e-23;

struct Sites {
  double bs_x, rx_x;  // both on the x axis
};

inline Sites sites(double L) { return {-0.5 * L, 0.5 * L}; }

/// Distances from a polar point to the BS and RX by plain coordinates.
inline void site_distances(double L, double r, double theta, double& r_tx, double& r_rx) {
  const double x = r * std::cos(theta), y = r * std::sin(theta);
  const Sites s = sites(L);
  r_tx = std::sqrt((x - s.bs_x) * (x - s.bs_x) + y * y);
  r_rx = std::sqrt((x - s.rx_x) * (x - s.rx_x) + y * y);
}

/// Bistatic angle from the two site vectors' dot product.
inline double bistatic_angle(double L, double r, double theta) {
  const double x = r * std::cos(theta), y = r * std::sin(theta);
  const Sites s = sites(L);
  const double ax = s.bs_x - x, ay = -y, bx = s.rx_x - x, by = -y;
  const double c = (ax * bx + ay * by) / (std::hypot(ax, ay) * std::hypot(bx, by));
  return std::acos(std::fmax(-1.0, std::fmin(1.0, c)));
}

/// Oval radius by bisection on (r^2 + L^2/4)^2 - r^2 L^2 cos^2 = kappa^4 from
/// the outside in, which needs the function to change sign only once beyond
/// sqrt(kappa^2 - L^2/4).
inline double cassini_radius_bisect(double L, double kappa, double theta) {
  auto f = [&](double r) {
    const double a = r * r + 0.25 * L * L;
    const double c = std::cos(theta);
    return a * a - r * r * L * L * c * c - kappa * kappa * kappa * kappa;
  };
  double lo = std::sqrt(std::fmax(0.0, kappa * kappa - 0.25 * L * L)) * (1.0 - 1e-12);
  double hi = kappa + L;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Maximum of f on [a, b] by dense sampling followed by repeated local zoom.
inline double maximize_dense(const std::function<double(double)>& f, double a, double b) {
  double lo = a, hi = b, best_x = a, best = f(a);
  for (int level = 0; level < 8; ++level) {
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
      const double x = lo + (hi - lo) * i / n;
      const double v = f(x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    const double w = (hi - lo) / n;
    lo = std::fmax(a, best_x - 2 * w);
    hi = std::fmin(b, best_x + 2 * w);
  }
  return best;
}

/// Poisson mixture CCDF of T q^n with n ~ Poisson(mean).
inline double poisson_mixture_ccdf(double T, double q, double mean, double z) {
  double p = std::exp(-mean), total = 0.0;
  for (int n = 0; n < 400; ++n) {
    if (T * std::pow(q, n) >= z) total += p;
    p *= mean / (n + 1);
  }
  return total;
}

/// Sample mean and standard error of exp(-c sigma) with sigma ~ Weibull using
/// the standard library generator.
struct SampleStat {
  double mean, std_error;
};

inline SampleStat weibull_expectation_mc(double alpha, double scale, double c, int samples,
                                         std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::weibull_distribution<double> dist(alpha, scale);
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double v = 1.0 - std::exp(-c * dist(gen));
    sum += v;
    sum2 += v * v;
  }
  const double m = sum / samples;
  const double var = (sum2 / samples - m * m) * samples / (samples - 1.0);
  return {m, std::sqrt(var / samples)};
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

/// Number of sign changes in the successive differences of v (ignoring ties).
inline int direction_changes(const std::vector<double>& v) {
  int changes = 0, last = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = v[i] - v[i - 1];
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace oracle
