#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature over finite intervals.
// Works for real and complex integrands; the interval with the largest
// error estimate is bisected until the global estimate meets tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <type_traits>
#include <vector>

namespace jrc::quad {

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the Kronrod nodes with odd index (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

/// The 15 abscissae of the Kronrod rule mapped to [a, b], in ascending order,
/// with matching Kronrod weights and Gauss weights (zero on Kronrod-only nodes).
struct PanelRule {
  std::array<double, 15> nodes;
  std::array<double, 15> kronrod;
  std::array<double, 15> gauss;
};

inline PanelRule panel_rule(double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  PanelRule rule{};
  for (int i = 0; i < 7; ++i) {
    const double dx = half * detail::kKronrodNodes[i];
    const double gw = (i % 2 == 1) ? half * detail::kGaussWeights[i / 2] : 0.0;
    rule.nodes[i] = center - dx;
    rule.nodes[14 - i] = center + dx;
    rule.kronrod[i] = rule.kronrod[14 - i] = half * detail::kKronrodWeights[i];
    rule.gauss[i] = rule.gauss[14 - i] = gw;
  }
  rule.nodes[7] = center;
  rule.kronrod[7] = half * detail::kKronrodWeights[7];
  rule.gauss[7] = half * detail::kGaussWeights[3];
  return rule;
}

template <class T>
struct Estimate {
  T value{};
  double abs_error = 0.0;
};

template <class F>
auto gauss_kronrod15(F&& f, double a, double b)
    -> Estimate<std::invoke_result_t<F&, double>> {
  using T = std::invoke_result_t<F&, double>;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * detail::kKronrodWeights[7];
  T gauss = fc * detail::kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * detail::kKronrodNodes[i];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * detail::kKronrodWeights[i];
    if (i % 2 == 1) gauss += sum * detail::kGaussWeights[i / 2];
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

template <class T>
struct Result {
  T value{};
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive integration of f over [a, b].
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {})
    -> Result<std::invoke_result_t<F&, double>> {
  using T = std::invoke_result_t<F&, double>;
  struct Piece {
    double a, b;
    Estimate<T> est;
    bool operator<(const Piece& o) const { return est.abs_error < o.est.abs_error; }
  };

  Result<T> out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Piece> heap;
  Piece first{a, b, gauss_kronrod15(f, a, b)};
  T total = first.est.value;
  double error = first.est.abs_error;
  heap.push(first);
  int intervals = 1;

  auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };

  while (error > tolerance() && intervals < opt.max_intervals) {
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);  // cannot split further at double precision
      break;
    }
    Piece left{worst.a, mid, gauss_kronrod15(f, worst.a, mid)};
    Piece right{mid, worst.b, gauss_kronrod15(f, mid, worst.b)};
    total += left.est.value + right.est.value - worst.est.value;
    error += left.est.abs_error + right.est.abs_error - worst.est.abs_error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed accumulated cancellation from the running updates.
  T resum{};
  double err_sum = 0.0;
  while (!heap.empty()) {
    resum += heap.top().est.value;
    err_sum += heap.top().est.abs_error;
    heap.pop();
  }
  out.value = resum;
  out.abs_error = err_sum;
  out.intervals = intervals;
  out.converged = err_sum <= std::max(opt.abs_tol, opt.rel_tol * std::abs(resum)) ||
                  err_sum <= 64.0 * 2.2e-16 * std::abs(resum);
  return out;
}

}  // namespace jrc::quad
