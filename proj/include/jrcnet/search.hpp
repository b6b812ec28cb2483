#pragma once

// One-dimensional maximization used to verify the closed-form optimizers:
// a coarse grid scan locates the bracket, golden-section search refines it.

#include <cmath>
#include <functional>

namespace jrc::search {

struct Argmax {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

enum class Grid { linear, log };

/// Golden-section maximization of a unimodal f on [lo, hi]; stops when the
/// bracket is narrower than x_tol.
Argmax golden_section_maximize(const std::function<double(double)>& f, double lo,
                               double hi, double x_tol);

/// Scan f on `points` grid nodes in [lo, hi], then golden-section search the
/// two cells around the best node. With Grid::log the search runs in log(x)
/// and x_tol is a relative tolerance.
Argmax scan_maximize(const std::function<double(double)>& f, double lo, double hi,
                     Grid grid = Grid::linear, int points = 64, double x_tol = 1e-9);

}  // namespace jrc::search
