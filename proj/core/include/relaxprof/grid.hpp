#pragma once

// Uniform grids in the slow variable xt = eps*x and profile containers.
// Physical spacing is h = ht/eps, so the physical domain scales as 1/eps.

#include <string>
#include <vector>

#include "relaxprof/types.hpp"

namespace relaxprof {

struct Grid {
  double L_tilde = 12.0;   // half-width in xt
  double h_tilde = 0.01;   // spacing in xt
  double epsilon = 0.1;    // amplitude parameter
  int M = 0;               // node count, odd, node at x = 0

  static Grid make(double L_tilde, double h_tilde, double epsilon);

  double h() const { return h_tilde / epsilon; }          // physical spacing
  int center() const { return (M - 1) / 2; }
  double x_tilde(int i) const { return -L_tilde + i * h_tilde; }
  double x(int i) const { return x_tilde(i) / epsilon; }
  bool same_layout(const Grid& o) const;
};

// Values of a vector-valued function of x on a Grid, one row per node.
struct GridProfile {
  Grid grid;
  Mat values;  // M x d

  GridProfile() = default;
  GridProfile(const Grid& g, int d) : grid(g), values(Mat::Zero(g.M, d)) {}

  int components() const { return static_cast<int>(values.cols()); }
  int nodes() const { return static_cast<int>(values.rows()); }

  Vec at(int i) const { return values.row(i).transpose(); }
  double sup_norm() const;
  // sup over |xt| <= window of the row-wise Euclidean norm
  double sup_norm_window(double xt_window) const;
  bool all_finite() const;

  GridProfile component_block(int begin, int count) const;
  static GridProfile hcat(const GridProfile& a, const GridProfile& b);
};

// Cubic-spline sample of profile at shifted positions x + shift (physical x).
// Out-of-range queries clamp to the boundary values.
GridProfile shift_profile(const GridProfile& p, double shift_x);

}  // namespace relaxprof
