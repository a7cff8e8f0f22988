#pragma once

// Derivative stencils, the scaled weighted norms H^s_{eps,delta}, and the
// frequency-cutoff smoothing operators S_theta.
//
//   ||f||_{H^s_{eps,delta}} = eps^{1/2} sum_{k<=s} eps^{-k} ||e^{delta eps <x>} d_x^k f||_{L2},
//   <x> = (x^2+1)^{1/2}.

#include <complex>
#include <vector>

#include "relaxprof/grid.hpp"
#include "relaxprof/types.hpp"

namespace relaxprof {

struct NormSpec {
  int s = 0;
  double epsilon = 0.1;
  double delta = 0.0;

  static constexpr double kDelta0 = 0.1;
  static constexpr int kSmax = 6;

  NormSpec() = default;
  NormSpec(int s_, double eps_, double delta_ = 0.0);
};

// d_x^k by 4th-order stencils: central in the interior, one-sided at the
// boundaries (Fornberg weights). Physical derivative, i.e. eps^k * d_xt^k.
GridProfile derivative(const GridProfile& p, int k);

// Fornberg finite-difference weights for the m-th derivative at point x0
// given nodes xs. Exposed for stencil-order tests.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m);

double weighted_norm(const GridProfile& p, const NormSpec& ns);
// L2_{eps,delta} piece only: eps^{1/2} ||e^{delta eps <x>} p||_{L2}
double weighted_l2(const GridProfile& p, double delta);
// Norm on pairs F = (f,g): |F|_s = ||f||_{H^{s+1}} + ||g||_{H^s}
double pair_norm(const GridProfile& f, const GridProfile& g, const NormSpec& ns);

// Frequency cutoff at xt-frequency theta: multiply the padded DFT by
// chi(|xi|/theta), chi a septic smoothstep equal to 1 on [0,1], 0 on [2,inf).
// Requires decaying input (boundary magnitude <= 1e-6 * interior max) unless
// allow_window is set, in which case the tails are windowed and flagged.
struct SmoothResult {
  GridProfile profile;
  bool windowed = false;
};
SmoothResult smooth_profile(const GridProfile& p, double theta, bool allow_window = false);
GridProfile smooth(const GridProfile& p, double theta);  // throws on non-decaying input

double nyquist_frequency(const Grid& g);  // pi / h_tilde

// Power-of-two radix-2 FFT used by smooth(); exposed for Parseval tests.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace relaxprof
