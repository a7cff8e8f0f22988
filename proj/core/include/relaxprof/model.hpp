#pragma once

// Relaxation systems A(U)U' = Q(U) in the normalized block form: U = (u,v),
// q(u,0) = 0, top rows of A equal the Jacobian of the flux f(u,v).

#include <functional>
#include <stdexcept>
#include <string>

#include "relaxprof/types.hpp"

namespace relaxprof {

struct BuiltinModelId {
  enum Kind { JinXinBurgers, Broadwell, SyntheticQuasilinearDegenerate };
  Kind kind = JinXinBurgers;
  double a = 1.0;   // Jin-Xin wave speed, a >= 1
  double mu = 0.1;  // synthetic coupling strength, 0 <= mu <= 0.2

  static BuiltinModelId jin_xin(double a = 1.0);
  static BuiltinModelId broadwell();
  static BuiltinModelId synthetic(double mu = 0.1);
};

struct ModelSpec {
  std::string name;
  int n = 0;  // macroscopic dimension
  int r = 0;  // microscopic dimension

  // U-valued evaluators, U = (u, v) in R^{n+r}
  std::function<Vec(const Vec&)> flux;         // f(U) in R^n
  std::function<Mat(const Vec&)> advection;    // A(U), (n+r)x(n+r)
  std::function<Vec(const Vec&)> source;       // q(U) in R^r
  std::function<Mat(const Vec&)> symmetrizer;  // S(U), block-diagonal SPD

  // directional derivatives
  std::function<Mat(const Vec&, const Vec&)> advection_d;               // dA(U)[V]
  std::function<Mat(const Vec&, const Vec&, const Vec&)> advection_d2;  // d2A(U)[V,W]
  std::function<Mat(const Vec&)> source_d;                              // dq(U), r x (n+r)
  std::function<Vec(const Vec&, const Vec&, const Vec&)> source_d2;     // d2q(U)[V,W]

  Vec u0;  // base state with alpha(u0) = 0 for the genuinely nonlinear field
  double neighborhood_radius = 0.5;  // working box |u-u0|_inf, |v|_inf
  double frame_speed = 0.0;          // lab-frame speed absorbed into A (A_lab = A + s*I)
  bool derivatives_are_fd = false;

  int dim() const { return n + r; }
  Vec state(const Vec& u, const Vec& v) const;
  Vec u_part(const Vec& U) const { return U.head(n); }
  Vec v_part(const Vec& U) const { return U.tail(r); }
  Vec equilibrium(const Vec& u) const;  // (u, 0)
  bool in_neighborhood(const Vec& U) const;
};

ModelSpec make_builtin(const BuiltinModelId& id);

// 4th-order central finite differences (step 1e-5 scaled by state magnitude)
// for models registered without analytic derivative evaluators.
void attach_fd_derivatives(ModelSpec& m);

struct BlockEval {
  Mat A11, A12, A21, A22;
  Mat dq_v;  // r x r
  Mat S11, S22;
  bool in_neighborhood = true;
  double source_spectral_margin = 0.0;  // -max Re eig(dq_v) at equilibrium states
};

BlockEval evaluate_blocks(const ModelSpec& m, const Vec& U);

}  // namespace relaxprof
