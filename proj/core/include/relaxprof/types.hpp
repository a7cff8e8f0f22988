#pragma once

#include <Eigen/Dense>

namespace relaxprof {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relaxprof
