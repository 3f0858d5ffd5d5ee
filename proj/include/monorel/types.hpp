#pragma once

#include <Eigen/Dense>

namespace monorel {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace monorel
