#pragma once

#include <Eigen/Dense>

namespace thermnet {

/// e^M by scaling and squaring with a degree-6 diagonal Padé approximant.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m);

}  // namespace thermnet
