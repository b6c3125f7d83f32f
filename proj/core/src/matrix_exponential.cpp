#include "thermnet/matrix_exponential.hpp"

#include <cmath>

#include "thermnet/errors.hpp"

namespace thermnet {

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix_exponential: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;

  constexpr int kOrder = 6;
  // Scale so that ||M / 2^s||_inf <= 1/2.
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = identity;
  Eigen::MatrixXd numer = identity;
  Eigen::MatrixXd denom = identity;
  double c = 1.0;
  for (int k = 1; k <= kOrder; ++k) {
    c *= static_cast<double>(kOrder - k + 1) / static_cast<double>(k * (2 * kOrder - k + 1));
    power = power * a;
    numer += c * power;
    denom += ((k % 2 == 0) ? c : -c) * power;
  }
  Eigen::MatrixXd e = denom.partialPivLu().solve(numer);
  for (int i = 0; i < squarings; ++i) e = e * e;
  return e;
}

}  // namespace thermnet
