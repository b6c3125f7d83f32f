#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thermnet/netmodel.hpp"

namespace thermnet {

/// C θ' = K θ + K_b b + f with K = -AᵀGA and K_b = AᵀG.
/// Rows with zero capacity are algebraic.
struct DaeSystem {
  Eigen::VectorXd capacity;  // diagonal of C
  Eigen::MatrixXd K;
  Eigen::MatrixXd Kb;
  Eigen::MatrixXd incidence;
  Eigen::VectorXd conductance;

  std::vector<std::string> node_labels;
  std::vector<std::string> branch_labels;
  std::size_t output = 0;

  /// Named sources and how they scatter onto b and f (see ParameterMatrices).
  std::vector<Source> sources;
  Eigen::MatrixXd scatter_b;
  Eigen::MatrixXd scatter_f;

  std::size_t node_count() const noexcept { return node_labels.size(); }
  std::size_t branch_count() const noexcept { return branch_labels.size(); }

  Eigen::MatrixXd C() const { return capacity.asDiagonal(); }

  /// Named source values scattered into b (m) and f (n).
  Eigen::VectorXd branch_sources(const Eigen::VectorXd& named) const { return scatter_b * named; }
  Eigen::VectorXd node_sources(const Eigen::VectorXd& named) const { return scatter_f * named; }
};

DaeSystem assemble_dae(const ThermalNetwork& network);

/// Zero-capacity (algebraic) nodes first, capacitive nodes second, each in
/// original order.
struct Partition {
  DaeSystem dae;
  std::vector<std::size_t> algebraic;
  std::vector<std::size_t> capacitive;

  Eigen::MatrixXd K11, K12, K21, K22;
  Eigen::MatrixXd Kb1, Kb2;
  Eigen::VectorXd Cc;
};

Partition partition(const DaeSystem& dae);

/// θ* = -K⁻¹(K_b b + f). Throws SingularSystem when K is singular.
Eigen::VectorXd steady_state(const DaeSystem& dae, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& f);

/// Same, from a vector of named-source values.
Eigen::VectorXd steady_state(const DaeSystem& dae, const Eigen::VectorXd& named_sources);

/// Relative singular-value threshold below which a matrix counts as singular.
inline constexpr double kSingularityTolerance = 1e-10;

/// σ_min < tol · σ_max (an empty matrix is not singular).
bool is_singular(const Eigen::MatrixXd& m, double tol = kSingularityTolerance);

}  // namespace thermnet
