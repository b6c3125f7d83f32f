#include "thermnet/dae.hpp"

#include "thermnet/errors.hpp"

namespace thermnet {

namespace {

Eigen::MatrixXd take(const Eigen::MatrixXd& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
    }
  }
  return out;
}

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& m, const std::vector<std::size_t>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

}  // namespace

bool is_singular(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return false;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  return !(largest > 0.0) || smallest < tol * largest;
}

DaeSystem assemble_dae(const ThermalNetwork& network) {
  const IncidenceMatrix inc = build_incidence(network);
  const ParameterMatrices params = build_parameter_matrices(network);

  DaeSystem dae;
  dae.incidence = inc.entries;
  dae.conductance = params.conductance;
  dae.capacity = params.capacity;
  const Eigen::MatrixXd AtG = inc.entries.transpose() * params.conductance.asDiagonal();
  dae.Kb = AtG;
  dae.K = -AtG * inc.entries;
  dae.node_labels = inc.col_labels;
  dae.branch_labels = inc.row_labels;
  dae.output = network.output;
  dae.sources = params.sources;
  dae.scatter_b = params.scatter_b;
  dae.scatter_f = params.scatter_f;
  return dae;
}

Partition partition(const DaeSystem& dae) {
  Partition p;
  p.dae = dae;
  for (std::size_t l = 0; l < dae.node_count(); ++l) {
    if (dae.capacity(static_cast<Eigen::Index>(l)) == 0.0) {
      p.algebraic.push_back(l);
    } else {
      p.capacitive.push_back(l);
    }
  }
  p.K11 = take(dae.K, p.algebraic, p.algebraic);
  p.K12 = take(dae.K, p.algebraic, p.capacitive);
  p.K21 = take(dae.K, p.capacitive, p.algebraic);
  p.K22 = take(dae.K, p.capacitive, p.capacitive);
  p.Kb1 = take_rows(dae.Kb, p.algebraic);
  p.Kb2 = take_rows(dae.Kb, p.capacitive);
  p.Cc.resize(static_cast<Eigen::Index>(p.capacitive.size()));
  for (std::size_t i = 0; i < p.capacitive.size(); ++i) {
    p.Cc(static_cast<Eigen::Index>(i)) = dae.capacity(static_cast<Eigen::Index>(p.capacitive[i]));
  }
  return p;
}

Eigen::VectorXd steady_state(const DaeSystem& dae, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& f) {
  if (b.size() != static_cast<Eigen::Index>(dae.branch_count()) ||
      f.size() != static_cast<Eigen::Index>(dae.node_count())) {
    throw InvalidArgument("steady_state: source vector dimensions do not match the network");
  }
  if (is_singular(dae.K)) {
    throw SingularSystem("steady_state: K is singular (no resistive path to ground)");
  }
  return -dae.K.partialPivLu().solve(dae.Kb * b + f);
}

Eigen::VectorXd steady_state(const DaeSystem& dae, const Eigen::VectorXd& named_sources) {
  if (named_sources.size() != static_cast<Eigen::Index>(dae.sources.size())) {
    throw InvalidArgument("steady_state: expected one value per named source");
  }
  return steady_state(dae, dae.branch_sources(named_sources), dae.node_sources(named_sources));
}

}  // namespace thermnet
