#include "thermnet/statespace.hpp"

#include <unordered_map>

#include "thermnet/errors.hpp"

namespace thermnet {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '+';
    out += p;
  }
  return out.empty() ? std::string("0") : out;
}

Eigen::PartialPivLU<Eigen::MatrixXd> factor_k11(const Partition& p) {
  if (is_singular(p.K11)) {
    throw DegenerateNetwork(
        "K11 is singular: a group of zero-capacity nodes has no resistive path out");
  }
  return Eigen::PartialPivLU<Eigen::MatrixXd>(p.K11);
}

}  // namespace

std::vector<InputSlot> input_slots(const Partition& p) {
  const DaeSystem& dae = p.dae;
  std::vector<std::vector<std::string>> node_sources(dae.node_count());
  std::vector<std::vector<std::string>> branch_sources(dae.branch_count());
  for (std::size_t s = 0; s < dae.sources.size(); ++s) {
    const auto col = idx(s);
    for (std::size_t k = 0; k < dae.branch_count(); ++k) {
      if (dae.scatter_b(idx(k), col) != 0.0) branch_sources[k].push_back(dae.sources[s].name);
    }
    for (std::size_t l = 0; l < dae.node_count(); ++l) {
      if (dae.scatter_f(idx(l), col) != 0.0) node_sources[l].push_back(dae.sources[s].name);
    }
  }

  std::vector<InputSlot> slots;
  slots.reserve(dae.branch_count() + dae.node_count());
  for (std::size_t k = 0; k < dae.branch_count(); ++k) {
    slots.push_back({InputSlot::Kind::BranchTemperature, k, branch_sources[k],
                     dae.branch_labels[k] + ":" + join(branch_sources[k])});
  }
  auto add_node = [&](std::size_t l) {
    slots.push_back({InputSlot::Kind::NodeFlow, l, node_sources[l],
                     dae.node_labels[l] + ":" + join(node_sources[l])});
  };
  for (auto l : p.algebraic) add_node(l);
  for (auto l : p.capacitive) add_node(l);
  return slots;
}

Eigen::MatrixXd slot_scatter(const std::vector<InputSlot>& slots,
                             const std::vector<Source>& sources) {
  std::unordered_map<std::string, Eigen::Index> column;
  for (std::size_t s = 0; s < sources.size(); ++s) column[sources[s].name] = idx(s);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(idx(slots.size()), idx(sources.size()));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (const auto& name : slots[i].sources) m(idx(i), column.at(name)) = 1.0;
  }
  return m;
}

AlgebraicMap algebraic_map(const Partition& p) {
  const auto n0 = idx(p.algebraic.size());
  const auto nc = idx(p.capacitive.size());
  const auto m = idx(p.dae.branch_count());
  AlgebraicMap map;
  if (n0 == 0) {
    map.from_states = Eigen::MatrixXd::Zero(0, nc);
    map.from_inputs = Eigen::MatrixXd::Zero(0, m + n0 + nc);
    return map;
  }
  const auto lu = factor_k11(p);
  Eigen::MatrixXd feed = Eigen::MatrixXd::Zero(n0, m + n0 + nc);
  feed.leftCols(m) = p.Kb1;
  feed.block(0, m, n0, n0).setIdentity();
  map.from_states = -lu.solve(p.K12);
  map.from_inputs = -lu.solve(feed);
  return map;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> state_equations(const Partition& p) {
  const auto n0 = idx(p.algebraic.size());
  const auto nc = idx(p.capacitive.size());
  const auto m = idx(p.dae.branch_count());

  Eigen::MatrixXd stiffness = p.K22;
  Eigen::MatrixXd input(nc, m + n0 + nc);
  input.leftCols(m) = p.Kb2;
  input.block(0, m, nc, n0).setZero();
  input.rightCols(nc).setIdentity();
  if (n0 > 0) {
    const auto lu = factor_k11(p);
    const Eigen::MatrixXd k11_inv_k12 = lu.solve(p.K12);
    const Eigen::MatrixXd k11_inv_kb1 = lu.solve(p.Kb1);
    const Eigen::MatrixXd k11_inv = lu.solve(Eigen::MatrixXd::Identity(n0, n0));
    stiffness -= p.K21 * k11_inv_k12;
    input.leftCols(m) -= p.K21 * k11_inv_kb1;
    input.block(0, m, nc, n0) = -p.K21 * k11_inv;
  }
  const Eigen::VectorXd inv_c = p.Cc.cwiseInverse();
  return {inv_c.asDiagonal() * stiffness, inv_c.asDiagonal() * input};
}

StateSpace reduce(const Partition& p, std::size_t output_node) {
  if (output_node >= p.dae.node_count()) {
    throw UnknownOutputNode("output node index out of range");
  }
  StateSpace ss;
  std::tie(ss.A, ss.B) = state_equations(p);
  ss.inputs = input_slots(p);
  for (auto l : p.capacitive) ss.state_labels.push_back(p.dae.node_labels[l]);
  ss.output_label = p.dae.node_labels[output_node];

  const auto nc = idx(p.capacitive.size());
  const auto nu = ss.B.cols();
  for (std::size_t i = 0; i < p.capacitive.size(); ++i) {
    if (p.capacitive[i] == output_node) {
      ss.C = Eigen::RowVectorXd::Zero(nc);
      ss.C(idx(i)) = 1.0;
      ss.D = Eigen::RowVectorXd::Zero(nu);
      return ss;
    }
  }
  const AlgebraicMap map = algebraic_map(p);
  for (std::size_t i = 0; i < p.algebraic.size(); ++i) {
    if (p.algebraic[i] == output_node) {
      ss.C = map.from_states.row(idx(i));
      ss.D = map.from_inputs.row(idx(i));
      return ss;
    }
  }
  throw UnknownOutputNode("output node not found in partition");
}

StateSpace reduce(const Partition& p, std::string_view output_node) {
  for (std::size_t l = 0; l < p.dae.node_count(); ++l) {
    if (p.dae.node_labels[l] == output_node) return reduce(p, l);
  }
  throw UnknownOutputNode("unknown output node '" + std::string(output_node) + "'");
}

StateSpace reduce(const Partition& p) { return reduce(p, p.dae.output); }

std::pair<StateSpace, CompactInputMap> compact_inputs(const StateSpace& ss) {
  CompactInputMap map;
  for (std::size_t i = 0; i < ss.inputs.size(); ++i) {
    if (ss.inputs[i].has_source()) {
      map.kept.push_back(i);
      map.names.push_back(ss.inputs[i].label);
    }
  }
  StateSpace out;
  out.A = ss.A;
  out.C = ss.C;
  out.state_labels = ss.state_labels;
  out.output_label = ss.output_label;
  out.B.resize(ss.B.rows(), idx(map.kept.size()));
  out.D.resize(idx(map.kept.size()));
  for (std::size_t j = 0; j < map.kept.size(); ++j) {
    out.B.col(idx(j)) = ss.B.col(idx(map.kept[j]));
    out.D(idx(j)) = ss.D(idx(map.kept[j]));
    out.inputs.push_back(ss.inputs[map.kept[j]]);
  }
  return {std::move(out), std::move(map)};
}

Eigen::VectorXd recover_algebraic(const Partition& p, const Eigen::VectorXd& theta_c,
                                  const Eigen::VectorXd& u) {
  const auto n0 = idx(p.algebraic.size());
  const auto nc = idx(p.capacitive.size());
  const auto m = idx(p.dae.branch_count());
  if (theta_c.size() != nc || u.size() != m + n0 + nc) {
    throw InvalidArgument("recover_algebraic: dimension mismatch");
  }
  if (n0 == 0) return Eigen::VectorXd(0);
  const auto lu = factor_k11(p);
  const Eigen::VectorXd rhs = p.K12 * theta_c + p.Kb1 * u.head(m) + u.segment(m, n0);
  return -lu.solve(rhs);
}

}  // namespace thermnet
