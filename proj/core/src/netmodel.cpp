#include "thermnet/netmodel.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "thermnet/errors.hpp"

namespace thermnet {

std::optional<std::size_t> ThermalNetwork::find_node(std::string_view name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ThermalNetwork::find_branch(std::string_view name) const {
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<Source> sources(const ThermalNetwork& network) {
  std::vector<Source> out;
  std::set<std::string> seen;
  for (const auto& br : network.branches) {
    if (br.temp_source && seen.insert(*br.temp_source).second) {
      out.push_back({*br.temp_source, SourceKind::Temperature});
    }
  }
  for (const auto& node : network.nodes) {
    for (const auto& f : node.flow_sources) {
      if (seen.insert(f).second) out.push_back({f, SourceKind::Flow});
    }
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ValidationReport validate(const ThermalNetwork& network, ValidationScope scope) {
  ValidationReport report;
  auto add = [&](const std::string& element, std::string message) {
    report.violations.push_back({element, std::move(message)});
  };

  const std::size_t n = network.node_count();

  std::set<std::string> node_names;
  for (const auto& node : network.nodes) {
    if (node.name.empty()) add(node.name, "node has an empty name");
    if (!node_names.insert(node.name).second) add(node.name, "duplicate node name");
    if (!std::isfinite(node.capacity) || node.capacity < 0.0) {
      add(node.name, "capacity must be finite and >= 0");
    }
  }

  std::set<std::string> branch_names;
  std::set<std::string> temperature_names;
  for (const auto& br : network.branches) {
    if (!branch_names.insert(br.name).second) add(br.name, "duplicate branch name");
    if (node_names.count(br.name) != 0) add(br.name, "branch name collides with a node name");
    if (!std::isfinite(br.conductance) || br.conductance <= 0.0) {
      add(br.name, "conductance must be finite and > 0");
    }
    const bool from_ok = br.from.is_ground() || br.from.index < n;
    const bool to_ok = br.to.is_ground() || br.to.index < n;
    if (!from_ok) add(br.name, "endpoint 'from' does not resolve to a node");
    if (!to_ok) add(br.name, "endpoint 'to' does not resolve to a node");
    if (br.from.is_ground() && br.to.is_ground()) {
      add(br.name, "both endpoints are ground");
    } else if (br.from == br.to) {
      add(br.name, "branch connects a node to itself");
    }
    if ((br.from.is_ground() || br.to.is_ground()) && !br.temp_source) {
      add(br.name, "ground branch has no temperature source");
    }
    if (br.temp_source) temperature_names.insert(*br.temp_source);
  }

  std::set<std::string> flow_names;
  for (const auto& node : network.nodes) {
    for (const auto& f : node.flow_sources) {
      if (!flow_names.insert(f).second) add(f, "duplicate flow source name");
      if (temperature_names.count(f) != 0) {
        add(f, "name used for both a temperature and a flow source");
      }
    }
  }
  for (const auto& name : temperature_names) {
    if (node_names.count(name) != 0 || branch_names.count(name) != 0) {
      add(name, "source name collides with a node or branch name");
    }
  }
  for (const auto& name : flow_names) {
    if (node_names.count(name) != 0 || branch_names.count(name) != 0) {
      add(name, "source name collides with a node or branch name");
    }
  }

  if (n == 0) {
    add("", "network has no nodes");
  } else if (network.output >= n) {
    add("output", "output node does not resolve");
  }

  if (scope == ValidationScope::Structure) return report;

  // Connectivity over nodes plus the ground vertex (index n).
  DisjointSets sets(n + 1);
  bool grounded = false;
  for (const auto& br : network.branches) {
    const bool from_ok = br.from.is_ground() || br.from.index < n;
    const bool to_ok = br.to.is_ground() || br.to.index < n;
    if (!from_ok || !to_ok) continue;
    const std::size_t a = br.from.is_ground() ? n : br.from.index;
    const std::size_t b = br.to.is_ground() ? n : br.to.index;
    if (a == n || b == n) grounded = true;
    sets.unite(a, b);
  }
  if (n > 0 && !grounded) add("ground", "no branch touches ground");
  if (grounded) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sets.find(i) != sets.find(n)) {
        add(network.nodes[i].name, "node is not connected to ground");
      }
    }
  }
  return report;
}

void require_valid(const ThermalNetwork& network, ValidationScope scope) {
  const auto report = validate(network, scope);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string what = "invalid network";
    if (!v.element.empty()) what += ": " + v.element;
    what += ": " + v.message;
    throw InvalidNetwork(what);
  }
}

IncidenceMatrix build_incidence(const ThermalNetwork& network) {
  require_valid(network, ValidationScope::Structure);
  const auto m = static_cast<Eigen::Index>(network.branch_count());
  const auto n = static_cast<Eigen::Index>(network.node_count());
  IncidenceMatrix inc;
  inc.entries = Eigen::MatrixXd::Zero(m, n);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& br = network.branches[static_cast<std::size_t>(k)];
    if (!br.to.is_ground()) inc.entries(k, static_cast<Eigen::Index>(br.to.index)) = 1.0;
    if (!br.from.is_ground()) inc.entries(k, static_cast<Eigen::Index>(br.from.index)) = -1.0;
    inc.row_labels.push_back(br.name);
  }
  for (const auto& node : network.nodes) inc.col_labels.push_back(node.name);
  return inc;
}

ParameterMatrices build_parameter_matrices(const ThermalNetwork& network) {
  require_valid(network, ValidationScope::Structure);
  ParameterMatrices p;
  const auto m = static_cast<Eigen::Index>(network.branch_count());
  const auto n = static_cast<Eigen::Index>(network.node_count());
  p.conductance.resize(m);
  p.capacity.resize(n);
  for (Eigen::Index k = 0; k < m; ++k) {
    p.conductance(k) = network.branches[static_cast<std::size_t>(k)].conductance;
  }
  for (Eigen::Index l = 0; l < n; ++l) {
    p.capacity(l) = network.nodes[static_cast<std::size_t>(l)].capacity;
  }

  p.sources = sources(network);
  std::unordered_map<std::string, Eigen::Index> column;
  for (std::size_t i = 0; i < p.sources.size(); ++i) {
    column[p.sources[i].name] = static_cast<Eigen::Index>(i);
  }
  const auto ns = static_cast<Eigen::Index>(p.sources.size());
  p.scatter_b = Eigen::MatrixXd::Zero(m, ns);
  p.scatter_f = Eigen::MatrixXd::Zero(n, ns);

  for (std::size_t k = 0; k < network.branch_count(); ++k) {
    const auto& br = network.branches[k];
    if (!br.temp_source) continue;
    p.b_template.push_back({*br.temp_source, k});
    p.scatter_b(static_cast<Eigen::Index>(k), column.at(*br.temp_source)) = 1.0;
  }
  for (std::size_t l = 0; l < network.node_count(); ++l) {
    for (const auto& f : network.nodes[l].flow_sources) {
      p.f_template.push_back({f, l});
      p.scatter_f(static_cast<Eigen::Index>(l), column.at(f)) = 1.0;
    }
  }
  return p;
}

}  // namespace thermnet
