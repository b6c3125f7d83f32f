#pragma once

// Lumped thermal RC network: nodes carry capacities and flow sources,
// branches carry conductances and temperature sources. The ground vertex is
// the temperature reference and has no column in the incidence matrix.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace thermnet {

/// A branch endpoint: either a node index or the ground vertex.
struct Endpoint {
  static constexpr std::size_t kGround = std::numeric_limits<std::size_t>::max();

  std::size_t index = kGround;

  static constexpr Endpoint ground() noexcept { return Endpoint{}; }
  static constexpr Endpoint node(std::size_t i) noexcept { return Endpoint{i}; }

  constexpr bool is_ground() const noexcept { return index == kGround; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Node {
  std::string name;
  double capacity = 0.0;  // J/K
  std::vector<std::string> flow_sources;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Branch {
  std::string name;
  Endpoint from;
  Endpoint to;
  double conductance = 0.0;  // W/K
  std::optional<std::string> temp_source;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Node order fixes the temperature index space, branch order the flow index
/// space. `output` indexes `nodes`.
struct ThermalNetwork {
  std::vector<Node> nodes;
  std::vector<Branch> branches;
  std::size_t output = 0;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t branch_count() const noexcept { return branches.size(); }

  std::optional<std::size_t> find_node(std::string_view name) const;
  std::optional<std::size_t> find_branch(std::string_view name) const;

  friend bool operator==(const ThermalNetwork&, const ThermalNetwork&) = default;
};

enum class SourceKind { Temperature, Flow };

/// A named input channel. A temperature source may drive several branches
/// (e.g. the outdoor temperature on both ventilation and wall branches); flow
/// source names are unique network-wide.
struct Source {
  std::string name;
  SourceKind kind;

  friend bool operator==(const Source&, const Source&) = default;
};

/// Named sources in canonical order: temperature sources in order of first
/// use along the branch list, then flow sources in node order.
std::vector<Source> sources(const ThermalNetwork& network);

struct Violation {
  std::string element;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Structure covers per-element rules (names, values, endpoints); Full adds
/// the topological ones (grounded and connected).
enum class ValidationScope { Structure, Full };

/// Checks every invariant in scope; never throws.
ValidationReport validate(const ThermalNetwork& network,
                          ValidationScope scope = ValidationScope::Full);

/// Throws InvalidNetwork carrying the first violation when `validate` fails.
void require_valid(const ThermalNetwork& network,
                   ValidationScope scope = ValidationScope::Full);

struct IncidenceMatrix {
  Eigen::MatrixXd entries;              // branches x nodes, values in {-1,0,+1}
  std::vector<std::string> row_labels;  // branch names
  std::vector<std::string> col_labels;  // node names
};

/// +1 where the branch flow enters a node (its `to` end), -1 where it leaves.
/// Requires structural validity only; an ungrounded network still has an
/// incidence matrix (its K is then singular).
IncidenceMatrix build_incidence(const ThermalNetwork& network);

struct TemperatureSlot {
  std::string source;
  std::size_t branch;
};

struct FlowSlot {
  std::string source;
  std::size_t node;
};

/// G and C as diagonals, plus the placement of each named source.
/// `scatter_b` (m x n_sources) and `scatter_f` (n x n_sources) map a vector
/// of named-source values, ordered as `sources`, onto full b and f.
struct ParameterMatrices {
  Eigen::VectorXd conductance;
  Eigen::VectorXd capacity;
  std::vector<TemperatureSlot> b_template;
  std::vector<FlowSlot> f_template;
  std::vector<Source> sources;
  Eigen::MatrixXd scatter_b;
  Eigen::MatrixXd scatter_f;

  Eigen::MatrixXd G() const { return conductance.asDiagonal(); }
  Eigen::MatrixXd C() const { return capacity.asDiagonal(); }
};

ParameterMatrices build_parameter_matrices(const ThermalNetwork& network);

}  // namespace thermnet
