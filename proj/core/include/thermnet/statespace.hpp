#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "thermnet/dae.hpp"

namespace thermnet {

/// One position of the structural input vector u = [b | f_0 | f_C].
/// Branch slots carry at most one temperature source; node slots carry the
/// sum of every flow source attached to that node.
struct InputSlot {
  enum class Kind { BranchTemperature, NodeFlow };

  Kind kind;
  std::size_t element;               // branch index or node index
  std::vector<std::string> sources;  // empty: identically-zero input
  std::string label;

  bool has_source() const noexcept { return !sources.empty(); }
};

/// Slots in the order b (branch order), f_0 (algebraic nodes), f_C
/// (capacitive nodes).
std::vector<InputSlot> input_slots(const Partition& p);

/// Maps named-source values (ordered as DaeSystem::sources) to slot values.
Eigen::MatrixXd slot_scatter(const std::vector<InputSlot>& slots,
                             const std::vector<Source>& sources);

/// θ̇_C = A θ_C + B u, y = C θ_C + D u with a single output temperature.
struct StateSpace {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::RowVectorXd C;
  Eigen::RowVectorXd D;

  std::vector<std::string> state_labels;
  std::vector<InputSlot> inputs;
  std::string output_label;

  Eigen::Index state_count() const noexcept { return A.rows(); }
  Eigen::Index input_count() const noexcept { return B.cols(); }
};

/// θ_0 = from_states · θ_C + from_inputs · u.
struct AlgebraicMap {
  Eigen::MatrixXd from_states;
  Eigen::MatrixXd from_inputs;
};

/// -K11⁻¹K12 and -K11⁻¹[K_b1 I 0]. Throws DegenerateNetwork if K11 is
/// singular.
AlgebraicMap algebraic_map(const Partition& p);

/// A_S = C_C⁻¹(K22 - K21 K11⁻¹ K12) and the matching B_S over all slots.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> state_equations(const Partition& p);

StateSpace reduce(const Partition& p, std::size_t output_node);
StateSpace reduce(const Partition& p, std::string_view output_node);

/// Reduction with the network's designated output node.
StateSpace reduce(const Partition& p);

struct CompactInputMap {
  std::vector<std::size_t> kept;  // indices into the full slot space
  std::vector<std::string> names;
};

/// Drops every slot without a declared source.
std::pair<StateSpace, CompactInputMap> compact_inputs(const StateSpace& ss);

/// θ_0 = -K11⁻¹(K12 θ_C + K_b1 b + f_0), u given over the full slot space.
Eigen::VectorXd recover_algebraic(const Partition& p, const Eigen::VectorXd& theta_c,
                                  const Eigen::VectorXd& u);

}  // namespace thermnet
