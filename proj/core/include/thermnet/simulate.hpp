#pragma once

// Time-domain engines. Inputs are zero-order held; sample 0 of every
// trajectory is the initial state.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thermnet/dae.hpp"
#include "thermnet/netmodel.hpp"
#include "thermnet/schedule.hpp"

namespace thermnet {

enum class Integrator {
  BackwardEuler,  // input held at the end of each step
  ForwardEuler,   // input held at the start of each step
  ExactHold,      // exact solution under the start-of-step input
};

const char* to_string(Integrator method) noexcept;

/// Whether the air-node storage term enters the load balance.
enum class AirCapacity { Include, Neglect };

struct SimulationOptions {
  double dt = 0.0;
  /// Defaults to the last schedule time.
  std::optional<double> t_end;
  Integrator method = Integrator::BackwardEuler;
  /// One temperature per node; defaults to every node at the first
  /// temperature source's value at the start time (0 without one).
  std::optional<Eigen::VectorXd> initial;
};

struct InverseOptions {
  double dt = 0.0;
  std::optional<double> t_end;
  std::string hvac_source;
  AirCapacity air = AirCapacity::Include;
  std::optional<Eigen::VectorXd> initial;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::string> node_labels;
  std::vector<std::string> branch_labels;
  Eigen::MatrixXd temperatures;  // samples x nodes
  Eigen::MatrixXd flows;         // samples x branches
  std::optional<Eigen::VectorXd> load;

  std::size_t size() const noexcept { return times.size(); }
};

/// Channels of `schedule` must name sources of the network; sources
/// without a channel are held at zero. Throws UnstableStep when forward
/// Euler exceeds 2 / |λ_max|.
Trajectory simulate_direct(const Partition& p, const InputSchedule& schedule,
                           const SimulationOptions& options);

Trajectory simulate_direct(const ThermalNetwork& network, const InputSchedule& schedule,
                           const SimulationOptions& options);

/// HVAC load that holds the output node on the prescribed trajectory.
///
/// The output temperature is read from the `prescribed` channel named after
/// the output node (or its only channel). The output node becomes a
/// boundary of the remaining network, which advances by backward Euler.
/// Step k advances that network with θ_a[k] and the inputs at t_k, then
/// balances the air node with the flows of the new state:
///
///   load[k] = C_a (θ_a[k] - θ_a[k-1]) / Δt - q_in[k] - Σ f_other[k]
///
/// where f_other are the output node's flow sources besides the HVAC one.
/// Throws DegenerateNetwork when the remaining network has a floating
/// zero-capacity cluster.
Trajectory simulate_inverse_load(const ThermalNetwork& network, const InputSchedule& prescribed,
                                 const InputSchedule& other_inputs, const InverseOptions& options);

struct SweepEntry {
  double dt = 0.0;
  double peak_load = 0.0;  // max |load|
  double t_peak = 0.0;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  /// ratios[i] = peak[i + 1] / peak[i].
  std::vector<double> ratios;
};

/// One inverse run per step in `dts` (strictly decreasing, at least two),
/// each over the same horizon: `base.t_end` if set, otherwise twice the
/// largest step. Runs are evaluated concurrently.
SweepResult timestep_sweep(const ThermalNetwork& network, const InputSchedule& prescribed,
                           const InputSchedule& other_inputs, const std::vector<double>& dts,
                           const InverseOptions& base);

}  // namespace thermnet
