#pragma once

#include <cstdint>
#include <string>

#include "thermnet/netmodel.hpp"

namespace thermnet::testing {

/// The single-zone building of the worked example, built in code: nodes
/// so, si, a, w; branches Rv, Rco, Rw1, Rw2, Rci; flows Qo, Qi, Qg, Qhvac.
ThermalNetwork building(double air_capacity = 82e3);

/// Absolute path of a shipped data file.
std::string data_file(const std::string& name);

std::string read_text(const std::string& path);

struct RandomNetworkOptions {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 12;
  double zero_capacity_probability = 0.35;
  /// Temperature sources on node-to-node branches as well as ground ones.
  bool internal_sources = false;
};

/// Connected, grounded network with building-like magnitudes (capacities
/// 1e3..1e7 J/K, conductances 1..300 W/K). Every ground branch starts at
/// ground and carries a temperature source; interior branches get a random
/// orientation. At least one node is capacitive.
ThermalNetwork random_network(std::uint64_t seed, const RandomNetworkOptions& options = {});

}  // namespace thermnet::testing
