#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace thermnet::testing {

ThermalNetwork building(double air_capacity) {
  ThermalNetwork net;
  net.nodes = {
      {"so", 0.0, {"Qo"}},
      {"si", 0.0, {"Qi"}},
      {"a", air_capacity, {"Qg", "Qhvac"}},
      {"w", 4e6, {}},
  };
  const auto n = [](std::size_t i) { return Endpoint::node(i); };
  net.branches = {
      {"Rv", Endpoint::ground(), n(2), 38.3, "To"},
      {"Rco", Endpoint::ground(), n(0), 250.0, "To"},
      {"Rw1", n(0), n(3), 2.9, std::nullopt},
      {"Rw2", n(3), n(1), 2.9, std::nullopt},
      {"Rci", n(1), n(2), 125.0, std::nullopt},
  };
  net.output = 2;
  return net;
}

std::string data_file(const std::string& name) { return std::string(THERMNET_TEST_DATA_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ThermalNetwork random_network(std::uint64_t seed, const RandomNetworkOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto log_uniform = [&](double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); };
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto chance = [&](double p) { return uniform(0.0, 1.0) < p; };

  ThermalNetwork net;
  const std::size_t n = pick(opt.min_nodes, opt.max_nodes);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = chance(opt.zero_capacity_probability) ? 0.0 : log_uniform(1e3, 1e7);
    net.nodes.push_back({"n" + std::to_string(i), c, {}});
  }
  if (std::none_of(net.nodes.begin(), net.nodes.end(), [](const Node& x) { return x.capacity > 0.0; })) {
    net.nodes[pick(0, n - 1)].capacity = log_uniform(1e3, 1e7);
  }

  const std::size_t pool = pick(1, 3);
  auto source = [&] { return "T" + std::to_string(pick(0, pool - 1)); };
  auto add = [&](std::size_t a, std::size_t b) {  // vertex n is ground
    Branch br;
    br.name = "b" + std::to_string(net.branches.size());
    br.from = a == n ? Endpoint::ground() : Endpoint::node(a);
    br.to = b == n ? Endpoint::ground() : Endpoint::node(b);
    // Ground branches leave ground so their source is the ambient temperature.
    if (br.to.is_ground() || (!br.from.is_ground() && chance(0.5))) std::swap(br.from, br.to);
    br.conductance = log_uniform(1.0, 300.0);
    if (br.from.is_ground() || br.to.is_ground() || (opt.internal_sources && chance(0.2))) {
      br.temp_source = source();
    }
    net.branches.push_back(std::move(br));
  };

  // Spanning tree over nodes + ground, node 0 hanging from ground.
  add(0, n);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = pick(0, i);  // i means ground
    add(i, parent == i ? n : parent);
  }
  const std::size_t extra = pick(0, n);
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t a = pick(0, n);
    std::size_t b = pick(0, n);
    if (a == b) continue;
    if (a == n && b == n) continue;
    add(a, b);
  }

  std::size_t flow = 0;
  for (auto& node : net.nodes) {
    if (chance(0.5)) node.flow_sources.push_back("Q" + std::to_string(flow++));
    if (chance(0.15)) node.flow_sources.push_back("Q" + std::to_string(flow++));
  }
  net.output = pick(0, n - 1);
  return net;
}

}  // namespace thermnet::testing
