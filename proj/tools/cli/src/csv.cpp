#include "thermnet/cli/csv.hpp"

#include "text.hpp"

namespace thermnet::cli {

std::string emit_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const auto& n : traj.node_labels) out += "," + n;
  for (const auto& b : traj.branch_labels) out += ",q_" + b;
  if (traj.load) out += ",load";
  out += "\n";

  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    out += format_number(traj.times[k]);
    for (Eigen::Index j = 0; j < traj.temperatures.cols(); ++j) {
      out += "," + format_number(traj.temperatures(row, j));
    }
    for (Eigen::Index j = 0; j < traj.flows.cols(); ++j) out += "," + format_number(traj.flows(row, j));
    if (traj.load) out += "," + format_number((*traj.load)(row));
    out += "\n";
  }
  return out;
}

std::string emit_csv(const SweepResult& sweep) {
  std::string out = "dt,peak_load,t_peak,ratio_to_prev\n";
  for (std::size_t i = 0; i < sweep.entries.size(); ++i) {
    const auto& e = sweep.entries[i];
    out += format_number(e.dt) + "," + format_number(e.peak_load) + "," + format_number(e.t_peak) + ",";
    if (i > 0) out += format_number(sweep.ratios[i - 1]);
    out += "\n";
  }
  return out;
}

}  // namespace thermnet::cli
