#pragma once

#include <string>

#include "thermnet/simulate.hpp"

namespace thermnet::cli {

/// Columns: t, one per node (declaration order), q_<branch> per branch,
/// then load when present. Numbers carry 17 significant digits.
std::string emit_csv(const Trajectory& trajectory);

/// dt,peak_load,t_peak,ratio_to_prev (empty ratio on the first row).
std::string emit_csv(const SweepResult& sweep);

}  // namespace thermnet::cli
