#include "thermnet/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "thermnet/errors.hpp"

namespace thermnet {

InputSchedule::InputSchedule(std::vector<double> times, std::vector<std::string> channels,
                             Eigen::MatrixXd values)
    : times_(std::move(times)), channels_(std::move(channels)), values_(std::move(values)) {
  if (times_.empty()) throw InvalidArgument("schedule has no rows");
  if (values_.rows() != static_cast<Eigen::Index>(times_.size()) ||
      values_.cols() != static_cast<Eigen::Index>(channels_.size())) {
    throw InvalidArgument("schedule values do not match its time grid and channel list");
  }
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!std::isfinite(times_[i])) throw InvalidArgument("schedule time is not finite");
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw InvalidArgument("schedule times must be strictly increasing (row " +
                            std::to_string(i + 1) + ")");
    }
  }
  std::set<std::string> seen;
  for (const auto& c : channels_) {
    if (!seen.insert(c).second) throw InvalidArgument("duplicate schedule channel '" + c + "'");
  }
}

InputSchedule InputSchedule::constant(std::vector<std::string> channels,
                                      const std::vector<double>& values, double start) {
  Eigen::MatrixXd row(1, static_cast<Eigen::Index>(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j) row(0, static_cast<Eigen::Index>(j)) = values[j];
  return InputSchedule({start}, std::move(channels), std::move(row));
}

std::optional<std::size_t> InputSchedule::channel(std::string_view name) const {
  for (std::size_t j = 0; j < channels_.size(); ++j) {
    if (channels_[j] == name) return j;
  }
  return std::nullopt;
}

std::size_t InputSchedule::row_at(double t) const {
  const double slack = 1e-9 * std::max(1.0, std::abs(t));
  const auto it = std::upper_bound(times_.begin(), times_.end(), t + slack);
  if (it == times_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(times_.begin(), it) - 1);
}

}  // namespace thermnet
