#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace thermnet {

/// Named input channels sampled on a strictly increasing time grid, held
/// constant from each row until the next (zero-order hold).
class InputSchedule {
 public:
  /// `values` has one row per time and one column per channel.
  InputSchedule(std::vector<double> times, std::vector<std::string> channels,
                Eigen::MatrixXd values);

  /// A single-row schedule starting at `start`.
  static InputSchedule constant(std::vector<std::string> channels, const std::vector<double>& values,
                                double start = 0.0);

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<std::string>& channels() const noexcept { return channels_; }
  const Eigen::MatrixXd& values() const noexcept { return values_; }

  double start() const noexcept { return times_.front(); }
  double end() const noexcept { return times_.back(); }

  std::optional<std::size_t> channel(std::string_view name) const;

  /// Row in effect at t: the last row whose time is <= t (within a relative
  /// 1e-9 slack so grid points land on their rows). Rows before the first
  /// time resolve to row 0.
  std::size_t row_at(double t) const;

  double value(std::size_t channel, double t) const {
    return values_(static_cast<Eigen::Index>(row_at(t)), static_cast<Eigen::Index>(channel));
  }

 private:
  std::vector<double> times_;
  std::vector<std::string> channels_;
  Eigen::MatrixXd values_;
};

}  // namespace thermnet
