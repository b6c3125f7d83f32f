#include "thermnet/cli/schedule_file.hpp"

#include <set>
#include <string>
#include <vector>

#include "text.hpp"
#include "thermnet/cli/network_file.hpp"

namespace thermnet::cli {

InputSchedule parse_schedule(std::string_view text) {
  using Kind = ParseError::Kind;
  std::vector<std::string> channels;
  std::vector<double> times;
  std::vector<std::vector<double>> rows;
  bool have_header = false;

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');

    if (!have_header) {
      if (cells[0] != "t") throw ParseError(Kind::Syntax, line_no, "schedule header must start with 't'");
      std::set<std::string_view> seen;
      for (std::size_t j = 1; j < cells.size(); ++j) {
        if (cells[j].empty()) throw ParseError(Kind::Syntax, line_no, "empty channel name");
        if (!seen.insert(cells[j]).second) {
          throw ParseError(Kind::DuplicateName, line_no,
                           "duplicate channel '" + std::string(cells[j]) + "'");
        }
        channels.emplace_back(cells[j]);
      }
      have_header = true;
      continue;
    }

    if (cells.size() != channels.size() + 1) {
      throw ParseError(Kind::Syntax, line_no,
                       "expected " + std::to_string(channels.size() + 1) + " fields, found " +
                           std::to_string(cells.size()));
    }
    std::vector<double> row;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto v = parse_double(cells[j]);
      if (!v) {
        throw ParseError(Kind::Syntax, line_no, "invalid number '" + std::string(cells[j]) + "'");
      }
      row.push_back(*v);
    }
    if (!times.empty() && !(row[0] > times.back())) {
      throw ParseError(Kind::Syntax, line_no, "times must be strictly increasing");
    }
    times.push_back(row[0]);
    rows.emplace_back(row.begin() + 1, row.end());
  }

  if (!have_header) throw ParseError(Kind::Syntax, 0, "schedule is empty");
  if (times.empty()) throw ParseError(Kind::Syntax, 0, "schedule has a header but no rows");

  Eigen::MatrixXd values(static_cast<Eigen::Index>(times.size()),
                         static_cast<Eigen::Index>(channels.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < channels.size(); ++j) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return InputSchedule(std::move(times), std::move(channels), std::move(values));
}

}  // namespace thermnet::cli
