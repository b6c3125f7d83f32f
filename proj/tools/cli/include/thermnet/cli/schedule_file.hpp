#pragma once

#include <string_view>

#include "thermnet/schedule.hpp"

namespace thermnet::cli {

/// CSV with header `t,<channel>...` and one row of numbers per time.
/// Blank lines and `#` comments are skipped. Faults raise ParseError
/// carrying the line number.
InputSchedule parse_schedule(std::string_view text);

}  // namespace thermnet::cli
