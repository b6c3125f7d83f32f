#pragma once

// Line-oriented network description:
//
//   node <name> C=<J/K>
//   branch <name> <from> <to> G=<W/K>|R=<K/W> [T=<source>]
//   flow <source> <node>
//   output <node>
//
// `ground` names the reference vertex; `#` starts a comment. Declaration
// order fixes the node, branch and source orders.

#include <cstddef>
#include <string>
#include <string_view>

#include "thermnet/errors.hpp"
#include "thermnet/netmodel.hpp"

namespace thermnet::cli {

class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownNode, DuplicateName, MissingOutput, GroundWithoutSource };

  /// line == 0 for faults that belong to no single line.
  ParseError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

ThermalNetwork parse_network(std::string_view text);

/// Text that parses back to an equal network.
std::string render_network(const ThermalNetwork& network);

}  // namespace thermnet::cli
