#include "thermnet/cli/network_file.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "text.hpp"

namespace thermnet::cli {

namespace {

std::string prefix(std::size_t line) {
  return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
}

[[noreturn]] void fail(ParseError::Kind kind, std::size_t line, const std::string& msg) {
  throw ParseError(kind, line, msg);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '.' || c == '-')) return false;
  }
  return true;
}

std::string checked_name(std::string_view s, std::size_t line, const char* what) {
  if (!is_identifier(s)) {
    fail(ParseError::Kind::Syntax, line,
         "invalid " + std::string(what) + " name '" + std::string(s) + "'");
  }
  if (s == "ground") {
    fail(ParseError::Kind::Syntax, line, "'ground' is reserved and cannot name a " +
                                             std::string(what));
  }
  return std::string(s);
}

double number(std::string_view s, std::size_t line, const char* what) {
  const auto v = parse_double(s);
  if (!v) {
    fail(ParseError::Kind::Syntax, line,
         "invalid number '" + std::string(s) + "' for " + what);
  }
  return *v;
}

// key=value; returns nullopt when the token has another key.
std::optional<std::string_view> keyed(std::string_view token, std::string_view key) {
  if (token.size() > key.size() && token.substr(0, key.size()) == key &&
      token[key.size()] == '=') {
    return token.substr(key.size() + 1);
  }
  return std::nullopt;
}

struct PendingBranch {
  std::size_t line;
  std::string name, from, to;
  double conductance;
  std::optional<std::string> source;
};

struct PendingFlow {
  std::size_t line;
  std::string source, node;
};

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : Error(prefix(line) + message), kind_(kind), line_(line) {}

ThermalNetwork parse_network(std::string_view text) {
  ThermalNetwork net;
  std::map<std::string, std::size_t, std::less<>> node_index;
  std::vector<PendingBranch> branches;
  std::vector<PendingFlow> flows;
  std::optional<std::pair<std::size_t, std::string>> output;

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<std::string_view> tok = split_whitespace(line);
    if (tok.empty()) continue;
    const std::string_view kw = tok[0];

    if (kw == "node") {
      if (tok.size() != 3) fail(ParseError::Kind::Syntax, line_no, "expected 'node <name> C=<J/K>'");
      const std::string name = checked_name(tok[1], line_no, "node");
      const auto c = keyed(tok[2], "C");
      if (!c) fail(ParseError::Kind::Syntax, line_no, "expected C=<J/K> after the node name");
      const double cap = number(*c, line_no, "capacity");
      if (cap < 0.0) fail(ParseError::Kind::Syntax, line_no, "capacity must be >= 0");
      if (!node_index.emplace(name, net.nodes.size()).second) {
        fail(ParseError::Kind::DuplicateName, line_no, "node '" + name + "' is already declared");
      }
      net.nodes.push_back(Node{name, cap, {}});
    } else if (kw == "branch") {
      if (tok.size() < 5 || tok.size() > 6) {
        fail(ParseError::Kind::Syntax, line_no,
             "expected 'branch <name> <from> <to> G=<W/K> [T=<source>]'");
      }
      PendingBranch b{line_no, checked_name(tok[1], line_no, "branch"), std::string(tok[2]),
                      std::string(tok[3]), 0.0, std::nullopt};
      if (const auto g = keyed(tok[4], "G")) {
        b.conductance = number(*g, line_no, "conductance");
      } else if (const auto r = keyed(tok[4], "R")) {
        const double res = number(*r, line_no, "resistance");
        if (!(res > 0.0)) fail(ParseError::Kind::Syntax, line_no, "resistance must be > 0");
        b.conductance = 1.0 / res;
      } else {
        fail(ParseError::Kind::Syntax, line_no, "expected G=<W/K> or R=<K/W>");
      }
      if (!(b.conductance > 0.0)) fail(ParseError::Kind::Syntax, line_no, "conductance must be > 0");
      if (tok.size() == 6) {
        const auto t = keyed(tok[5], "T");
        if (!t) fail(ParseError::Kind::Syntax, line_no, "expected T=<source>");
        b.source = checked_name(*t, line_no, "source");
      }
      branches.push_back(std::move(b));
    } else if (kw == "flow") {
      if (tok.size() != 3) fail(ParseError::Kind::Syntax, line_no, "expected 'flow <source> <node>'");
      flows.push_back({line_no, checked_name(tok[1], line_no, "source"), std::string(tok[2])});
    } else if (kw == "output") {
      if (tok.size() != 2) fail(ParseError::Kind::Syntax, line_no, "expected 'output <node>'");
      if (output) {
        fail(ParseError::Kind::Syntax, line_no,
             "second output directive (first on line " + std::to_string(output->first) + ")");
      }
      output.emplace(line_no, std::string(tok[1]));
    } else {
      fail(ParseError::Kind::Syntax, line_no, "unknown directive '" + std::string(kw) + "'");
    }
  }

  auto endpoint = [&](const std::string& name, std::size_t line) {
    if (name == "ground") return Endpoint::ground();
    const auto it = node_index.find(name);
    if (it == node_index.end()) fail(ParseError::Kind::UnknownNode, line, "unknown node '" + name + "'");
    return Endpoint::node(it->second);
  };

  std::set<std::string> branch_names;
  std::set<std::string> temperature_sources;
  for (const auto& b : branches) {
    if (!branch_names.insert(b.name).second) {
      fail(ParseError::Kind::DuplicateName, b.line, "branch '" + b.name + "' is already declared");
    }
    const Endpoint from = endpoint(b.from, b.line);
    const Endpoint to = endpoint(b.to, b.line);
    if (from == to) {
      fail(ParseError::Kind::Syntax, b.line, "branch '" + b.name + "' connects a vertex to itself");
    }
    if ((from.is_ground() || to.is_ground()) && !b.source) {
      fail(ParseError::Kind::GroundWithoutSource, b.line,
           "branch '" + b.name + "' touches ground but has no T=<source>");
    }
    if (b.source) temperature_sources.insert(*b.source);
    net.branches.push_back(Branch{b.name, from, to, b.conductance, b.source});
  }

  std::set<std::string> flow_names;
  for (const auto& f : flows) {
    if (temperature_sources.count(f.source) != 0 || !flow_names.insert(f.source).second) {
      fail(ParseError::Kind::DuplicateName, f.line, "source '" + f.source + "' is already declared");
    }
    const Endpoint at = endpoint(f.node, f.line);
    if (at.is_ground()) fail(ParseError::Kind::Syntax, f.line, "flow sources attach to nodes, not ground");
    net.nodes[at.index].flow_sources.push_back(f.source);
  }

  if (!output) fail(ParseError::Kind::MissingOutput, 0, "no 'output <node>' directive");
  const Endpoint out = endpoint(output->second, output->first);
  if (out.is_ground()) fail(ParseError::Kind::Syntax, output->first, "the output must be a node");
  net.output = out.index;
  return net;
}

std::string render_network(const ThermalNetwork& net) {
  std::string out;
  auto name = [&](Endpoint e) { return e.is_ground() ? std::string("ground") : net.nodes[e.index].name; };
  for (const auto& n : net.nodes) out += "node " + n.name + " C=" + format_number(n.capacity) + "\n";
  for (const auto& b : net.branches) {
    out += "branch " + b.name + " " + name(b.from) + " " + name(b.to) +
           " G=" + format_number(b.conductance);
    if (b.temp_source) out += " T=" + *b.temp_source;
    out += "\n";
  }
  for (const auto& n : net.nodes) {
    for (const auto& f : n.flow_sources) out += "flow " + f + " " + n.name + "\n";
  }
  if (net.output < net.nodes.size()) out += "output " + net.nodes[net.output].name + "\n";
  return out;
}

}  // namespace thermnet::cli
