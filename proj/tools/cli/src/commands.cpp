#include "thermnet/cli/commands.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "text.hpp"
#include "thermnet/cli/csv.hpp"
#include "thermnet/cli/network_file.hpp"
#include "thermnet/cli/schedule_file.hpp"
#include "thermnet/dae.hpp"
#include "thermnet/simulate.hpp"
#include "thermnet/statespace.hpp"
#include "thermnet/transfer.hpp"

namespace thermnet::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ThermalNetwork load_network(const std::string& path) {
  try {
    return parse_network(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), path + ": " + e.what());
  }
}

InputSchedule load_schedule(const std::string& path) {
  try {
    return parse_schedule(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

std::string cell(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void print_matrix(std::ostream& out, const std::string& title, const std::vector<std::string>& rows,
                  const std::vector<std::string>& cols, const Eigen::MatrixXd& m) {
  out << title << "\n";
  std::size_t w0 = 0;
  for (const auto& r : rows) w0 = std::max(w0, r.size());
  std::vector<std::size_t> width(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    width[j] = std::max<std::size_t>(cols[j].size(), 12);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      width[j] = std::max(width[j], cell(m(i, static_cast<Eigen::Index>(j))).size());
    }
  }
  out << std::string(w0, ' ');
  for (std::size_t j = 0; j < cols.size(); ++j) out << "  " << std::setw(static_cast<int>(width[j])) << cols[j];
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(w0)) << rows[i] << std::right;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out << "  " << std::setw(static_cast<int>(width[j]))
          << cell(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    out << "\n";
  }
  out << "\n";
}

std::vector<std::string> slot_labels(const std::vector<InputSlot>& slots) {
  std::vector<std::string> out;
  for (const auto& s : slots) out.push_back(s.label);
  return out;
}

StateSpace build_state_space(const ThermalNetwork& net, bool compact) {
  require_valid(net);
  StateSpace ss = reduce(partition(assemble_dae(net)));
  if (compact) ss = compact_inputs(ss).first;
  return ss;
}

std::string coefficient_list(const Polynomial& p) {
  std::string out = "[";
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) out += ", ";
    out += format_number(p[static_cast<std::size_t>(k)]);
  }
  if (p.is_zero()) out += "0";
  return out + "]";
}

std::vector<double> parse_ladder(const std::string& list) {
  std::vector<double> dts;
  for (auto token : split(list, ',')) {
    const auto v = parse_double(token);
    if (!v) throw CLI::ValidationError("--dts", "invalid step '" + std::string(token) + "'");
    dts.push_back(*v);
  }
  return dts;
}

Integrator parse_method(const std::string& name) {
  if (name == "backward-euler") return Integrator::BackwardEuler;
  if (name == "forward-euler") return Integrator::ForwardEuler;
  return Integrator::ExactHold;
}

struct Flags {
  std::string network;
  bool compact = false;
  std::string hvac;
  std::string schedule;
  std::string temp;
  double dt = 0.0;
  std::string method = "backward-euler";
  std::optional<double> horizon;
  std::optional<double> initial;
  std::string out;
  bool neglect_air = false;
  bool all_inputs = false;
  std::string dts;
  double wmin = 1e-7;
  double wmax = 1e-1;
  int points = 50;
};

std::optional<Eigen::VectorXd> uniform_initial(const Flags& f, const ThermalNetwork& net) {
  if (!f.initial) return std::nullopt;
  return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(net.node_count()), *f.initial);
}

std::optional<double> end_time(const Flags& f, const InputSchedule& s) {
  if (!f.horizon) return std::nullopt;
  return s.start() + *f.horizon;
}

int cmd_check(const Flags& f, std::ostream& out) {
  const ValidationReport report = validate(load_network(f.network));
  for (const auto& v : report.violations) out << v.element << ": " << v.message << "\n";
  return report.ok() ? kExitOk : kExitModelError;
}

int cmd_dae(const Flags& f, std::ostream& out) {
  const ThermalNetwork net = load_network(f.network);
  require_valid(net);
  const DaeSystem dae = assemble_dae(net);
  print_matrix(out, "C [J/K]", dae.node_labels, {"C"}, dae.capacity);
  print_matrix(out, "K [W/K]", dae.node_labels, dae.node_labels, dae.K);
  print_matrix(out, "Kb [W/K]", dae.node_labels, dae.branch_labels, dae.Kb);
  return kExitOk;
}

int cmd_ss(const Flags& f, std::ostream& out) {
  const StateSpace ss = build_state_space(load_network(f.network), f.compact);
  const auto inputs = slot_labels(ss.inputs);
  print_matrix(out, "A", ss.state_labels, ss.state_labels, ss.A);
  print_matrix(out, "B", ss.state_labels, inputs, ss.B);
  print_matrix(out, "C", {ss.output_label}, ss.state_labels, ss.C);
  print_matrix(out, "D", {ss.output_label}, inputs, ss.D);
  return kExitOk;
}

int cmd_tf(const Flags& f, std::ostream& out) {
  const TransferMatrix tfm = transfer_matrix(build_state_space(load_network(f.network), f.compact));
  out << "output " << tfm.output_label << "\n";
  out << "den " << coefficient_list(tfm.denominator) << "\n";
  for (std::size_t k = 0; k < tfm.size(); ++k) {
    const auto& h = tfm.entries[k];
    out << "H" << k + 1 << " " << tfm.input_labels[k] << "\n";
    out << "  num " << coefficient_list(h.num()) << "\n";
    out << "  den " << coefficient_list(h.den()) << "\n";
    out << "  " << h.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const TransferMatrix tfm = transfer_matrix(build_state_space(load_network(f.network), true));
  const LoadTransferSet set = load_transfer_set(tfm, f.hvac);
  std::vector<std::array<std::string, 3>> rows{{"input", "forward", "load"}};
  std::size_t other = 0;
  for (std::size_t k = 0; k < tfm.size(); ++k) {
    std::string load = "-";
    if (k != set.hvac_slot) load = to_string(set.from_inputs[other++].properness);
    rows.push_back({tfm.input_labels[k], to_string(classify(tfm.entries[k])), load});
  }
  for (const auto& p : set.pass_through) rows.push_back({p.input, "-", to_string(p.properness)});
  rows.push_back({set.from_output.input + " (prescribed)", "-", to_string(set.from_output.properness)});

  std::array<std::size_t, 3> w{};
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < 3; ++j) w[j] = std::max(w[j], r[j].size());
  }
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(w[0])) << r[0] << "  "
        << std::setw(static_cast<int>(w[1])) << r[1] << "  " << r[2] << std::right << "\n";
  }
  return kExitOk;
}

int cmd_sim(const Flags& f, std::ostream& out) {
  const ThermalNetwork net = load_network(f.network);
  const InputSchedule schedule = load_schedule(f.schedule);
  SimulationOptions opts;
  opts.dt = f.dt;
  opts.t_end = end_time(f, schedule);
  opts.method = parse_method(f.method);
  opts.initial = uniform_initial(f, net);
  write_output(f.out, emit_csv(simulate_direct(net, schedule, opts)), out);
  return kExitOk;
}

InverseOptions inverse_options(const Flags& f, const ThermalNetwork& net, const InputSchedule& s) {
  InverseOptions opts;
  opts.dt = f.dt;
  opts.t_end = end_time(f, s);
  opts.hvac_source = f.hvac;
  opts.air = f.neglect_air ? AirCapacity::Neglect : AirCapacity::Include;
  opts.initial = uniform_initial(f, net);
  return opts;
}

int cmd_load(const Flags& f, std::ostream& out) {
  const ThermalNetwork net = load_network(f.network);
  const InputSchedule temp = load_schedule(f.temp);
  const Trajectory traj = simulate_inverse_load(net, temp, temp, inverse_options(f, net, temp));
  write_output(f.out, emit_csv(traj), out);
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  const ThermalNetwork net = load_network(f.network);
  const InputSchedule temp = load_schedule(f.temp);
  const SweepResult sweep =
      timestep_sweep(net, temp, temp, parse_ladder(f.dts), inverse_options(f, net, temp));
  write_output(f.out, emit_csv(sweep), out);
  return kExitOk;
}

int cmd_freq(const Flags& f, std::ostream& out) {
  if (!(f.wmin > 0.0) || !(f.wmax >= f.wmin)) {
    throw CLI::ValidationError("--wmin/--wmax", "need 0 < wmin <= wmax");
  }
  const TransferMatrix tfm = transfer_matrix(build_state_space(load_network(f.network), !f.all_inputs));
  std::string text = "omega";
  for (const auto& label : tfm.input_labels) text += ",mag[" + label + "],phase_deg[" + label + "]";
  text += "\n";
  for (int i = 0; i < f.points; ++i) {
    const double frac = f.points == 1 ? 0.0 : static_cast<double>(i) / (f.points - 1);
    const double w = f.wmin * std::pow(f.wmax / f.wmin, frac);
    text += format_number(w);
    for (const auto& h : tfm.entries) {
      const std::complex<double> v = h.evaluate({0.0, w});
      text += "," + format_number(std::abs(v)) + "," +
              format_number(std::arg(v) * 180.0 / std::numbers::pi);
    }
    text += "\n";
  }
  write_output(f.out, text, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal RC network analysis: state space, transfer functions, simulation"};
  app.name("thermnet");
  app.require_subcommand(1);
  Flags f;

  auto network_arg = [&](CLI::App* sub) {
    sub->add_option("network", f.network, "network description file")->required();
  };
  auto out_arg = [&](CLI::App* sub) { sub->add_option("--out", f.out, "output file (default stdout)"); };

  auto* check = app.add_subcommand("check", "validate a network and print every violation");
  network_arg(check);
  auto* dae = app.add_subcommand("dae", "print C, K and Kb");
  network_arg(dae);
  auto* ss = app.add_subcommand("ss", "print the reduced state-space matrices");
  network_arg(ss);
  ss->add_flag("--compact", f.compact, "drop inputs without a source");
  auto* tf = app.add_subcommand("tf", "print the transfer matrix entries");
  network_arg(tf);
  tf->add_flag("--compact", f.compact, "drop inputs without a source");
  auto* cls = app.add_subcommand("classify", "properness of the forward and load transfer functions");
  network_arg(cls);
  cls->add_option("--hvac", f.hvac, "HVAC flow source")->required();

  auto* sim = app.add_subcommand("sim", "direct simulation, trajectory CSV");
  network_arg(sim);
  sim->add_option("--sched", f.schedule, "input schedule CSV")->required();
  sim->add_option("--dt", f.dt, "time step [s]")->required()->check(CLI::PositiveNumber);
  sim->add_option("--method", f.method, "integrator")
      ->check(CLI::IsMember({"backward-euler", "forward-euler", "exact-hold"}));
  sim->add_option("--horizon", f.horizon, "duration after the first schedule time [s]")
      ->check(CLI::PositiveNumber);
  sim->add_option("--initial", f.initial, "uniform initial temperature");
  out_arg(sim);

  auto inverse_args = [&](CLI::App* sub) {
    network_arg(sub);
    sub->add_option("--hvac", f.hvac, "HVAC flow source on the output node")->required();
    sub->add_option("--temp", f.temp, "schedule CSV with the prescribed output temperature")
        ->required();
    sub->add_option("--horizon", f.horizon, "duration after the first schedule time [s]")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--neglect-air-capacity", f.neglect_air, "drop the air storage term");
    sub->add_option("--initial", f.initial, "uniform initial temperature");
    out_arg(sub);
  };
  auto* load = app.add_subcommand("load", "inverse simulation, trajectory CSV with the load");
  inverse_args(load);
  load->add_option("--dt", f.dt, "time step [s]")->required()->check(CLI::PositiveNumber);
  auto* sweep = app.add_subcommand("sweep", "peak load for a decreasing ladder of time steps");
  inverse_args(sweep);
  sweep->add_option("--dts", f.dts, "comma-separated time steps [s], strictly decreasing")
      ->required();

  auto* freq = app.add_subcommand("freq", "magnitude and phase of every transfer entry");
  network_arg(freq);
  freq->add_option("--wmin", f.wmin, "lowest angular frequency [rad/s]");
  freq->add_option("--wmax", f.wmax, "highest angular frequency [rad/s]");
  freq->add_option("--points", f.points, "log-spaced grid size")->check(CLI::PositiveNumber);
  freq->add_flag("--all-inputs", f.all_inputs, "keep inputs without a source");
  out_arg(freq);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "thermnet: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(f, out);
    if (dae->parsed()) return cmd_dae(f, out);
    if (ss->parsed()) return cmd_ss(f, out);
    if (tf->parsed()) return cmd_tf(f, out);
    if (cls->parsed()) return cmd_classify(f, out);
    if (sim->parsed()) return cmd_sim(f, out);
    if (load->parsed()) return cmd_load(f, out);
    if (sweep->parsed()) return cmd_sweep(f, out);
    if (freq->parsed()) return cmd_freq(f, out);
  } catch (const CLI::ValidationError& e) {
    err << "thermnet: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "thermnet: error: " << e.what() << "\n";
    return kExitModelError;
  }
  return kExitUsage;
}

}  // namespace thermnet::cli
