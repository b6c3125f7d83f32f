#include "thermnet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <set>

#include "thermnet/errors.hpp"
#include "thermnet/matrix_exponential.hpp"
#include "thermnet/statespace.hpp"

namespace thermnet {

const char* to_string(Integrator method) noexcept {
  switch (method) {
    case Integrator::BackwardEuler:
      return "backward-euler";
    case Integrator::ForwardEuler:
      return "forward-euler";
    case Integrator::ExactHold:
      return "exact-hold";
  }
  return "?";
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Named-source values read from a schedule; missing channels are zero.
class SourceSampler {
 public:
  SourceSampler(const std::vector<Source>& sources, const InputSchedule& schedule,
                const std::set<std::string>& ignored = {})
      : schedule_(&schedule), column_(sources.size()) {
    for (const auto& ch : schedule.channels()) {
      if (ignored.count(ch) != 0) continue;
      const auto it = std::find_if(sources.begin(), sources.end(),
                                   [&](const Source& s) { return s.name == ch; });
      if (it == sources.end()) {
        throw InvalidArgument("schedule channel '" + ch + "' is not a source of the network");
      }
      column_[static_cast<std::size_t>(it - sources.begin())] = schedule.channel(ch);
    }
  }

  void sample(double t, VectorXd& out) const {
    out.resize(idx(column_.size()));
    const Index row = idx(schedule_->row_at(t));
    for (std::size_t k = 0; k < column_.size(); ++k) {
      out(idx(k)) = column_[k] ? schedule_->values()(row, idx(*column_[k])) : 0.0;
    }
  }

 private:
  const InputSchedule* schedule_;
  std::vector<std::optional<std::size_t>> column_;
};

std::size_t step_count(double dt, double start, double end) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
  if (!(end > start)) {
    throw InvalidArgument("simulation horizon is empty; give an end time after the schedule start");
  }
  const double steps = std::round((end - start) / dt);
  if (steps < 1.0) throw InvalidArgument("time step is longer than the horizon");
  if (steps > 1e9) throw InvalidArgument("too many time steps");
  return static_cast<std::size_t>(steps);
}

VectorXd default_initial(const std::vector<Source>& sources, const VectorXd& s0, std::size_t n) {
  double value = 0.0;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    if (sources[k].kind == SourceKind::Temperature) {
      value = s0(idx(k));
      break;
    }
  }
  return VectorXd::Constant(idx(n), value);
}

VectorXd checked_initial(const std::optional<VectorXd>& initial, std::size_t n) {
  if (initial->size() != idx(n)) {
    throw InvalidArgument("initial state needs one temperature per node (" + std::to_string(n) +
                          ")");
  }
  return *initial;
}

// The reduced network written in terms of named sources s:
//   x' = A x + Bs s,  θ_0 = R x + Rs s,  q = g ∘ (-Inc θ + Sb s).
struct LinearModel {
  std::vector<std::size_t> algebraic;
  std::vector<std::size_t> capacitive;
  MatrixXd A, Bs, R, Rs;
  MatrixXd incidence, scatter_b;
  VectorXd conductance;

  explicit LinearModel(const Partition& p)
      : algebraic(p.algebraic),
        capacitive(p.capacitive),
        incidence(p.dae.incidence),
        scatter_b(p.dae.scatter_b),
        conductance(p.dae.conductance) {
    const MatrixXd scatter = slot_scatter(input_slots(p), p.dae.sources);
    auto [a, b] = state_equations(p);
    const AlgebraicMap map = algebraic_map(p);
    A = std::move(a);
    Bs = b * scatter;
    R = map.from_states;
    Rs = map.from_inputs * scatter;
  }

  Index states() const { return idx(capacitive.size()); }

  VectorXd states_of(const VectorXd& theta) const {
    VectorXd x(states());
    for (std::size_t i = 0; i < capacitive.size(); ++i) x(idx(i)) = theta(idx(capacitive[i]));
    return x;
  }

  void temperatures(const VectorXd& x, const VectorXd& s, VectorXd& theta) const {
    theta.resize(idx(algebraic.size() + capacitive.size()));
    for (std::size_t i = 0; i < capacitive.size(); ++i) theta(idx(capacitive[i])) = x(idx(i));
    if (!algebraic.empty()) {
      const VectorXd t0 = R * x + Rs * s;
      for (std::size_t i = 0; i < algebraic.size(); ++i) theta(idx(algebraic[i])) = t0(idx(i));
    }
  }
};

// x_k = Φ x_{k-1} + Γ s, with s taken at the end (implicit) or start of the
// step.
struct Stepper {
  MatrixXd phi, gamma;
  bool implicit_input = true;

  void advance(VectorXd& x, const VectorXd& s_start, const VectorXd& s_end) const {
    if (x.size() == 0) return;
    x = phi * x + gamma * (implicit_input ? s_end : s_start);
  }
};

Stepper backward_euler(const MatrixXd& A, const MatrixXd& Bs, double dt) {
  const Index n = A.rows();
  const Eigen::PartialPivLU<MatrixXd> lu(MatrixXd::Identity(n, n) - dt * A);
  return {lu.inverse(), lu.solve(dt * Bs), true};
}

Stepper forward_euler(const MatrixXd& A, const MatrixXd& Bs, double dt) {
  const Index n = A.rows();
  if (n > 0) {
    const Eigen::EigenSolver<MatrixXd> eig(A, false);
    const double lambda = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (lambda > 0.0) {
      const double bound = 2.0 / lambda;
      if (dt > bound) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "forward euler is unstable at dt = %g s; use dt <= %.6g s (2/|lambda_max|)",
                      dt, bound);
        throw UnstableStep(buf, bound);
      }
    }
  }
  return {MatrixXd::Identity(n, n) + dt * A, dt * Bs, false};
}

Stepper exact_hold(const MatrixXd& A, const MatrixXd& Bs, double dt) {
  const Index n = A.rows();
  const Index ns = Bs.cols();
  MatrixXd aug = MatrixXd::Zero(n + ns, n + ns);
  aug.topLeftCorner(n, n) = A * dt;
  aug.topRightCorner(n, ns) = Bs * dt;
  const MatrixXd e = matrix_exponential(aug);
  return {e.topLeftCorner(n, n), e.topRightCorner(n, ns), false};
}

Stepper make_stepper(Integrator method, const MatrixXd& A, const MatrixXd& Bs, double dt) {
  switch (method) {
    case Integrator::BackwardEuler:
      return backward_euler(A, Bs, dt);
    case Integrator::ForwardEuler:
      return forward_euler(A, Bs, dt);
    case Integrator::ExactHold:
      return exact_hold(A, Bs, dt);
  }
  throw InvalidArgument("unknown integrator");
}

void flows(const LinearModel& model, const VectorXd& theta, const VectorXd& s, VectorXd& q) {
  q = model.conductance.cwiseProduct(model.scatter_b * s - model.incidence * theta);
}

}  // namespace

Trajectory simulate_direct(const Partition& p, const InputSchedule& schedule,
                           const SimulationOptions& options) {
  const LinearModel model(p);
  const SourceSampler sampler(p.dae.sources, schedule);
  const double t0 = schedule.start();
  const std::size_t steps = step_count(options.dt, t0, options.t_end.value_or(schedule.end()));
  const Stepper stepper = make_stepper(options.method, model.A, model.Bs, options.dt);

  const std::size_t n = p.dae.node_count();
  const std::size_t m = p.dae.branch_count();
  Trajectory traj;
  traj.node_labels = p.dae.node_labels;
  traj.branch_labels = p.dae.branch_labels;
  traj.times.resize(steps + 1);
  traj.temperatures.resize(idx(steps + 1), idx(n));
  traj.flows.resize(idx(steps + 1), idx(m));

  VectorXd s_prev, s, theta, q;
  sampler.sample(t0, s);
  const VectorXd initial = options.initial ? checked_initial(options.initial, n)
                                           : default_initial(p.dae.sources, s, n);
  VectorXd x = model.states_of(initial);

  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = t0 + static_cast<double>(k) * options.dt;
    if (k > 0) {
      s_prev = s;
      sampler.sample(t, s);
      stepper.advance(x, s_prev, s);
    }
    model.temperatures(x, s, theta);
    flows(model, theta, s, q);
    traj.times[k] = t;
    traj.temperatures.row(idx(k)) = theta.transpose();
    traj.flows.row(idx(k)) = q.transpose();
  }
  return traj;
}

Trajectory simulate_direct(const ThermalNetwork& network, const InputSchedule& schedule,
                           const SimulationOptions& options) {
  require_valid(network);
  return simulate_direct(partition(assemble_dae(network)), schedule, options);
}

namespace {

// The network with its output node turned into a prescribed boundary.
struct BoundaryProblem {
  ThermalNetwork remaining;
  std::vector<std::size_t> node_map;  // original node -> remaining node (or npos)
  // Remaining sources as  s_rem = from_sources * s + from_output * θ_a.
  MatrixXd from_sources;
  VectorXd from_output;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

BoundaryProblem make_boundary_problem(const ThermalNetwork& net,
                                      const std::vector<Source>& original) {
  const std::size_t out = net.output;
  BoundaryProblem bp;
  bp.node_map.assign(net.node_count(), kNone);
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    if (i == out) continue;
    bp.node_map[i] = bp.remaining.nodes.size();
    bp.remaining.nodes.push_back(net.nodes[i]);
  }

  std::set<std::string> taken;
  for (const auto& s : original) taken.insert(s.name);
  struct Boundary {
    std::string name;
    std::optional<std::string> base;
    double sign;
  };
  std::vector<Boundary> boundaries;

  auto remap = [&](Endpoint e) {
    return e.is_ground() ? e : Endpoint::node(bp.node_map[e.index]);
  };
  for (const auto& br : net.branches) {
    const bool from_out = !br.from.is_ground() && br.from.index == out;
    const bool to_out = !br.to.is_ground() && br.to.index == out;
    if (!from_out && !to_out) {
      Branch copy = br;
      copy.from = remap(br.from);
      copy.to = remap(br.to);
      bp.remaining.branches.push_back(std::move(copy));
      continue;
    }
    const Endpoint other = from_out ? br.to : br.from;
    if (other.is_ground()) continue;  // fully prescribed; only enters the balance
    std::string name = "@" + br.name;
    while (taken.count(name) != 0) name.insert(0, "@");
    taken.insert(name);
    // e = θ_from - θ_to + b: θ_a moves into the source with its sign.
    boundaries.push_back({name, br.temp_source, from_out ? 1.0 : -1.0});
    Branch copy = br;
    copy.from = from_out ? Endpoint::ground() : remap(br.from);
    copy.to = to_out ? Endpoint::ground() : remap(br.to);
    copy.temp_source = name;
    bp.remaining.branches.push_back(std::move(copy));
  }
  if (!bp.remaining.nodes.empty()) bp.remaining.output = 0;

  const std::vector<Source> rem = sources(bp.remaining);
  bp.from_sources = MatrixXd::Zero(idx(rem.size()), idx(original.size()));
  bp.from_output = VectorXd::Zero(idx(rem.size()));
  auto original_index = [&](const std::string& name) {
    for (std::size_t k = 0; k < original.size(); ++k) {
      if (original[k].name == name) return k;
    }
    throw InvalidArgument("internal: source '" + name + "' lost in boundary conversion");
  };
  for (std::size_t r = 0; r < rem.size(); ++r) {
    const auto b = std::find_if(boundaries.begin(), boundaries.end(),
                                [&](const Boundary& x) { return x.name == rem[r].name; });
    if (b == boundaries.end()) {
      bp.from_sources(idx(r), idx(original_index(rem[r].name))) = 1.0;
      continue;
    }
    bp.from_output(idx(r)) = b->sign;
    if (b->base) bp.from_sources(idx(r), idx(original_index(*b->base))) = 1.0;
  }
  return bp;
}

}  // namespace

Trajectory simulate_inverse_load(const ThermalNetwork& network, const InputSchedule& prescribed,
                                 const InputSchedule& other_inputs, const InverseOptions& options) {
  require_valid(network);
  const std::size_t out = network.output;
  const Node& air = network.nodes[out];
  if (std::find(air.flow_sources.begin(), air.flow_sources.end(), options.hvac_source) ==
      air.flow_sources.end()) {
    throw InvalidArgument("HVAC source '" + options.hvac_source +
                          "' is not a flow source on the output node '" + air.name + "'");
  }

  std::size_t output_channel = 0;
  if (const auto ch = prescribed.channel(air.name)) {
    output_channel = *ch;
  } else if (prescribed.channels().size() != 1) {
    throw InvalidArgument("prescribed schedule has no channel named '" + air.name + "'");
  }
  if (other_inputs.channel(options.hvac_source)) {
    throw InvalidArgument("the HVAC source '" + options.hvac_source +
                          "' is computed and cannot be scheduled");
  }

  const DaeSystem dae = assemble_dae(network);
  const std::vector<Source>& original = dae.sources;
  const SourceSampler sampler(original, other_inputs, {air.name});
  const Index n = idx(dae.node_count());
  const Index m = idx(dae.branch_count());

  // Flow sources on the air node other than the HVAC one.
  VectorXd other_at_air = VectorXd::Zero(idx(original.size()));
  for (std::size_t k = 0; k < original.size(); ++k) {
    const auto& name = original[k].name;
    if (original[k].kind == SourceKind::Flow && name != options.hvac_source &&
        std::find(air.flow_sources.begin(), air.flow_sources.end(), name) !=
            air.flow_sources.end()) {
      other_at_air(idx(k)) = 1.0;
    }
  }

  const BoundaryProblem bp = make_boundary_problem(network, original);
  std::optional<LinearModel> model;
  std::optional<Stepper> stepper;
  if (!bp.remaining.nodes.empty()) {
    model.emplace(partition(assemble_dae(bp.remaining)));
    stepper = backward_euler(model->A, model->Bs, options.dt);
  }

  const double t0 = prescribed.start();
  const std::size_t steps =
      step_count(options.dt, t0, options.t_end.value_or(std::max(prescribed.end(), other_inputs.end())));

  Trajectory traj;
  traj.node_labels = dae.node_labels;
  traj.branch_labels = dae.branch_labels;
  traj.times.resize(steps + 1);
  traj.temperatures.resize(idx(steps + 1), n);
  traj.flows.resize(idx(steps + 1), m);
  traj.load = VectorXd(idx(steps + 1));

  VectorXd s;
  sampler.sample(t0, s);
  const VectorXd initial = options.initial ? checked_initial(options.initial, dae.node_count())
                                           : default_initial(original, s, dae.node_count());
  VectorXd x;
  if (model) {
    VectorXd rest(idx(bp.remaining.nodes.size()));
    for (std::size_t i = 0; i < network.node_count(); ++i) {
      if (bp.node_map[i] != kNone) rest(idx(bp.node_map[i])) = initial(idx(i));
    }
    x = model->states_of(rest);
  }

  const VectorXd into_air = dae.incidence.col(idx(out));
  const double c_air = options.air == AirCapacity::Include ? air.capacity : 0.0;
  VectorXd s_rem, theta_rem, theta(n), q;

  // Full temperatures and flows for the given remaining state and inputs.
  auto evaluate = [&](const VectorXd& state, double theta_a) {
    if (model) {
      s_rem = bp.from_sources * s + bp.from_output * theta_a;
      model->temperatures(state, s_rem, theta_rem);
      for (Index i = 0; i < n; ++i) {
        const std::size_t r = bp.node_map[static_cast<std::size_t>(i)];
        if (r != kNone) theta(i) = theta_rem(idx(r));
      }
    }
    theta(idx(out)) = theta_a;
    q = dae.conductance.cwiseProduct(dae.scatter_b * s - dae.incidence * theta);
  };

  double theta_prev = initial(idx(out));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = t0 + static_cast<double>(k) * options.dt;
    double theta_a = theta_prev;
    double storage = 0.0;
    if (k > 0) {
      sampler.sample(t, s);
      theta_a = prescribed.value(output_channel, t);
      storage = c_air * (theta_a - theta_prev) / options.dt;
    }
    evaluate(x, theta_a);
    if (k > 0 && model) {
      stepper->advance(x, s_rem, s_rem);
      evaluate(x, theta_a);
    }
    (*traj.load)(idx(k)) = storage - into_air.dot(q) - other_at_air.dot(s);
    traj.times[k] = t;
    traj.temperatures.row(idx(k)) = theta.transpose();
    traj.flows.row(idx(k)) = q.transpose();
    theta_prev = theta_a;
  }
  return traj;
}

SweepResult timestep_sweep(const ThermalNetwork& network, const InputSchedule& prescribed,
                           const InputSchedule& other_inputs, const std::vector<double>& dts,
                           const InverseOptions& base) {
  if (dts.size() < 2) throw InvalidArgument("time-step ladder needs at least two entries");
  for (std::size_t i = 0; i < dts.size(); ++i) {
    if (!(dts[i] > 0.0)) throw InvalidArgument("time steps must be positive");
    if (i > 0 && !(dts[i] < dts[i - 1])) {
      throw InvalidArgument("time-step ladder must be strictly decreasing");
    }
  }
  const double horizon = base.t_end.value_or(prescribed.start() + 2.0 * dts.front());

  std::vector<std::future<SweepEntry>> runs;
  runs.reserve(dts.size());
  for (double dt : dts) {
    runs.push_back(std::async(std::launch::async, [&, dt] {
      InverseOptions opts = base;
      opts.dt = dt;
      opts.t_end = horizon;
      const Trajectory traj = simulate_inverse_load(network, prescribed, other_inputs, opts);
      Index at = 0;
      const double peak = traj.load->cwiseAbs().maxCoeff(&at);
      return SweepEntry{dt, peak, traj.times[static_cast<std::size_t>(at)]};
    }));
  }

  SweepResult result;
  for (auto& run : runs) result.entries.push_back(run.get());
  for (std::size_t i = 1; i < result.entries.size(); ++i) {
    result.ratios.push_back(result.entries[i].peak_load / result.entries[i - 1].peak_load);
  }
  return result;
}

}  // namespace thermnet
