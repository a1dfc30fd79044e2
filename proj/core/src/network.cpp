#include "uavllt/network.hpp"

#include "uavllt/errors.hpp"
#include "uavllt/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace uavllt {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ordered_json seconds_or_inf(double v) {
  if (std::isfinite(v))
    return v;
  return "inf";
}

Position position_now(const UavState& s, double now) {
  return position_at(s.trajectory, now - s.trajectory.epoch);
}

double distance_now(const UavState& a, const UavState& b, double now) {
  const Position pa = position_now(a, now);
  const Position pb = position_now(b, now);
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

enum class EventKind { TrajectoryChange = 0, Hello = 1, Check = 2, Snapshot = 3 };

struct Event {
  double time;
  EventKind kind;
  NodeId uav;
  std::uint64_t index; // tick / hello counter
};

struct EventLater {
  bool operator()(const Event& l, const Event& r) const {
    if (l.time != r.time)
      return l.time > r.time;
    if (l.kind != r.kind)
      return static_cast<int>(l.kind) > static_cast<int>(r.kind);
    return l.uav > r.uav;
  }
};

class Run {
public:
  Run(const SimulationParams& params, MobilityPlan& plan) : params_(params), plan_(plan) {}

  SimulationOutput execute();

private:
  using PairKey = std::pair<NodeId, NodeId>;

  static PairKey key(NodeId x, NodeId y) { return x < y ? PairKey{x, y} : PairKey{y, x}; }

  void log(double t, ordered_json body) {
    ordered_json line;
    line["t"] = t;
    for (auto& [k, v] : body.items())
      line[k] = v;
    logged_.push_back({t, logged_.size(), line.dump()});
  }

  std::vector<PairKey> live_links_of(NodeId id) const {
    std::vector<PairKey> out;
    for (const auto& [k, idx] : live_)
      if (k.first == id || k.second == id)
        out.push_back(k);
    return out;
  }

  /// Terminates the link if the pair is out of range at `now`; true if still up.
  bool check_link(const PairKey& k, double now);
  void establish(NodeId i, NodeId j, double now);
  void on_trajectory_change(NodeId id, double now);
  void on_hello(NodeId id, std::uint64_t index, double now);
  void on_snapshot(double now);

  const SimulationParams& params_;
  MobilityPlan& plan_;
  std::vector<UavState> states_;
  std::vector<std::uint64_t> hello_seq_;
  std::vector<bool> pending_hello_;
  std::vector<std::vector<bool>> heard_; // heard_[receiver][sender]
  std::map<PairKey, std::size_t> live_;
  std::map<PairKey, double> last_checked_;
  std::priority_queue<Event, std::vector<Event>, EventLater> queue_;

  struct Logged {
    double t;
    std::size_t order;
    std::string text;
  };
  std::vector<Logged> logged_;
  SimulationOutput out_;
};

bool Run::check_link(const PairKey& k, double now) {
  const UavState& a = states_[k.first];
  const UavState& b = states_[k.second];
  const double range = params_.link.range;
  if (distance_now(a, b, now) <= range) {
    last_checked_[k] = now;
    return true;
  }
  double lo = last_checked_.at(k);
  double hi = now;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (distance_now(a, b, mid) > range ? hi : lo) = mid;
  }
  const double broke_at = 0.5 * (lo + hi);

  LinkRecord& link = out_.links[live_.at(k)];
  link.terminated_at = broke_at;
  const double predicted = link.predicted_break();
  ordered_json e;
  e["event"] = "link_down";
  e["a"] = k.first;
  e["b"] = k.second;
  e["established_at"] = link.established_at;
  e["predicted_break"] = seconds_or_inf(predicted);
  e["prediction_error"] = seconds_or_inf(std::abs(predicted - broke_at));
  log(broke_at, std::move(e));

  live_.erase(k);
  last_checked_.erase(k);
  heard_[k.first][k.second] = false;
  heard_[k.second][k.first] = false;
  return false;
}

void Run::establish(NodeId i, NodeId j, double now) {
  const PairKey k = key(i, j);
  LinkRecord link;
  link.a = k.first;
  link.b = k.second;
  link.established_at = now;
  recompute_llt(link, states_[k.first], states_[k.second], now, params_.link);
  live_[k] = out_.links.size();
  last_checked_[k] = now;

  ordered_json e;
  e["event"] = "link_up";
  e["a"] = k.first;
  e["b"] = k.second;
  e["case"] = to_string(link.current.case_used);
  e["llt"] = seconds_or_inf(link.current.llt.value_or(kInf));
  e["predicted_break"] = seconds_or_inf(link.predicted_break());
  log(now, std::move(e));
  out_.links.push_back(std::move(link));
}

void Run::on_trajectory_change(NodeId id, double now) {
  const auto touching = live_links_of(id);
  for (const auto& k : touching)
    check_link(k, now);

  const MovementState before = states_[id].trajectory.state();
  states_[id] = plan_.next(states_[id], now);
  const UavState& s = states_[id];
  out_.segments[id].push_back(s.trajectory);
  ++out_.summary.trajectory_changes;

  ordered_json e;
  e["event"] = "traj_change";
  e["uav"] = id;
  e["from"] = to_string(before);
  e["to"] = to_string(s.trajectory.state());
  e["next_change_at"] = seconds_or_inf(s.next_change_at);
  log(now, std::move(e));
  out_.trace.push_back(trace_csv_row(now, s));

  for (const auto& k : live_links_of(id)) {
    LinkRecord& link = out_.links[live_.at(k)];
    recompute_llt(link, states_[k.first], states_[k.second], now, params_.link);
    ++out_.summary.recomputes;
    ordered_json r;
    r["event"] = "llt_recompute";
    r["a"] = k.first;
    r["b"] = k.second;
    r["source"] = "change";
    r["case"] = to_string(link.current.case_used);
    r["llt"] = seconds_or_inf(link.current.llt.value_or(kInf));
    r["predicted_break"] = seconds_or_inf(link.predicted_break());
    log(now, std::move(r));
  }
  pending_hello_[id] = true;

  if (s.next_change_at <= params_.duration)
    queue_.push({s.next_change_at, EventKind::TrajectoryChange, id, 0});
}

void Run::on_hello(NodeId id, std::uint64_t index, double now) {
  const HelloMessage hello = make_hello(states_[id], now, hello_seq_[id]++);
  ordered_json e;
  e["event"] = "hello";
  e["sender"] = id;
  e["seq"] = hello.sequence;
  e["state"] = to_string(hello.movement_state);
  e["x"] = hello.position.x;
  e["y"] = hello.position.y;
  e["z"] = hello.position.z;
  if (hello.center_x) {
    e["cx"] = *hello.center_x;
    e["cy"] = *hello.center_y;
    e["r"] = *hello.radius;
  }
  if (hello.heading)
    e["heading"] = *hello.heading;
  e["speed"] = hello.speed;
  log(now, std::move(e));
  out_.trace.push_back(trace_csv_row(now, states_[id]));

  const auto n = static_cast<NodeId>(states_.size());
  for (NodeId j = 0; j < n; ++j) {
    if (j == id)
      continue;
    const bool reached = distance_now(states_[id], states_[j], now) <= params_.link.range;
    heard_[j][id] = reached;
    if (reached && heard_[id][j] && !live_.contains(key(id, j)))
      establish(id, j, now);
  }

  if (pending_hello_[id]) {
    // neighbours learn of the change from this Hello; logged for comparison only
    for (const auto& k : live_links_of(id)) {
      if (!check_link(k, now))
        continue;
      LinkRecord scratch;
      recompute_llt(scratch, states_[k.first], states_[k.second], now, params_.link);
      ordered_json r;
      r["event"] = "llt_recompute";
      r["a"] = k.first;
      r["b"] = k.second;
      r["source"] = "hello";
      r["case"] = to_string(scratch.current.case_used);
      r["llt"] = seconds_or_inf(scratch.current.llt.value_or(kInf));
      r["predicted_break"] = seconds_or_inf(scratch.predicted_break());
      log(now, std::move(r));
    }
    pending_hello_[id] = false;
  }

  const double offset = params_.hello_interval * id / static_cast<double>(states_.size());
  const double next = offset + static_cast<double>(index + 1) * params_.hello_interval;
  if (next <= params_.duration)
    queue_.push({next, EventKind::Hello, id, index + 1});
}

void Run::on_snapshot(double now) {
  std::vector<PairKey> keys;
  for (const auto& [k, idx] : live_)
    keys.push_back(k);
  for (const auto& k : keys)
    check_link(k, now);

  LinkGraph<NodeId> g;
  g.snapshot_time = now;
  for (NodeId i = 0; i < states_.size(); ++i)
    g.add_node(i);
  for (const auto& [k, idx] : live_) {
    const double remaining = out_.links[idx].predicted_break() - now;
    g.add_edge(k.first, k.second, std::max(0.0, remaining));
  }
  out_.snapshots.push_back(std::move(g));
}

SimulationOutput Run::execute() {
  const std::size_t n = params_.uav_count;
  out_.segments.resize(n);
  heard_.assign(n, std::vector<bool>(n, false));
  hello_seq_.assign(n, 0);
  pending_hello_.assign(n, false);

  for (NodeId i = 0; i < n; ++i) {
    states_.push_back(plan_.initial(i));
    out_.segments[i].push_back(states_[i].trajectory);
    out_.trace.push_back(trace_csv_row(0.0, states_[i]));
    if (states_[i].next_change_at <= params_.duration)
      queue_.push({states_[i].next_change_at, EventKind::TrajectoryChange, i, 0});
    const double offset = params_.hello_interval * i / static_cast<double>(n);
    if (offset <= params_.duration)
      queue_.push({offset, EventKind::Hello, i, 0});
  }
  if (params_.dt_check <= params_.duration)
    queue_.push({params_.dt_check, EventKind::Check, 0, 1});
  if (params_.snapshot_interval <= params_.duration)
    queue_.push({params_.snapshot_interval, EventKind::Snapshot, 0, 1});

  while (!queue_.empty()) {
    const Event ev = queue_.top();
    queue_.pop();
    switch (ev.kind) {
    case EventKind::TrajectoryChange:
      on_trajectory_change(ev.uav, ev.time);
      break;
    case EventKind::Hello:
      on_hello(ev.uav, ev.index, ev.time);
      break;
    case EventKind::Check: {
      std::vector<PairKey> keys;
      for (const auto& [k, idx] : live_)
        keys.push_back(k);
      for (const auto& k : keys)
        check_link(k, ev.time);
      const double next = static_cast<double>(ev.index + 1) * params_.dt_check;
      if (next <= params_.duration)
        queue_.push({next, EventKind::Check, 0, ev.index + 1});
      break;
    }
    case EventKind::Snapshot: {
      on_snapshot(ev.time);
      const double next = static_cast<double>(ev.index + 1) * params_.snapshot_interval;
      if (next <= params_.duration)
        queue_.push({next, EventKind::Snapshot, 0, ev.index + 1});
      break;
    }
    }
  }

  std::stable_sort(logged_.begin(), logged_.end(), [](const Logged& l, const Logged& r) {
    return l.t != r.t ? l.t < r.t : l.order < r.order;
  });
  for (auto& l : logged_)
    out_.events.push_back(std::move(l.text));

  auto& sum = out_.summary;
  sum.links = out_.links.size();
  double err_total = 0.0;
  std::size_t err_count = 0;
  for (const auto& link : out_.links) {
    if (!link.terminated_at)
      continue;
    ++sum.breaks;
    if (!link.current.bounded()) {
      ++sum.unpredicted_breaks;
      continue;
    }
    err_total += std::abs(link.predicted_break() - *link.terminated_at);
    ++err_count;
  }
  sum.mean_abs_prediction_error = err_count ? err_total / static_cast<double>(err_count) : 0.0;
  return std::move(out_);
}

} // namespace

HelloMessage make_hello(const UavState& state, double now, std::uint64_t sequence) {
  HelloMessage h;
  h.sender = state.id;
  h.timestamp = now;
  h.position = position_now(state, now);
  h.movement_state = state.trajectory.state();
  h.speed = state.trajectory.speed();
  h.sequence = sequence;
  if (state.trajectory.is_curve()) {
    const auto& c = state.trajectory.curve();
    h.center_x = c.center_x;
    h.center_y = c.center_y;
    h.radius = c.radius;
  } else {
    h.heading = state.trajectory.straight().heading;
  }
  return h;
}

Trajectory trajectory_from_hello(const HelloMessage& h) {
  if (h.movement_state == MovementState::Straight) {
    if (!h.heading)
      throw Error("hello: straight movement without heading");
    return make_straight(h.position.x, h.position.y, *h.heading, h.speed, h.position.z,
                         h.timestamp);
  }
  if (!h.center_x || !h.center_y || !h.radius)
    throw Error("hello: turning movement without center/radius");
  const Direction dir = h.movement_state == MovementState::Clockwise ? Direction::Clockwise
                                                                     : Direction::CounterClockwise;
  const double phase = initial_phase(*h.center_x, *h.center_y, h.position);
  return make_curve(*h.center_x, *h.center_y, *h.radius, h.speed, dir, phase, h.position.z,
                    h.timestamp);
}

void recompute_llt(LinkRecord& link, const UavState& a, const UavState& b, double now,
                   const LinkParams& params) {
  const Trajectory ta = trajectory_from_hello(make_hello(a, now, 0));
  const Trajectory tb = trajectory_from_hello(make_hello(b, now, 0));
  LltOptions options;
  options.horizon = params.horizon;
  link.current = compute_llt(ta, tb, params.range, options);
  link.history.emplace_back(now, link.current);
}

SmoothTurnPlan::SmoothTurnPlan(Arena arena, SmoothTurnConfig config, std::uint64_t seed,
                               std::size_t count, double altitude_base, double altitude_step)
    : arena_(arena), config_(config), altitude_base_(altitude_base),
      altitude_step_(altitude_step) {
  rngs_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    rngs_.emplace_back(seq);
  }
}

UavState SmoothTurnPlan::initial(NodeId id) {
  return initial_uav_state(id, altitude_base_ + altitude_step_ * id, arena_, config_,
                           rngs_.at(id));
}

UavState SmoothTurnPlan::next(const UavState& state, double now) {
  return next_trajectory(state, arena_, config_, rngs_.at(state.id), now);
}

ScriptedPlan::ScriptedPlan(std::vector<ScriptedUav> uavs)
    : uavs_(std::move(uavs)), cursor_(uavs_.size(), 0) {}

UavState ScriptedPlan::initial(NodeId id) {
  const ScriptedUav& u = uavs_.at(id);
  UavState s;
  s.id = id;
  s.trajectory = u.initial;
  s.speed = u.initial.speed();
  s.altitude = u.initial.altitude();
  s.next_change_at = u.changes.empty() ? kInf : u.changes.front().time;
  return s;
}

UavState ScriptedPlan::next(const UavState& state, double now) {
  const ScriptedUav& u = uavs_.at(state.id);
  std::size_t& c = cursor_.at(state.id);
  if (c >= u.changes.size())
    throw Error("scripted plan: no change left for UAV " + std::to_string(state.id));
  const ScriptedChange& change = u.changes[c++];
  UavState s = state;
  if (const auto* t = std::get_if<Trajectory>(&change.change)) {
    s.trajectory = *t;
    s.trajectory.epoch = now;
  } else {
    const auto& m = std::get<ManeuverChange>(change.change);
    s.trajectory = continue_trajectory(state.trajectory, now, m.next, m.radius, state.speed);
  }
  s.speed = s.trajectory.speed();
  s.next_change_at = c < u.changes.size() ? u.changes[c].time : kInf;
  return s;
}

NetworkSimulator::NetworkSimulator(SimulationParams params, std::unique_ptr<MobilityPlan> plan)
    : params_(params), plan_(std::move(plan)) {
  if (params_.uav_count < 2)
    throw ConfigError("simulation needs at least two UAVs");
}

SimulationOutput NetworkSimulator::run() {
  Run run(params_, *plan_);
  return run.execute();
}

SimulationParams simulation_params(const ScenarioConfig& config) {
  SimulationParams p;
  p.uav_count = config.uav_count;
  p.link.range = config.transmission_range;
  p.link.horizon = config.horizon;
  p.hello_interval = config.hello_interval;
  p.duration = config.duration;
  p.dt_check = config.oracle_dt;
  p.snapshot_interval = config.snapshot_interval;
  return p;
}

std::unique_ptr<MobilityPlan> make_mobility_plan(const ScenarioConfig& config) {
  if (!config.scripted.empty())
    return std::make_unique<ScriptedPlan>(config.scripted);
  return std::make_unique<SmoothTurnPlan>(config.arena, config.mobility, config.seed,
                                          config.uav_count, config.altitude_base,
                                          config.altitude_step);
}

SimulationOutput run_simulation(const ScenarioConfig& config) {
  config.validate();
  NetworkSimulator sim(simulation_params(config), make_mobility_plan(config));
  return sim.run();
}

std::string SimulationSummary::to_string() const {
  std::ostringstream os;
  os << "links=" << links << " breaks=" << breaks << " recomputes=" << recomputes
     << " trajectory_changes=" << trajectory_changes << " unpredicted_breaks=" << unpredicted_breaks
     << " mean_abs_prediction_error_s=" << format_double(mean_abs_prediction_error);
  return os.str();
}

std::string snapshot_csv_header() { return "t_s,node_a,node_b,llt_s"; }

std::string snapshot_csv(const LinkGraph<NodeId>& graph) {
  std::string s = snapshot_csv_header() + '\n';
  for (const auto& [k, llt] : graph.edges)
    s += format_double(graph.snapshot_time) + ',' + std::to_string(k.first) + ',' +
         std::to_string(k.second) + ',' + format_double(llt) + '\n';
  return s;
}

void write_simulation_outputs(const SimulationOutput& out, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "snapshots");
  auto open = [](const fs::path& p) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f)
      throw Error("cannot write " + p.string());
    return f;
  };
  {
    auto f = open(dir / "events.jsonl");
    for (const auto& line : out.events)
      f << line << '\n';
  }
  {
    auto f = open(dir / "trace.csv");
    f << trace_csv_header() << '\n';
    for (const auto& row : out.trace)
      f << row << '\n';
  }
  for (std::size_t i = 0; i < out.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%05zu.csv", i + 1);
    auto f = open(dir / "snapshots" / name);
    f << snapshot_csv(out.snapshots[i]);
  }
  {
    auto f = open(dir / "summary.txt");
    f << out.summary.to_string() << '\n';
  }
}

} // namespace uavllt
