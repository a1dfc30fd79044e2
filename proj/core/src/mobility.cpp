#include "uavllt/mobility.hpp"

#include "uavllt/errors.hpp"
#include "uavllt/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace uavllt {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) {
  if (lo == hi)
    return lo;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool circle_inside(double cx, double cy, double r, const Arena& arena) {
  return cx - r >= arena.x_min && cx + r <= arena.x_max && cy - r >= arena.y_min &&
         cy + r <= arena.y_max;
}

// Center of the turn of radius r tangent to the motion at (x, y, heading).
std::array<double, 2> turn_center(double x, double y, double heading, Direction dir, double r) {
  const double s = sign_of(dir);
  return {x - s * r * std::sin(heading), y + s * r * std::cos(heading)};
}

std::vector<MovementState> allowed_successors(MovementState current) {
  switch (current) {
  case MovementState::Clockwise:
    return {MovementState::Clockwise, MovementState::Straight};
  case MovementState::CounterClockwise:
    return {MovementState::CounterClockwise, MovementState::Straight};
  case MovementState::Straight:
    break;
  }
  return {MovementState::Clockwise, MovementState::CounterClockwise, MovementState::Straight};
}

Direction direction_of(MovementState s) {
  return s == MovementState::Clockwise ? Direction::Clockwise : Direction::CounterClockwise;
}

} // namespace

bool Arena::contains(double x, double y) const noexcept {
  return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
}

double Arena::buffer_depth(double x, double y) const noexcept {
  const double dx = std::max({0.0, (x_min + buffer_width) - x, x - (x_max - buffer_width)});
  const double dy = std::max({0.0, (y_min + buffer_width) - y, y - (y_max - buffer_width)});
  return std::max(dx, dy);
}

bool Arena::in_buffer(double x, double y) const noexcept {
  return contains(x, y) && buffer_depth(x, y) > 0.0;
}

void Arena::validate() const {
  if (!(buffer_width > 0.0))
    throw ConfigError("arena: buffer_width must be positive");
  if (!(x_max - x_min > 2.0 * buffer_width) || !(y_max - y_min > 2.0 * buffer_width))
    throw ConfigError("arena: inner region (arena minus buffer) is empty");
}

void SmoothTurnConfig::validate() const {
  if (!(speed_min > 0.0) || speed_min > speed_max)
    throw ConfigError("smooth turn: speed range must be positive and ordered");
  if (!(radius_min > 0.0) || radius_min > radius_max)
    throw ConfigError("smooth turn: radius range must be positive and ordered");
  if (!(wait_min > 0.0) || wait_min > wait_max)
    throw ConfigError("smooth turn: wait range must be positive and ordered");
  if (max_attempts < 1)
    throw ConfigError("smooth turn: max_attempts must be at least 1");
}

double sample_wait_time(Rng& rng, const SmoothTurnConfig& config) {
  if (config.wait_min > config.wait_max)
    throw ConfigError("wait_min exceeds wait_max");
  return uniform(rng, config.wait_min, config.wait_max);
}

bool transition_allowed(MovementState current, MovementState next) noexcept {
  return !((current == MovementState::Clockwise && next == MovementState::CounterClockwise) ||
           (current == MovementState::CounterClockwise && next == MovementState::Clockwise));
}

Trajectory continue_trajectory(const Trajectory& current, double now, MovementState next,
                               double radius, double speed) {
  const double local = now - current.epoch;
  const Position p = position_at(current, local);
  const double heading = heading_at(current, local);
  if (next == MovementState::Straight)
    return make_straight(p.x, p.y, heading, speed, p.z, now);

  const Direction dir = direction_of(next);
  // the anchor sits a quarter turn behind the velocity direction
  const double phase = heading - sign_of(dir) * kHalfPi;
  const double cx = p.x - radius * std::cos(phase);
  const double cy = p.y - radius * std::sin(phase);
  return make_curve(cx, cy, radius, speed, dir, phase, p.z, now);
}

bool segment_inside(const Trajectory& traj, double duration, const Arena& arena) {
  const Position start = position_at(traj, 0.0);
  const Position end = position_at(traj, duration);
  if (!arena.contains(start.x, start.y) || !arena.contains(end.x, end.y))
    return false;
  if (traj.is_straight())
    return true;

  const auto& c = traj.curve();
  const double sweep = c.angular_velocity() * duration;
  if (std::abs(sweep) >= kTwoPi)
    return circle_inside(c.center_x, c.center_y, c.radius, arena);
  // the arc's extreme coordinates occur at the endpoints or at axis-aligned phases
  const double lo = sweep >= 0.0 ? c.initial_phase : c.initial_phase + sweep;
  const double span = std::abs(sweep);
  for (int k = 0; k < 4; ++k) {
    const double axis = k * kHalfPi;
    if (wrap_two_pi(axis - lo) <= span) {
      const double x = c.center_x + c.radius * std::cos(axis);
      const double y = c.center_y + c.radius * std::sin(axis);
      if (!arena.contains(x, y))
        return false;
    }
  }
  return true;
}

bool escape_available(const Trajectory& traj, double duration, const Arena& arena,
                      double radius_min) {
  const Position end = position_at(traj, duration);
  const double heading = heading_at(traj, duration);
  for (MovementState next : allowed_successors(traj.state())) {
    if (next == MovementState::Straight)
      continue;
    const auto center = turn_center(end.x, end.y, heading, direction_of(next), radius_min);
    if (circle_inside(center[0], center[1], radius_min, arena))
      return true;
  }
  return false;
}

UavState next_trajectory(const UavState& state, const Arena& arena,
                         const SmoothTurnConfig& config, Rng& rng, double now) {
  const Trajectory& current = state.trajectory;
  const double local = now - current.epoch;
  const Position here = position_at(current, local);
  const double heading = heading_at(current, local);
  const bool in_buffer = arena.in_buffer(here.x, here.y);
  const double depth = arena.buffer_depth(here.x, here.y);
  const auto choices = allowed_successors(current.state());

  double speed = state.speed;
  if (config.resample_speed)
    speed = uniform(rng, config.speed_min, config.speed_max);

  auto compliant = [&](const Trajectory& cand, double wait) {
    if (!segment_inside(cand, wait, arena) ||
        !escape_available(cand, wait, arena, config.radius_min))
      return false;
    if (in_buffer) {
      const Position end = position_at(cand, wait);
      if (arena.buffer_depth(end.x, end.y) > depth)
        return false;
    }
    return true;
  };

  auto accept = [&](Trajectory traj, double wait) {
    UavState next = state;
    next.trajectory = std::move(traj);
    next.speed = speed;
    next.next_change_at = now + wait;
    return next;
  };

  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    const auto pick = std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng);
    const MovementState kind = choices[pick];
    const double radius =
        kind == MovementState::Straight ? 0.0 : uniform(rng, config.radius_min, config.radius_max);
    const double wait = sample_wait_time(rng, config);
    Trajectory cand = continue_trajectory(current, now, kind, radius, speed);
    if (compliant(cand, wait))
      return accept(std::move(cand), wait);
  }

  // forced tightest turn; prefer the side whose center is nearer the arena middle
  const double mid_x = 0.5 * (arena.x_min + arena.x_max);
  const double mid_y = 0.5 * (arena.y_min + arena.y_max);
  std::vector<MovementState> turns;
  for (MovementState m : choices)
    if (m != MovementState::Straight)
      turns.push_back(m);
  std::sort(turns.begin(), turns.end(), [&](MovementState l, MovementState r) {
    const auto cl = turn_center(here.x, here.y, heading, direction_of(l), config.radius_min);
    const auto cr = turn_center(here.x, here.y, heading, direction_of(r), config.radius_min);
    return std::hypot(cl[0] - mid_x, cl[1] - mid_y) < std::hypot(cr[0] - mid_x, cr[1] - mid_y);
  });
  const double wait = sample_wait_time(rng, config);
  for (MovementState m : turns) {
    Trajectory cand = continue_trajectory(current, now, m, config.radius_min, speed);
    const auto& c = cand.curve();
    if (circle_inside(c.center_x, c.center_y, c.radius, arena))
      return accept(std::move(cand), wait);
  }
  throw ResampleExhausted("next_trajectory: no boundary-compliant trajectory for UAV " +
                          std::to_string(state.id));
}

UavState initial_uav_state(NodeId id, double altitude, const Arena& arena,
                           const SmoothTurnConfig& config, Rng& rng) {
  UavState s;
  s.id = id;
  s.altitude = altitude;
  s.speed = uniform(rng, config.speed_min, config.speed_max);
  const double x = uniform(rng, arena.x_min + arena.buffer_width, arena.x_max - arena.buffer_width);
  const double y = uniform(rng, arena.y_min + arena.buffer_width, arena.y_max - arena.buffer_width);
  const double heading = uniform(rng, 0.0, kTwoPi);
  s.trajectory = make_straight(x, y, heading, s.speed, altitude, 0.0);
  return next_trajectory(s, arena, config, rng, 0.0);
}

std::string trace_csv_header() {
  return "time_s,uav_id,x_m,y_m,z_m,state,cx_m,cy_m,r_m,heading_rad,speed_mps";
}

std::string trace_csv_row(double time, const UavState& state) {
  const Trajectory& traj = state.trajectory;
  const Position p = position_at(traj, time - traj.epoch);
  std::string row = format_double(time) + ',' + std::to_string(state.id) + ',' +
                    format_double(p.x) + ',' + format_double(p.y) + ',' + format_double(p.z) +
                    ',' + to_string(traj.state()) + ',';
  if (traj.is_curve()) {
    const auto& c = traj.curve();
    row += format_double(c.center_x) + ',' + format_double(c.center_y) + ',' +
           format_double(c.radius) + ",,";
  } else {
    row += ",,," + format_double(traj.straight().heading) + ',';
  }
  row += format_double(traj.speed());
  return row;
}

} // namespace uavllt
