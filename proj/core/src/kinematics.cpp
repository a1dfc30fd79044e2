#include "uavllt/kinematics.hpp"

#include "uavllt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace uavllt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dist(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

} // namespace

const char* to_string(MovementState s) noexcept {
  switch (s) {
  case MovementState::Clockwise:
    return "CW";
  case MovementState::CounterClockwise:
    return "CCW";
  case MovementState::Straight:
    return "STRAIGHT";
  }
  return "?";
}

double wrap_two_pi(double angle) noexcept {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0)
    r += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2pi
  return r >= kTwoPi ? 0.0 : r;
}

double wrap_pi(double angle) noexcept {
  double r = wrap_two_pi(angle + std::numbers::pi) - std::numbers::pi;
  return std::clamp(r, -std::numbers::pi, std::numbers::pi);
}

MovementState Trajectory::state() const noexcept {
  if (const auto* c = std::get_if<CurveTrajectory>(&shape))
    return c->direction == Direction::Clockwise ? MovementState::Clockwise
                                                : MovementState::CounterClockwise;
  return MovementState::Straight;
}

double Trajectory::speed() const noexcept {
  return std::visit([](const auto& s) { return s.speed; }, shape);
}

double Trajectory::altitude() const noexcept {
  return std::visit([](const auto& s) { return s.altitude; }, shape);
}

double Trajectory::turn_rate() const noexcept {
  if (const auto* c = std::get_if<CurveTrajectory>(&shape))
    return std::abs(c->angular_velocity());
  return 0.0;
}

Position position_at(const Trajectory& traj, double t) {
  if (const auto* c = std::get_if<CurveTrajectory>(&traj.shape)) {
    const double phase = c->initial_phase + c->angular_velocity() * t;
    return {c->center_x + c->radius * std::cos(phase), c->center_y + c->radius * std::sin(phase),
            c->altitude};
  }
  const auto& s = traj.straight();
  return {s.origin_x + s.speed * t * std::cos(s.heading),
          s.origin_y + s.speed * t * std::sin(s.heading), s.altitude};
}

double heading_at(const Trajectory& traj, double t) {
  if (const auto* c = std::get_if<CurveTrajectory>(&traj.shape)) {
    const double phase = c->initial_phase + c->angular_velocity() * t;
    return wrap_two_pi(phase + sign_of(c->direction) * std::numbers::pi / 2.0);
  }
  return traj.straight().heading;
}

Trajectory advance(const Trajectory& traj, double dt) {
  Trajectory out = traj;
  out.epoch = traj.epoch + dt;
  if (auto* c = std::get_if<CurveTrajectory>(&out.shape)) {
    c->initial_phase = wrap_pi(c->initial_phase + c->angular_velocity() * dt);
  } else {
    auto& s = std::get<StraightTrajectory>(out.shape);
    s.origin_x += s.speed * dt * std::cos(s.heading);
    s.origin_y += s.speed * dt * std::sin(s.heading);
  }
  return out;
}

double planar_distance(const Trajectory& a, const Trajectory& b, double t) {
  return dist(position_at(a, t), position_at(b, t));
}

double initial_phase(double center_x, double center_y, const Position& p) {
  const double dx = p.x - center_x;
  const double dy = p.y - center_y;
  if (dx == 0.0 && dy == 0.0)
    throw DegenerateFix("initial_phase: point coincides with the turn center");
  return std::atan2(dy, dx);
}

Trajectory make_curve(double cx, double cy, double radius, double speed, Direction dir,
                      double phase, double altitude, double epoch) {
  return Trajectory{CurveTrajectory{cx, cy, radius, speed, dir, wrap_pi(phase), altitude}, epoch};
}

Trajectory make_straight(double x, double y, double heading, double speed, double altitude,
                         double epoch) {
  return Trajectory{StraightTrajectory{x, y, wrap_two_pi(heading), speed, altitude}, epoch};
}

InferredTrajectory infer_trajectory(const Position& p0, const Position& p1, const Position& p2,
                                    double interval) {
  if (!(interval > 0.0))
    throw DegenerateFix("infer_trajectory: interval must be positive");

  const double d01 = dist(p0, p1);
  const double d12 = dist(p1, p2);
  const double d02 = dist(p0, p2);
  const double longest = std::max({d01, d12, d02});
  if (longest == 0.0 || std::min({d01, d12, d02}) <= 1e-12 * longest)
    throw DegenerateFix("infer_trajectory: fixes coincide");

  const double bx = p1.x - p0.x;
  const double by = p1.y - p0.y;
  const double cx = p2.x - p0.x;
  const double cy = p2.y - p0.y;
  const double cross = bx * cy - by * cx; // twice the signed triangle area

  if (0.5 * std::abs(cross) < 1e-6 * longest * longest) {
    const double speed = d12 / interval;
    const double heading = std::atan2(p2.y - p1.y, p2.x - p1.x);
    return {make_straight(p2.x, p2.y, heading, speed, p2.z), speed};
  }

  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double d = 2.0 * cross;
  const double center_x = p0.x + (cy * b2 - by * c2) / d;
  const double center_y = p0.y + (bx * c2 - cx * b2) / d;
  const double radius = std::hypot(p2.x - center_x, p2.y - center_y);

  // (p1 - p0) x (p2 - p1) has the same sign as the triangle orientation
  const Direction dir = cross > 0.0 ? Direction::CounterClockwise : Direction::Clockwise;
  const double phase1 = initial_phase(center_x, center_y, p1);
  const double phase2 = initial_phase(center_x, center_y, p2);
  const double swept =
      dir == Direction::CounterClockwise ? wrap_two_pi(phase2 - phase1) : wrap_two_pi(phase1 - phase2);
  const double speed = radius * swept / interval;
  return {make_curve(center_x, center_y, radius, speed, dir, phase2, p2.z), speed};
}

} // namespace uavllt
