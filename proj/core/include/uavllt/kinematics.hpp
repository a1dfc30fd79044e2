#pragma once

#include <numbers>
#include <variant>

namespace uavllt {

struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0; // altitude
};

/// Turn direction; the numeric value is the sign of the angular velocity.
enum class Direction : int { Clockwise = -1, CounterClockwise = +1 };

constexpr double sign_of(Direction d) noexcept { return static_cast<int>(d); }

enum class MovementState { Clockwise, CounterClockwise, Straight };

const char* to_string(MovementState s) noexcept;

/// Uniform circular motion about (center_x, center_y).
struct CurveTrajectory {
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 1.0;
  double speed = 0.0;
  Direction direction = Direction::CounterClockwise;
  double initial_phase = 0.0; // angle of the anchor point about the center
  double altitude = 0.0;

  /// Signed angular velocity V * Dir / R.
  double angular_velocity() const noexcept { return speed * sign_of(direction) / radius; }
};

/// Uniform straight motion; heading is measured from the +X axis.
struct StraightTrajectory {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double heading = 0.0; // [0, 2pi)
  double speed = 0.0;
  double altitude = 0.0;
};

struct Trajectory {
  std::variant<CurveTrajectory, StraightTrajectory> shape;
  double epoch = 0.0; // absolute time at which the parameters are anchored

  bool is_curve() const noexcept { return std::holds_alternative<CurveTrajectory>(shape); }
  bool is_straight() const noexcept { return std::holds_alternative<StraightTrajectory>(shape); }
  const CurveTrajectory& curve() const { return std::get<CurveTrajectory>(shape); }
  const StraightTrajectory& straight() const { return std::get<StraightTrajectory>(shape); }

  MovementState state() const noexcept;
  double speed() const noexcept;
  double altitude() const noexcept;
  /// Largest |angular velocity| of the motion (0 for straight lines).
  double turn_rate() const noexcept;
};

/// Position `t` seconds after the trajectory epoch. Exact trigonometry.
Position position_at(const Trajectory& traj, double t);

/// Direction of the velocity vector `t` seconds after the epoch, in [0, 2pi).
double heading_at(const Trajectory& traj, double t);

/// The same motion re-anchored `dt` seconds later (epoch + dt).
Trajectory advance(const Trajectory& traj, double dt);

/// Planar (altitude-free) distance between the two motions at epoch + t.
double planar_distance(const Trajectory& a, const Trajectory& b, double t);

/// Full-quadrant angle of p about the center, in [-pi, pi].
double initial_phase(double center_x, double center_y, const Position& p);

struct InferredTrajectory {
  Trajectory trajectory;
  double speed = 0.0;
};

/// Reconstructs the motion through three consecutive fixes taken `interval`
/// seconds apart. The result is anchored at p2 with epoch 0.
InferredTrajectory infer_trajectory(const Position& p0, const Position& p1, const Position& p2,
                                    double interval);

/// Wraps an angle into [0, 2pi).
double wrap_two_pi(double angle) noexcept;
/// Wraps an angle into [-pi, pi].
double wrap_pi(double angle) noexcept;

Trajectory make_curve(double cx, double cy, double radius, double speed, Direction dir,
                      double phase, double altitude, double epoch = 0.0);
Trajectory make_straight(double x, double y, double heading, double speed, double altitude,
                         double epoch = 0.0);

} // namespace uavllt
