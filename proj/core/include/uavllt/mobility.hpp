#pragma once

#include "uavllt/kinematics.hpp"
#include "uavllt/uav_state.hpp"

#include <random>
#include <string>

namespace uavllt {

/// Rectangular flight area. The buffer zone is the band of width
/// buffer_width just inside the outer boundary.
struct Arena {
  double x_min = 0.0;
  double x_max = 5000.0;
  double y_min = 0.0;
  double y_max = 5000.0;
  double buffer_width = 300.0;

  bool contains(double x, double y) const noexcept;
  bool in_buffer(double x, double y) const noexcept;
  /// How far (x, y) lies outside the inner region; 0 inside it.
  double buffer_depth(double x, double y) const noexcept;
  void validate() const;
};

struct SmoothTurnConfig {
  double speed_min = 20.0;
  double speed_max = 60.0;
  double radius_min = 100.0;
  double radius_max = 1000.0;
  double wait_min = 5.0;
  double wait_max = 30.0;
  int max_attempts = 64;
  bool resample_speed = false;

  void validate() const;
};

using Rng = std::mt19937_64;

double sample_wait_time(Rng& rng, const SmoothTurnConfig& config);

/// New trajectory starting from the exact position and heading of `current`
/// at absolute time `now`. Turns place the center on the normal to the
/// velocity at distance `radius`, which keeps the heading continuous.
Trajectory continue_trajectory(const Trajectory& current, double now, MovementState next,
                               double radius, double speed);

/// True when the path over [epoch, epoch + duration] never leaves the arena.
bool segment_inside(const Trajectory& traj, double duration, const Arena& arena);

/// True when a minimum-radius turn permitted after `traj` (same direction,
/// or either direction after a straight) fits entirely inside the arena at
/// the end of the segment.
bool escape_available(const Trajectory& traj, double duration, const Arena& arena,
                      double radius_min);

/// Whether `next` may follow `current` (opposite turns need a straight between them).
bool transition_allowed(MovementState current, MovementState next) noexcept;

/// One Smooth-Turn change: sample a movement state, radius and Wait Time,
/// rejecting candidates that would leave the arena (or, inside the buffer
/// zone, move further into it). Falls back to the tightest permitted turn.
UavState next_trajectory(const UavState& state, const Arena& arena,
                         const SmoothTurnConfig& config, Rng& rng, double now);

/// Random position in the inner region, random heading, then a first change at t = 0.
UavState initial_uav_state(NodeId id, double altitude, const Arena& arena,
                           const SmoothTurnConfig& config, Rng& rng);

std::string trace_csv_header();
std::string trace_csv_row(double time, const UavState& state);

} // namespace uavllt
