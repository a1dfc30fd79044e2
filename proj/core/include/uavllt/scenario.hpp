#pragma once

#include "uavllt/kinematics.hpp"
#include "uavllt/mobility.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace uavllt {

/// Tangent-continuous turn or straight started at a scripted change time.
struct ManeuverChange {
  MovementState next = MovementState::Straight;
  double radius = 0.0;
};

struct ScriptedChange {
  double time = 0.0;
  /// Either an explicit trajectory (anchored at `time`) or a smooth maneuver.
  std::variant<Trajectory, ManeuverChange> change;
};

struct ScriptedUav {
  Trajectory initial;
  std::vector<ScriptedChange> changes; // ascending time
};

struct ScenarioConfig {
  Arena arena;
  std::uint32_t uav_count = 20;
  SmoothTurnConfig mobility;
  double transmission_range = 1000.0;
  double hello_interval = 1.0;
  double duration = 600.0;
  std::uint64_t seed = 1;
  double horizon = 3600.0;
  double oracle_dt = 0.01; // ground-truth break detection step
  double snapshot_interval = 10.0;
  double altitude_base = 100.0;
  double altitude_step = 5.0;
  /// When non-empty, replaces Smooth-Turn mobility; size must equal uav_count.
  std::vector<ScriptedUav> scripted;

  void validate() const;
};

/// "curve:cx,cy,r,v,dir,theta,z" (dir is -1/+1 or cw/ccw) or "straight:x,y,heading,v,z".
Trajectory parse_trajectory_spec(std::string_view spec, double epoch = 0.0);

/// Flat key=value text; '#' starts a comment. Unknown keys are errors.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

} // namespace uavllt
