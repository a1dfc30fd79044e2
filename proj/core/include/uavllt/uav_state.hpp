#pragma once

#include "uavllt/kinematics.hpp"

#include <cstdint>
#include <limits>

namespace uavllt {

using NodeId = std::uint32_t;

struct UavState {
  NodeId id = 0;
  Trajectory trajectory;
  double speed = 0.0;
  double altitude = 0.0;
  /// Absolute time of the next trajectory change (epoch + Wait Time).
  double next_change_at = std::numeric_limits<double>::infinity();
};

} // namespace uavllt
