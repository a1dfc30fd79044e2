#pragma once

#include <uavllt/llt.hpp>
#include <uavllt/mobility.hpp>

namespace uavllt::cli {

struct SampledPair {
  Trajectory a;
  Trajectory b;
  double range = 0.0;
};

/// Random pair of the given case: speeds 20-60 m/s, radii 100-1000 m,
/// range 100-5000 m, second UAV placed strictly inside the range.
SampledPair sample_pair(Rng& rng, LinkCase kind);

} // namespace uavllt::cli
