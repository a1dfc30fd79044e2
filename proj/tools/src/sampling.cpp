#include "uavllt_cli/sampling.hpp"

#include <uavllt/mobility.hpp>

#include <cmath>
#include <numbers>

namespace uavllt::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Trajectory sample_motion(Rng& rng, double x, double y, bool curve) {
  const Trajectory line = make_straight(x, y, uniform(rng, 0.0, kTwoPi), uniform(rng, 20.0, 60.0), 0.0);
  if (!curve)
    return line;
  const auto turn = std::bernoulli_distribution(0.5)(rng) ? MovementState::Clockwise
                                                           : MovementState::CounterClockwise;
  return continue_trajectory(line, 0.0, turn, uniform(rng, 100.0, 1000.0), line.speed());
}

} // namespace

SampledPair sample_pair(Rng& rng, LinkCase kind) {
  SampledPair p;
  p.range = uniform(rng, 100.0, 5000.0);
  const double d = uniform(rng, 0.0, 0.95 * p.range);
  const double bearing = uniform(rng, 0.0, kTwoPi);
  const bool a_curve = kind != LinkCase::C;
  const bool b_curve = kind == LinkCase::A;
  p.a = sample_motion(rng, 0.0, 0.0, a_curve);
  p.b = sample_motion(rng, d * std::cos(bearing), d * std::sin(bearing), b_curve);
  return p;
}

} // namespace uavllt::cli
