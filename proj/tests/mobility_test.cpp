#include <uavllt/errors.hpp>
#include <uavllt/mobility.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace uavllt {
namespace {

constexpr double kPi = std::numbers::pi;

// Dense sampling of the segment, independent of the analytic check.
bool sampled_inside(const Trajectory& traj, double duration, const Arena& arena) {
  const int n = 2000;
  for (int k = 0; k <= n; ++k) {
    const Position p = position_at(traj, duration * k / n);
    if (!arena.contains(p.x, p.y))
      return false;
  }
  return true;
}

TEST(Arena, BufferDepth) {
  Arena a;
  EXPECT_TRUE(a.contains(0, 0));
  EXPECT_FALSE(a.contains(-1, 10));
  EXPECT_EQ(a.buffer_depth(2500, 2500), 0.0);
  EXPECT_DOUBLE_EQ(a.buffer_depth(100, 2500), 200.0);
  EXPECT_DOUBLE_EQ(a.buffer_depth(4950, 4900), 250.0);
  EXPECT_TRUE(a.in_buffer(100, 2500));
  EXPECT_FALSE(a.in_buffer(1000, 2500));
}

TEST(Arena, Validate) {
  Arena a;
  a.buffer_width = 2600;
  EXPECT_THROW(a.validate(), ConfigError);
  a.buffer_width = 0;
  EXPECT_THROW(a.validate(), ConfigError);
}

TEST(SmoothTurnConfig, Validate) {
  SmoothTurnConfig c;
  EXPECT_NO_THROW(c.validate());
  c.wait_min = 40;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Transitions, OppositeTurnsNeedStraight) {
  using M = MovementState;
  EXPECT_FALSE(transition_allowed(M::Clockwise, M::CounterClockwise));
  EXPECT_FALSE(transition_allowed(M::CounterClockwise, M::Clockwise));
  EXPECT_TRUE(transition_allowed(M::Clockwise, M::Straight));
  EXPECT_TRUE(transition_allowed(M::Straight, M::CounterClockwise));
  EXPECT_TRUE(transition_allowed(M::Clockwise, M::Clockwise));
}

TEST(ContinueTrajectory, PositionAndHeadingContinuous) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const MovementState kinds[] = {MovementState::Clockwise, MovementState::CounterClockwise,
                                 MovementState::Straight};
  for (int i = 0; i < 500; ++i) {
    const Trajectory cur =
        u(rng) < 0.5 ? make_curve(1000, 2000, 100 + 900 * u(rng), 20 + 40 * u(rng),
                                  u(rng) < 0.5 ? Direction::Clockwise : Direction::CounterClockwise,
                                  2 * kPi * u(rng), 50, 3.0)
                     : make_straight(1000, 2000, 2 * kPi * u(rng), 30, 50, 3.0);
    const double now = 3.0 + 30 * u(rng);
    const Trajectory next = continue_trajectory(cur, now, kinds[i % 3], 100 + 900 * u(rng), 42);
    const Position p0 = position_at(cur, now - cur.epoch);
    const Position p1 = position_at(next, 0.0);
    EXPECT_NEAR(p0.x, p1.x, 1e-6);
    EXPECT_NEAR(p0.y, p1.y, 1e-6);
    EXPECT_EQ(p1.z, 50.0);
    EXPECT_NEAR(wrap_pi(heading_at(cur, now - cur.epoch) - heading_at(next, 0.0)), 0.0, 1e-9);
    EXPECT_EQ(next.epoch, now);
    EXPECT_EQ(next.state(), kinds[i % 3]);
  }
}

TEST(SegmentInside, MatchesSampling) {
  Arena arena;
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int outside = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 5000 * u(rng), y = 5000 * u(rng);
    const Trajectory t =
        i % 2 ? make_straight(x, y, 2 * kPi * u(rng), 20 + 40 * u(rng), 0)
              : make_curve(x, y, 100 + 900 * u(rng), 20 + 40 * u(rng),
                           u(rng) < 0.5 ? Direction::Clockwise : Direction::CounterClockwise,
                           2 * kPi * u(rng), 0);
    const double d = 5 + 60 * u(rng);
    const bool want = sampled_inside(t, d, arena);
    // sampling can only miss a tiny excursion, never invent one
    if (want)
      EXPECT_TRUE(segment_inside(t, d, arena)) << i;
    outside += !want;
  }
  EXPECT_GT(outside, 50);
}

TEST(SegmentInside, DetectsArcExcursionBetweenEndpoints) {
  Arena arena;
  // center 150 from the left edge, radius 200: the leftmost point is outside
  const Trajectory t = make_curve(150, 2500, 200, 50, Direction::CounterClockwise, kPi / 2, 0);
  const double quarter_and_more = (kPi * 1.01) / (50.0 / 200.0);
  EXPECT_TRUE(arena.contains(150, 2700));
  EXPECT_FALSE(segment_inside(t, quarter_and_more, arena));
}

TEST(NextTrajectory, StaysInsideOverLongRuns) {
  Arena arena;
  SmoothTurnConfig cfg;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    UavState s = initial_uav_state(static_cast<NodeId>(seed), 100, arena, cfg, rng);
    double now = 0.0;
    for (int step = 0; step < 200; ++step) {
      const double wait = s.next_change_at - now;
      ASSERT_GE(wait, cfg.wait_min - 1e-9);
      ASSERT_LE(wait, cfg.wait_max + 1e-9);
      ASSERT_TRUE(sampled_inside(s.trajectory, wait, arena)) << "seed " << seed << " step " << step;
      now = s.next_change_at;
      const UavState n = next_trajectory(s, arena, cfg, rng, now);
      ASSERT_TRUE(transition_allowed(s.trajectory.state(), n.trajectory.state()));
      const Position a = position_at(s.trajectory, now - s.trajectory.epoch);
      const Position b = position_at(n.trajectory, 0.0);
      ASSERT_NEAR(a.x, b.x, 1e-6);
      ASSERT_NEAR(a.y, b.y, 1e-6);
      ASSERT_EQ(n.speed, s.speed);
      if (n.trajectory.is_curve()) {
        ASSERT_GE(n.trajectory.curve().radius, cfg.radius_min);
        ASSERT_LE(n.trajectory.curve().radius, cfg.radius_max);
      }
      s = n;
    }
  }
}

TEST(NextTrajectory, DeterministicForSeed) {
  Arena arena;
  SmoothTurnConfig cfg;
  Rng r1(77), r2(77);
  UavState a = initial_uav_state(0, 100, arena, cfg, r1);
  UavState b = initial_uav_state(0, 100, arena, cfg, r2);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(trace_csv_row(a.next_change_at, a), trace_csv_row(b.next_change_at, b));
    a = next_trajectory(a, arena, cfg, r1, a.next_change_at);
    b = next_trajectory(b, arena, cfg, r2, b.next_change_at);
  }
}

TEST(NextTrajectory, HeadingOutOfBufferCurlsBack) {
  Arena arena;
  SmoothTurnConfig cfg;
  Rng rng(12);
  // flying straight at the x_max wall from inside the buffer zone
  UavState s;
  s.speed = 30;
  s.trajectory = make_straight(4750, 2500, 0.0, 30, 100, 0.0);
  for (int i = 0; i < 200; ++i) {
    const UavState n = next_trajectory(s, arena, cfg, rng, 0.0);
    ASSERT_TRUE(sampled_inside(n.trajectory, n.next_change_at, arena));
    EXPECT_TRUE(n.trajectory.is_curve());
  }
}

TEST(NextTrajectory, BoundaryEncounters) {
  Arena arena;
  SmoothTurnConfig cfg;
  Rng rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int encounters = 0;
  while (encounters < 10000) {
    // straight flight somewhere in the buffer zone, heading anywhere
    UavState s;
    s.speed = 20 + 40 * u(rng);
    const double x = 5000 * u(rng), y = 5000 * u(rng);
    if (!arena.in_buffer(x, y))
      continue;
    s.trajectory = make_straight(x, y, 2 * kPi * u(rng), s.speed, 100, 0.0);
    // states with no room left even for the tightest turn cannot arise in a run
    if (!escape_available(s.trajectory, 0.0, arena, cfg.radius_min))
      continue;
    ++encounters;
    const UavState n = next_trajectory(s, arena, cfg, rng, 0.0);
    ASSERT_TRUE(sampled_inside(n.trajectory, n.next_change_at, arena)) << encounters;
  }
}

TEST(Trace, HeaderAndRows) {
  EXPECT_EQ(trace_csv_header(), "time_s,uav_id,x_m,y_m,z_m,state,cx_m,cy_m,r_m,heading_rad,speed_mps");
  UavState s;
  s.id = 3;
  s.trajectory = make_straight(10, 20, 0, 5, 100, 0);
  EXPECT_EQ(trace_csv_row(2, s), "2,3,20,20,100,STRAIGHT,,,,0,5");
  s.trajectory = make_curve(0, 0, 100, 10, Direction::Clockwise, 0, 100, 0);
  EXPECT_EQ(trace_csv_row(0, s), "0,3,100,0,100,CW,0,0,100,,10");
}

} // namespace
} // namespace uavllt
