#include "instances.hpp"

#include <uavllt/errors.hpp>
#include <uavllt/kinematics.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace uavllt {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PositionAt, QuarterTurnOnCurve) {
  // omega = V * Dir / R = pi/2  ->  V = 50 pi
  const Trajectory t = make_curve(0, 0, 100, 50 * kPi, Direction::CounterClockwise, 0, 50);
  const Position p = position_at(t, 1.0);
  EXPECT_NEAR(p.x, 0.0, 1e-12);
  EXPECT_NEAR(p.y, 100.0, 1e-12);
  EXPECT_EQ(p.z, 50.0);
}

TEST(PositionAt, StraightLine) {
  const Trajectory t = make_straight(0, 0, 0, 10, 7);
  const Position p = position_at(t, 3.0);
  EXPECT_DOUBLE_EQ(p.x, 30.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_EQ(p.z, 7.0);
}

TEST(PositionAt, IdentityAtEpoch) {
  const Trajectory c = make_curve(3, 4, 10, 5, Direction::Clockwise, 0.7, 1);
  const Position pc = position_at(c, 0.0);
  EXPECT_DOUBLE_EQ(pc.x, 3 + 10 * std::cos(0.7));
  EXPECT_DOUBLE_EQ(pc.y, 4 + 10 * std::sin(0.7));
  const Trajectory s = make_straight(-2, 9, 1.0, 5, 1);
  const Position ps = position_at(s, 0.0);
  EXPECT_EQ(ps.x, -2.0);
  EXPECT_EQ(ps.y, 9.0);
}

TEST(PositionAt, ClockwiseTurnsNegatively) {
  const Trajectory t = make_curve(0, 0, 100, 50 * kPi, Direction::Clockwise, 0, 0);
  EXPECT_NEAR(position_at(t, 1.0).y, -100.0, 1e-12);
  EXPECT_NEAR(t.curve().angular_velocity(), -kPi / 2, 1e-15);
}

TEST(PositionAt, CurveStaysOnCircleAndLineIsUniform) {
  Rng rng(11);
  testing::InstanceRanges r;
  for (int i = 0; i < 200; ++i) {
    const Trajectory c = testing::random_curve_through(rng, 10, -20, r);
    const Trajectory s = testing::random_straight_through(rng, 10, -20, r);
    const double t = testing::uniform(rng, 0, 500);
    const Position pc = position_at(c, t);
    EXPECT_NEAR(std::hypot(pc.x - c.curve().center_x, pc.y - c.curve().center_y),
                c.curve().radius, 1e-9 * c.curve().radius);
    const Position p0 = position_at(s, 0);
    const Position pt = position_at(s, t);
    EXPECT_NEAR(std::hypot(pt.x - p0.x, pt.y - p0.y), s.speed() * t, 1e-9 * s.speed() * t + 1e-12);
  }
}

TEST(InitialPhase, QuadrantAware) {
  EXPECT_DOUBLE_EQ(initial_phase(0, 0, {1, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(initial_phase(0, 0, {0, -1, 0}), -kPi / 2);
  EXPECT_DOUBLE_EQ(initial_phase(0, 0, {-1, 0, 0}), kPi);
  EXPECT_THROW(initial_phase(2, 3, {2, 3, 0}), DegenerateFix);
}

TEST(Advance, MatchesPositionAt) {
  const Trajectory c = make_curve(5, 5, 200, 30, Direction::Clockwise, 2.5, 0, 10.0);
  const Trajectory later = advance(c, 7.5);
  EXPECT_DOUBLE_EQ(later.epoch, 17.5);
  const Position a = position_at(c, 9.0);
  const Position b = position_at(later, 1.5);
  EXPECT_NEAR(a.x, b.x, 1e-9);
  EXPECT_NEAR(a.y, b.y, 1e-9);
}

TEST(InferTrajectory, SymmetricCircle) {
  const auto inf = infer_trajectory({100, 0, 0}, {0, 100, 0}, {-100, 0, 0}, 1.0);
  ASSERT_TRUE(inf.trajectory.is_curve());
  const auto& c = inf.trajectory.curve();
  EXPECT_NEAR(c.center_x, 0.0, 1e-12);
  EXPECT_NEAR(c.center_y, 0.0, 1e-12);
  EXPECT_NEAR(c.radius, 100.0, 1e-12);
  EXPECT_EQ(c.direction, Direction::CounterClockwise);
  EXPECT_NEAR(wrap_pi(c.initial_phase - kPi), 0.0, 1e-12);
  EXPECT_NEAR(inf.speed, 100 * kPi / 2, 1e-9);
}

TEST(InferTrajectory, Collinear) {
  const auto inf = infer_trajectory({0, 0, 0}, {10, 0, 0}, {20, 0, 0}, 1.0);
  ASSERT_TRUE(inf.trajectory.is_straight());
  EXPECT_DOUBLE_EQ(inf.trajectory.straight().heading, 0.0);
  EXPECT_DOUBLE_EQ(inf.speed, 10.0);
  EXPECT_DOUBLE_EQ(inf.trajectory.straight().origin_x, 20.0);
}

TEST(InferTrajectory, DegenerateInputs) {
  EXPECT_THROW(infer_trajectory({0, 0, 0}, {0, 0, 0}, {1, 1, 0}, 1.0), DegenerateFix);
  EXPECT_THROW(infer_trajectory({0, 0, 0}, {1, 0, 0}, {2, 1, 0}, 0.0), DegenerateFix);
  EXPECT_THROW(infer_trajectory({0, 0, 0}, {1, 0, 0}, {2, 1, 0}, -1.0), DegenerateFix);
}

TEST(InferTrajectory, RecoversParametricCircle) {
  // fixes generated from position_at, compared against the generating parameters
  const Trajectory truth = make_curve(37, -12, 55, 20, Direction::Clockwise, 0.3, 0);
  const double h = 0.8;
  const auto inf = infer_trajectory(position_at(truth, 0), position_at(truth, h),
                                    position_at(truth, 2 * h), h);
  ASSERT_TRUE(inf.trajectory.is_curve());
  const auto& c = inf.trajectory.curve();
  EXPECT_NEAR(c.center_x, 37.0, 1e-9 * 37.0);
  EXPECT_NEAR(c.center_y, -12.0, 1e-9 * 12.0);
  EXPECT_NEAR(c.radius, 55.0, 1e-9 * 55.0);
  EXPECT_EQ(c.direction, Direction::Clockwise);
}

// Round trip over random trajectories with |omega| h < pi/2.
TEST(InferTrajectory, RoundTripProperty) {
  Rng rng(2024);
  testing::InstanceRanges r;
  for (int i = 0; i < 2000; ++i) {
    const bool curve = i % 2 == 0;
    const double x = testing::uniform(rng, -3000, 3000);
    const double y = testing::uniform(rng, -3000, 3000);
    const Trajectory truth = curve ? testing::random_curve_through(rng, x, y, r)
                                   : testing::random_straight_through(rng, x, y, r);
    const double limit = curve ? (kPi / 2) / truth.turn_rate() : 5.0;
    const double h = testing::uniform(rng, 0.05, 0.99) * std::min(limit, 5.0);
    const auto inf = infer_trajectory(position_at(truth, 0), position_at(truth, h),
                                      position_at(truth, 2 * h), h);
    const Trajectory& got = inf.trajectory;
    ASSERT_EQ(got.is_curve(), curve) << "instance " << i;
    EXPECT_NEAR(inf.speed, truth.speed(), 1e-6 * truth.speed());
    if (curve) {
      const auto& a = got.curve();
      const auto& b = truth.curve();
      const double scale = std::max({std::abs(b.center_x), std::abs(b.center_y), b.radius});
      EXPECT_NEAR(a.center_x, b.center_x, 1e-6 * scale);
      EXPECT_NEAR(a.center_y, b.center_y, 1e-6 * scale);
      EXPECT_NEAR(a.radius, b.radius, 1e-6 * b.radius);
      EXPECT_EQ(a.direction, b.direction);
    } else {
      EXPECT_NEAR(std::abs(wrap_pi(got.straight().heading - truth.straight().heading)), 0.0, 1e-6);
    }
  }
}

TEST(Wrap, Ranges) {
  EXPECT_DOUBLE_EQ(wrap_two_pi(-kPi / 2), 3 * kPi / 2);
  EXPECT_DOUBLE_EQ(wrap_two_pi(2 * kPi), 0.0);
  EXPECT_NEAR(wrap_pi(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_LT(wrap_two_pi(-1e-300), 2 * kPi);
}

} // namespace
} // namespace uavllt
