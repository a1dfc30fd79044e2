#include <uavllt/errors.hpp>
#include <uavllt/scenario.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace uavllt {
namespace {

TEST(TrajectorySpec, Curve) {
  const Trajectory t = parse_trajectory_spec("curve:10,20,300,30,cw,1.5,120", 4.0);
  ASSERT_TRUE(t.is_curve());
  EXPECT_EQ(t.curve().center_x, 10);
  EXPECT_EQ(t.curve().center_y, 20);
  EXPECT_EQ(t.curve().radius, 300);
  EXPECT_EQ(t.curve().speed, 30);
  EXPECT_EQ(t.curve().direction, Direction::Clockwise);
  EXPECT_EQ(t.curve().initial_phase, 1.5);
  EXPECT_EQ(t.altitude(), 120);
  EXPECT_EQ(t.epoch, 4.0);
  EXPECT_EQ(parse_trajectory_spec("curve:0,0,1,1,+1,0,0").curve().direction,
            Direction::CounterClockwise);
}

TEST(TrajectorySpec, Straight) {
  const Trajectory t = parse_trajectory_spec("straight:1,2,0.5,25,90");
  ASSERT_TRUE(t.is_straight());
  EXPECT_EQ(t.straight().heading, 0.5);
  EXPECT_EQ(t.speed(), 25);
}

TEST(TrajectorySpec, Rejects) {
  EXPECT_THROW(parse_trajectory_spec("curve:1,2,3"), ConfigError);
  EXPECT_THROW(parse_trajectory_spec("curve:0,0,-5,10,cw,0,0"), ConfigError);
  EXPECT_THROW(parse_trajectory_spec("curve:0,0,5,10,left,0,0"), ConfigError);
  EXPECT_THROW(parse_trajectory_spec("spiral:1,2"), ConfigError);
  EXPECT_THROW(parse_trajectory_spec("straight:a,2,0,1,0"), ConfigError);
}

TEST(Scenario, DefaultsAndOverrides) {
  const ScenarioConfig c = parse_scenario(R"(
# comment
uav_count = 5
seed = 42
transmission_range = 800   # trailing comment
duration=120
)");
  EXPECT_EQ(c.uav_count, 5u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.transmission_range, 800);
  EXPECT_EQ(c.duration, 120);
  EXPECT_EQ(c.hello_interval, 1.0);
  EXPECT_EQ(c.arena.x_max, 5000);
  EXPECT_TRUE(c.scripted.empty());
}

TEST(Scenario, UnknownKeyAndBadValues) {
  EXPECT_THROW(parse_scenario("speed = 3"), ConfigError);
  EXPECT_THROW(parse_scenario("uav_count = two"), ConfigError);
  EXPECT_THROW(parse_scenario("just text"), ConfigError);
  EXPECT_THROW(parse_scenario("uav_count = 1"), ConfigError);
  EXPECT_THROW(parse_scenario("wait_min = 50"), ConfigError);
  EXPECT_THROW(parse_scenario("radius_min = 200"), ConfigError); // buffer narrower than 2 r_min
}

TEST(Scenario, Scripted) {
  const ScenarioConfig c = parse_scenario(R"(
uav_count = 2
uav.0 = straight:0,0,0,10,100
uav.1 = curve:0,500,500,20,ccw,-1.5707963267948966,105
uav.1.change = 5@cw:300; 9.5@line ;20@straight:0,0,1,10,105
)");
  ASSERT_EQ(c.scripted.size(), 2u);
  EXPECT_TRUE(c.scripted[0].changes.empty());
  const auto& ch = c.scripted[1].changes;
  ASSERT_EQ(ch.size(), 3u);
  EXPECT_EQ(ch[0].time, 5.0);
  const auto& m = std::get<ManeuverChange>(ch[0].change);
  EXPECT_EQ(m.next, MovementState::Clockwise);
  EXPECT_EQ(m.radius, 300.0);
  EXPECT_EQ(std::get<ManeuverChange>(ch[1].change).next, MovementState::Straight);
  EXPECT_EQ(std::get<Trajectory>(ch[2].change).epoch, 20.0);
}

TEST(Scenario, ScriptedMustCoverEveryUav) {
  EXPECT_THROW(parse_scenario("uav_count = 3\nuav.0 = straight:0,0,0,1,0\nuav.1 = straight:0,0,0,1,0"),
               ConfigError);
  EXPECT_THROW(parse_scenario("uav_count = 2\nuav.0 = straight:0,0,0,1,0\nuav.1.change = 1@line"),
               ConfigError);
  EXPECT_THROW(parse_scenario("uav_count = 2\nuav.0 = straight:0,0,0,1,0\n"
                              "uav.1 = straight:0,0,0,1,0\nuav.1.change = 5@line;3@line"),
               ConfigError);
}

TEST(Scenario, MissingFile) {
  EXPECT_THROW(load_scenario("/nonexistent/scenario.cfg"), ConfigError);
}

} // namespace
} // namespace uavllt
