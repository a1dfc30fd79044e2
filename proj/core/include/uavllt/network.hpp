#pragma once

#include "uavllt/llt.hpp"
#include "uavllt/mobility.hpp"
#include "uavllt/routing.hpp"
#include "uavllt/scenario.hpp"
#include "uavllt/uav_state.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uavllt {

/// Periodic trajectory advertisement. Curve fields are present iff the UAV
/// is turning; heading is present iff it flies straight.
struct HelloMessage {
  NodeId sender = 0;
  double timestamp = 0.0;
  Position position;
  MovementState movement_state = MovementState::Straight;
  std::optional<double> center_x;
  std::optional<double> center_y;
  std::optional<double> radius;
  std::optional<double> heading;
  double speed = 0.0;
  std::uint64_t sequence = 0;
};

HelloMessage make_hello(const UavState& state, double now, std::uint64_t sequence);

/// Trajectory advertised by a Hello, anchored at its timestamp.
Trajectory trajectory_from_hello(const HelloMessage& hello);

struct LinkRecord {
  NodeId a = 0; // a < b
  NodeId b = 0;
  double established_at = 0.0;
  LltResult current;
  std::vector<std::pair<double, LltResult>> history; // (recompute time, estimate)
  std::optional<double> terminated_at;

  /// Absolute break time predicted by the current estimate (+inf if unbounded).
  double predicted_break() const noexcept { return current.predicted_break(); }
};

struct LinkParams {
  double range = 1000.0;
  double horizon = 3600.0;
};

/// Fresh estimate anchored at `now`, appended to the history and replacing
/// the current one. Throws LinkNotUp if the pair is already out of range.
void recompute_llt(LinkRecord& link, const UavState& a, const UavState& b, double now,
                   const LinkParams& params);

/// Source of trajectory changes for the simulated fleet.
class MobilityPlan {
public:
  virtual ~MobilityPlan() = default;
  virtual UavState initial(NodeId id) = 0;
  /// Called at state.next_change_at.
  virtual UavState next(const UavState& state, double now) = 0;
};

class SmoothTurnPlan final : public MobilityPlan {
public:
  SmoothTurnPlan(Arena arena, SmoothTurnConfig config, std::uint64_t seed, std::size_t count,
                 double altitude_base, double altitude_step);
  UavState initial(NodeId id) override;
  UavState next(const UavState& state, double now) override;

private:
  Arena arena_;
  SmoothTurnConfig config_;
  std::vector<Rng> rngs_; // one independent stream per UAV
  double altitude_base_;
  double altitude_step_;
};

class ScriptedPlan final : public MobilityPlan {
public:
  explicit ScriptedPlan(std::vector<ScriptedUav> uavs);
  UavState initial(NodeId id) override;
  UavState next(const UavState& state, double now) override;

private:
  std::vector<ScriptedUav> uavs_;
  std::vector<std::size_t> cursor_;
};

struct SimulationParams {
  std::size_t uav_count = 2;
  LinkParams link;
  double hello_interval = 1.0;
  double duration = 600.0;
  double dt_check = 0.01;
  double snapshot_interval = 10.0;
};

struct SimulationSummary {
  std::size_t links = 0;
  std::size_t breaks = 0;
  std::size_t recomputes = 0; // change-triggered estimates
  std::size_t unpredicted_breaks = 0; // final estimate was unbounded
  double mean_abs_prediction_error = 0.0;
  std::size_t trajectory_changes = 0;

  std::string to_string() const;
};

struct SimulationOutput {
  std::vector<std::string> events; // JSON lines, time ordered
  std::vector<std::string> trace;  // CSV rows, header excluded
  std::vector<LinkGraph<NodeId>> snapshots;
  std::vector<LinkRecord> links;
  /// Every trajectory each UAV flew, in order; segment k ends at segment k+1's epoch.
  std::vector<std::vector<Trajectory>> segments;
  SimulationSummary summary;
};

/// Single-threaded discrete-event loop: Hello broadcasts, trajectory changes,
/// ground-truth break checks every dt_check, and LinkGraph snapshots.
class NetworkSimulator {
public:
  NetworkSimulator(SimulationParams params, std::unique_ptr<MobilityPlan> plan);
  SimulationOutput run();

private:
  SimulationParams params_;
  std::unique_ptr<MobilityPlan> plan_;
};

SimulationParams simulation_params(const ScenarioConfig& config);
std::unique_ptr<MobilityPlan> make_mobility_plan(const ScenarioConfig& config);
SimulationOutput run_simulation(const ScenarioConfig& config);

std::string snapshot_csv_header();
std::string snapshot_csv(const LinkGraph<NodeId>& graph); // header + rows

/// events.jsonl, trace.csv, snapshots/snapshot_NNNNN.csv, summary.txt
void write_simulation_outputs(const SimulationOutput& out, const std::filesystem::path& dir);

} // namespace uavllt
