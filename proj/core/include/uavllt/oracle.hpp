#pragma once

// Brute-force ground truth. Deliberately simple: fixed time stepping over the
// exact positions for link lifetimes, exhaustive simple-path enumeration for
// routes. Shares nothing with the analytic solver beyond position_at.

#include "uavllt/kinematics.hpp"
#include "uavllt/routing.hpp"
#include "uavllt/uav_state.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace uavllt {

/// First time the planar distance exceeds `range`, stepping by dt and then
/// bisecting the bracketing step to 1e-6 s. Empty if the link survives the horizon.
std::optional<double> brute_force_llt(const Trajectory& a, const Trajectory& b, double range,
                                      double dt = 1e-3, double horizon = 3600.0);

std::optional<double> brute_force_llt(const UavState& a, const UavState& b, double range,
                                      double dt = 1e-3, double horizon = 3600.0);

/// Same search on an arbitrary distance-versus-time function.
std::optional<double> brute_force_break(const std::function<double(double)>& distance,
                                        double range, double dt, double horizon);

inline constexpr std::size_t kEnumerationNodeLimit = 12;

/// Best route by exhaustive enumeration of simple paths, using the same
/// ordering as max_min_route.
template <class Id>
std::optional<Route<Id>> enumerate_best_route(const LinkGraph<Id>& graph, const Id& src,
                                              const Id& dst) {
  if (graph.nodes.size() > kEnumerationNodeLimit)
    throw TooLarge("enumerate_best_route: graph exceeds the enumeration node limit");
  if (!graph.nodes.contains(src) || !graph.nodes.contains(dst))
    throw NodeUnknown("enumerate_best_route: source or destination not in graph");

  const auto adj = graph.adjacency();
  std::optional<Route<Id>> best;
  std::vector<Id> path{src};
  std::set<Id> on_path{src};

  auto better = [](const Route<Id>& x, const Route<Id>& y) {
    if (x.bottleneck_llt != y.bottleneck_llt)
      return x.bottleneck_llt > y.bottleneck_llt;
    if (x.nodes.size() != y.nodes.size())
      return x.nodes.size() < y.nodes.size();
    return x.nodes < y.nodes;
  };

  std::function<void(const Id&, double)> dfs = [&](const Id& u, double width) {
    if (u == dst) {
      Route<Id> r{path, width};
      if (!best || better(r, *best))
        best = std::move(r);
      return;
    }
    for (const auto& [v, llt] : adj.at(u)) {
      if (on_path.contains(v))
        continue;
      path.push_back(v);
      on_path.insert(v);
      dfs(v, std::min(width, llt));
      on_path.erase(v);
      path.pop_back();
    }
  };
  dfs(src, kUnboundedLlt);
  return best;
}

} // namespace uavllt
