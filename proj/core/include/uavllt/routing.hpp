#pragma once

#include "uavllt/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace uavllt {

/// Edge weight for a link with no predicted break; compares above every finite LLT.
inline constexpr double kUnboundedLlt = std::numeric_limits<double>::infinity();

/// Undirected snapshot of the live links and their current LLT estimates.
template <class Id>
struct LinkGraph {
  double snapshot_time = 0.0;
  std::set<Id> nodes;
  std::map<std::pair<Id, Id>, double> edges; // keyed (smaller id, larger id)

  static std::pair<Id, Id> key(const Id& a, const Id& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  void add_node(const Id& n) { nodes.insert(n); }

  void add_edge(const Id& a, const Id& b, double llt) {
    nodes.insert(a);
    nodes.insert(b);
    edges[key(a, b)] = llt;
  }

  std::optional<double> edge(const Id& a, const Id& b) const {
    auto it = edges.find(key(a, b));
    if (it == edges.end())
      return std::nullopt;
    return it->second;
  }

  /// Neighbors of every node, sorted by id.
  std::map<Id, std::vector<std::pair<Id, double>>> adjacency() const {
    std::map<Id, std::vector<std::pair<Id, double>>> adj;
    for (const auto& n : nodes)
      adj[n];
    for (const auto& [k, w] : edges) {
      adj[k.first].emplace_back(k.second, w);
      adj[k.second].emplace_back(k.first, w);
    }
    for (auto& [n, list] : adj)
      std::sort(list.begin(), list.end());
    return adj;
  }
};

template <class Id>
struct Route {
  std::vector<Id> nodes;
  double bottleneck_llt = 0.0;

  friend bool operator==(const Route&, const Route&) = default;
};

/// Route maximizing the minimum link LLT. Among equally wide routes the one
/// with fewer hops wins, then the lexicographically smallest node sequence.
template <class Id>
std::optional<Route<Id>> max_min_route(const LinkGraph<Id>& graph, const Id& src, const Id& dst) {
  if (!graph.nodes.contains(src) || !graph.nodes.contains(dst))
    throw NodeUnknown("max_min_route: source or destination not in graph");
  if (src == dst)
    throw Error("max_min_route: source equals destination");

  const auto adj = graph.adjacency();

  // widest-path best-first search
  std::map<Id, double> width;
  std::set<Id> done;
  std::priority_queue<std::pair<double, Id>> frontier;
  width[src] = kUnboundedLlt;
  frontier.emplace(kUnboundedLlt, src);
  while (!frontier.empty()) {
    auto [w, u] = frontier.top();
    frontier.pop();
    if (!done.insert(u).second)
      continue;
    if (u == dst)
      break;
    for (const auto& [v, llt] : adj.at(u)) {
      const double cand = std::min(w, llt);
      auto it = width.find(v);
      if (!done.contains(v) && (it == width.end() || cand > it->second)) {
        width[v] = cand;
        frontier.emplace(cand, v);
      }
    }
  }
  if (!done.contains(dst))
    return std::nullopt;
  const double best = width.at(dst);

  // hop counts to dst over links at least as wide as the optimum
  std::map<Id, int> hops;
  std::queue<Id> bfs;
  hops[dst] = 0;
  bfs.push(dst);
  while (!bfs.empty()) {
    const Id u = bfs.front();
    bfs.pop();
    for (const auto& [v, llt] : adj.at(u)) {
      if (llt >= best && !hops.contains(v)) {
        hops[v] = hops[u] + 1;
        bfs.push(v);
      }
    }
  }

  Route<Id> route;
  route.bottleneck_llt = best;
  route.nodes.push_back(src);
  Id cur = src;
  while (cur != dst) {
    const int next_hops = hops.at(cur) - 1;
    for (const auto& [v, llt] : adj.at(cur)) {
      auto it = hops.find(v);
      if (llt >= best && it != hops.end() && it->second == next_hops) {
        cur = v;
        break;
      }
    }
    route.nodes.push_back(cur);
  }
  return route;
}

} // namespace uavllt
