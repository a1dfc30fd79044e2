#pragma once

#include <uavllt/routing.hpp>

#include <compare>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace uavllt::cli {

/// Node id read from a CSV. Integer ids order numerically (2 < 10) and
/// before any non-numeric id; other ids order as text.
struct NodeName {
  std::string text;

  friend std::strong_ordering operator<=>(const NodeName& l, const NodeName& r);
  friend bool operator==(const NodeName& l, const NodeName& r) { return l.text == r.text; }
  friend std::ostream& operator<<(std::ostream& os, const NodeName& n) { return os << n.text; }
};

/// One snapshot read from an edge-list CSV (t_s,node_a,node_b,llt_s).
/// Node ids are kept as text; "inf" marks an unbounded link.
struct EdgeRow {
  double time = 0.0;
  NodeName a;
  NodeName b;
  double llt = 0.0;
};

/// Throws ConfigError on a malformed header or row. The t_s column is optional.
std::vector<EdgeRow> read_edge_list(std::istream& in);

/// Rows of the snapshot at `time` (or the latest one) as a graph.
LinkGraph<NodeName> snapshot_graph(const std::vector<EdgeRow>& rows, std::optional<double> time);

} // namespace uavllt::cli
