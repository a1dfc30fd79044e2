#include "uavllt_cli/edge_list.hpp"

#include <uavllt/errors.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace uavllt::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ','))
    out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

double number(const std::string& s, std::size_t line_no) {
  if (s == "inf")
    return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    throw ConfigError("edge list line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

bool is_integer(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

} // namespace

std::strong_ordering operator<=>(const NodeName& l, const NodeName& r) {
  const bool li = is_integer(l.text);
  const bool ri = is_integer(r.text);
  if (li != ri)
    return li ? std::strong_ordering::less : std::strong_ordering::greater;
  if (li) {
    const auto strip = [](const std::string& s) {
      const auto nz = s.find_first_not_of('0');
      return nz == std::string::npos ? std::string("0") : s.substr(nz);
    };
    const std::string a = strip(l.text), b = strip(r.text);
    if (a.size() != b.size())
      return a.size() <=> b.size();
    if (const auto c = a <=> b; c != 0)
      return c;
  }
  return l.text <=> r.text;
}

std::vector<EdgeRow> read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty())
      break;
  }
  const auto header = split(line);
  bool timed = false;
  if (header == std::vector<std::string>{"t_s", "node_a", "node_b", "llt_s"})
    timed = true;
  else if (header != std::vector<std::string>{"node_a", "node_b", "llt_s"})
    throw ConfigError("edge list: expected header t_s,node_a,node_b,llt_s");

  std::vector<EdgeRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with("t_s,"))
      continue; // blank lines and repeated headers of concatenated snapshots
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw ConfigError("edge list line " + std::to_string(line_no) + ": wrong column count");
    const std::size_t o = timed ? 1 : 0;
    EdgeRow r;
    r.time = timed ? number(cells[0], line_no) : 0.0;
    r.a.text = cells[o];
    r.b.text = cells[o + 1];
    r.llt = number(cells[o + 2], line_no);
    if (r.a.text.empty() || r.b.text.empty() || r.a == r.b)
      throw ConfigError("edge list line " + std::to_string(line_no) + ": bad node ids");
    if (std::isnan(r.llt) || r.llt < 0.0)
      throw ConfigError("edge list line " + std::to_string(line_no) + ": negative LLT");
    rows.push_back(std::move(r));
  }
  return rows;
}

LinkGraph<NodeName> snapshot_graph(const std::vector<EdgeRow>& rows, std::optional<double> time) {
  double t = -std::numeric_limits<double>::infinity();
  if (time) {
    t = *time;
  } else {
    for (const auto& r : rows)
      t = std::max(t, r.time);
  }
  LinkGraph<NodeName> g;
  g.snapshot_time = t;
  for (const auto& r : rows) {
    // every id present anywhere in the file is a known node
    g.add_node(r.a);
    g.add_node(r.b);
  }
  for (const auto& r : rows)
    if (r.time == t)
      g.add_edge(r.a, r.b, r.llt);
  return g;
}

} // namespace uavllt::cli
