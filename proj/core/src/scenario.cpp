#include "uavllt/scenario.hpp"

#include "uavllt/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace uavllt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

double to_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::uint64_t to_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

Direction to_direction(std::string_view s) {
  s = trim(s);
  if (s == "-1" || s == "cw" || s == "CW")
    return Direction::Clockwise;
  if (s == "1" || s == "+1" || s == "ccw" || s == "CCW")
    return Direction::CounterClockwise;
  throw ConfigError("invalid turn direction: '" + std::string(s) + "'");
}

ScriptedChange parse_change(std::string_view item) {
  const auto at = item.find('@');
  if (at == std::string_view::npos)
    throw ConfigError("scripted change must be time@spec: '" + std::string(item) + "'");
  ScriptedChange c;
  c.time = to_double(item.substr(0, at), "change time");
  const auto spec = trim(item.substr(at + 1));
  if (spec.starts_with("curve:") || spec.starts_with("straight:")) {
    c.change = parse_trajectory_spec(spec, c.time);
  } else if (spec == "line") {
    c.change = ManeuverChange{MovementState::Straight, 0.0};
  } else if (spec.starts_with("cw:") || spec.starts_with("ccw:")) {
    const auto colon = spec.find(':');
    const auto kind = spec.substr(0, colon) == "cw" ? MovementState::Clockwise
                                                   : MovementState::CounterClockwise;
    c.change = ManeuverChange{kind, to_double(spec.substr(colon + 1), "maneuver radius")};
  } else {
    throw ConfigError("unknown scripted change: '" + std::string(spec) + "'");
  }
  return c;
}

} // namespace

Trajectory parse_trajectory_spec(std::string_view spec, double epoch) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError("trajectory spec needs a kind prefix: '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto fields = split(spec.substr(colon + 1), ',');
  if (kind == "curve") {
    if (fields.size() != 7)
      throw ConfigError("curve spec needs cx,cy,r,v,dir,theta,z");
    const double r = to_double(fields[2], "radius");
    const double v = to_double(fields[3], "speed");
    if (!(r > 0.0) || !(v > 0.0))
      throw ConfigError("curve spec needs positive radius and speed");
    return make_curve(to_double(fields[0], "cx"), to_double(fields[1], "cy"), r, v,
                      to_direction(fields[4]), to_double(fields[5], "theta"),
                      to_double(fields[6], "z"), epoch);
  }
  if (kind == "straight") {
    if (fields.size() != 5)
      throw ConfigError("straight spec needs x,y,heading,v,z");
    const double v = to_double(fields[3], "speed");
    if (v < 0.0)
      throw ConfigError("straight spec needs non-negative speed");
    return make_straight(to_double(fields[0], "x"), to_double(fields[1], "y"),
                         to_double(fields[2], "heading"), v, to_double(fields[4], "z"), epoch);
  }
  throw ConfigError("unknown trajectory kind '" + std::string(kind) + "'");
}

void ScenarioConfig::validate() const {
  arena.validate();
  mobility.validate();
  if (uav_count < 2)
    throw ConfigError("uav_count must be at least 2");
  if (!(transmission_range > 0.0))
    throw ConfigError("transmission_range must be positive");
  if (!(hello_interval > 0.0) || !(duration > 0.0) || !(horizon > 0.0) || !(oracle_dt > 0.0) ||
      !(snapshot_interval > 0.0))
    throw ConfigError("hello_interval, duration, horizon, oracle_dt and snapshot_interval must "
                      "be positive");
  if (!(altitude_step > 0.0))
    throw ConfigError("altitude_step must be positive so altitudes are unique");
  if (scripted.empty() && arena.buffer_width < 2.0 * mobility.radius_min)
    throw ConfigError("buffer_width must be at least twice radius_min");
  if (!scripted.empty() && scripted.size() != uav_count)
    throw ConfigError("scripted scenario must define every UAV (uav.0 .. uav.N-1)");
  for (const auto& s : scripted)
    for (std::size_t i = 1; i < s.changes.size(); ++i)
      if (!(s.changes[i].time > s.changes[i - 1].time))
        throw ConfigError("scripted change times must be strictly increasing");
}

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig cfg;
  std::map<std::uint64_t, ScriptedUav> scripted;
  std::map<std::uint64_t, std::string> pending_changes;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));

    if (key == "x_min") cfg.arena.x_min = to_double(value, key);
    else if (key == "x_max") cfg.arena.x_max = to_double(value, key);
    else if (key == "y_min") cfg.arena.y_min = to_double(value, key);
    else if (key == "y_max") cfg.arena.y_max = to_double(value, key);
    else if (key == "buffer_width") cfg.arena.buffer_width = to_double(value, key);
    else if (key == "uav_count") cfg.uav_count = static_cast<std::uint32_t>(to_uint(value, key));
    else if (key == "speed_min") cfg.mobility.speed_min = to_double(value, key);
    else if (key == "speed_max") cfg.mobility.speed_max = to_double(value, key);
    else if (key == "radius_min") cfg.mobility.radius_min = to_double(value, key);
    else if (key == "radius_max") cfg.mobility.radius_max = to_double(value, key);
    else if (key == "wait_min") cfg.mobility.wait_min = to_double(value, key);
    else if (key == "wait_max") cfg.mobility.wait_max = to_double(value, key);
    else if (key == "transmission_range") cfg.transmission_range = to_double(value, key);
    else if (key == "hello_interval") cfg.hello_interval = to_double(value, key);
    else if (key == "duration") cfg.duration = to_double(value, key);
    else if (key == "seed") cfg.seed = to_uint(value, key);
    else if (key == "horizon") cfg.horizon = to_double(value, key);
    else if (key == "oracle_dt") cfg.oracle_dt = to_double(value, key);
    else if (key == "snapshot_interval") cfg.snapshot_interval = to_double(value, key);
    else if (key == "altitude_base") cfg.altitude_base = to_double(value, key);
    else if (key == "altitude_step") cfg.altitude_step = to_double(value, key);
    else if (key.starts_with("uav.")) {
      const auto rest = std::string_view(key).substr(4);
      const auto dot = rest.find('.');
      const auto id = to_uint(rest.substr(0, dot), "uav index");
      if (dot == std::string_view::npos)
        scripted[id].initial = parse_trajectory_spec(value, 0.0);
      else if (rest.substr(dot + 1) == "change")
        pending_changes[id] = std::string(value);
      else
        throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  for (const auto& [id, list] : pending_changes) {
    if (!scripted.contains(id))
      throw ConfigError("uav." + std::to_string(id) + ".change given without uav." +
                        std::to_string(id));
    for (auto item : split(list, ';'))
      if (!item.empty())
        scripted[id].changes.push_back(parse_change(item));
  }
  for (std::uint64_t i = 0; i < scripted.size(); ++i) {
    if (!scripted.contains(i))
      throw ConfigError("scripted UAV indices must be contiguous from 0");
    cfg.scripted.push_back(scripted.at(i));
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

} // namespace uavllt
