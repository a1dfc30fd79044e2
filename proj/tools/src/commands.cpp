#include "uavllt_cli/commands.hpp"

#include "uavllt_cli/edge_list.hpp"
#include "uavllt_cli/sampling.hpp"

#include <uavllt/errors.hpp>
#include <uavllt/format.hpp>
#include <uavllt/network.hpp>
#include <uavllt/oracle.hpp>
#include <uavllt/routing.hpp>
#include <uavllt/scenario.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <vector>

namespace uavllt::cli {

namespace {

std::string seconds(double v) { return format_double(v); }

std::string describe(const LltResult& r) {
  if (r.bounded())
    return seconds(*r.llt) + " s";
  return "unbounded (horizon-capped at " + seconds(r.horizon) + " s)";
}

} // namespace

int cmd_pair(const PairOptions& o, std::ostream& out, std::ostream& err) {
  Trajectory a, b;
  try {
    a = parse_trajectory_spec(o.a);
    b = parse_trajectory_spec(o.b);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  if (!(o.range > 0.0) || !(o.horizon > 0.0)) {
    err << "error: --range and --horizon must be positive\n";
    return kBadInput;
  }

  LltOptions opt;
  opt.horizon = o.horizon;
  LltResult r;
  try {
    r = compute_llt(a, b, o.range, opt);
  } catch (const LinkNotUp& e) {
    err << "error: " << e.what() << '\n';
    return kLinkNotUp;
  }
  out << "case: " << to_string(r.case_used) << '\n';
  out << "llt: " << describe(r) << '\n';
  out << "residual: " << format_double(r.residual) << " m\n";
  if (o.oracle) {
    const auto bf = brute_force_llt(a, b, o.range, o.oracle_dt, o.horizon);
    out << "oracle: " << (bf ? seconds(*bf) + " s" : std::string("unbounded")) << '\n';
    if (bf && r.bounded())
      out << "abs_diff: " << format_double(std::abs(*bf - *r.llt)) << " s\n";
    else if (bf.has_value() != r.bounded())
      out << "abs_diff: verdicts differ\n";
  }
  return kOk;
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_scenario(o.config);
    if (o.seed)
      config.seed = *o.seed;
    config.validate();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  const SimulationOutput result = run_simulation(config);
  write_simulation_outputs(result, o.out);
  out << result.summary.to_string() << '\n';
  return kOk;
}

int cmd_route(const RouteOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.csv);
  if (!in) {
    err << "error: cannot read " << o.csv.string() << '\n';
    return kBadInput;
  }
  std::optional<Route<NodeName>> route;
  try {
    const auto graph = snapshot_graph(read_edge_list(in), o.time);
    route = max_min_route(graph, NodeName{o.src}, NodeName{o.dst});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  if (!route) {
    out << "unreachable\n";
    return kUnreachable;
  }
  for (std::size_t i = 0; i < route->nodes.size(); ++i)
    out << (i ? " " : "") << route->nodes[i];
  out << ", bottleneck " << format_double(route->bottleneck_llt) << '\n';
  return kOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<LinkCase> cases;
  if (o.which == "all")
    cases = {LinkCase::A, LinkCase::B, LinkCase::C};
  else if (o.which == "A" || o.which == "a")
    cases = {LinkCase::A};
  else if (o.which == "B" || o.which == "b")
    cases = {LinkCase::B};
  else if (o.which == "C" || o.which == "c")
    cases = {LinkCase::C};
  else {
    err << "error: --case must be A, B, C or all\n";
    return kBadInput;
  }
  if (o.trials < 1 || !(o.dt > 0.0) || !(o.horizon > 0.0)) {
    err << "error: --trials, --dt and --horizon must be positive\n";
    return kBadInput;
  }

  out << "case trials bounded max_abs_err_s mean_abs_err_s verdict_mismatch failures\n";
  bool ok = true;
  for (LinkCase kind : cases) {
    // one stream per case so filtering by case does not change the instances
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(kind)};
    Rng rng(seq);
    int bounded = 0, mismatch = 0, failures = 0;
    double max_err = 0.0, sum_err = 0.0;
    for (int i = 0; i < o.trials; ++i) {
      const SampledPair p = sample_pair(rng, kind);
      LltOptions opt;
      opt.horizon = o.horizon;
      const LltResult got = compute_llt(p.a, p.b, p.range, opt);
      const auto want = brute_force_llt(p.a, p.b, p.range, o.dt, o.horizon);
      if (want && *want > o.horizon - 2.0 * o.dt)
        continue; // break too close to the horizon to call either way
      if (got.bounded() != want.has_value()) {
        ++mismatch;
        ++failures;
        continue;
      }
      if (!want)
        continue;
      ++bounded;
      const double e = std::abs(*got.llt - *want);
      const double tol = kind == LinkCase::C ? 1e-3 : std::max(2.0 * o.dt, 1e-3 * *want);
      max_err = std::max(max_err, e);
      sum_err += e;
      failures += e > tol;
    }
    out << to_string(kind) << ' ' << o.trials << ' ' << bounded << ' ' << format_double(max_err)
        << ' ' << format_double(bounded ? sum_err / bounded : 0.0) << ' ' << mismatch << ' '
        << failures << '\n';
    ok = ok && failures == 0;
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link lifetime prediction for UAV pairs on smooth trajectories"};
  app.require_subcommand(1);

  PairOptions pair;
  auto* p = app.add_subcommand("pair", "LLT of two trajectories");
  p->add_option("a", pair.a, "curve:cx,cy,r,v,dir,theta,z or straight:x,y,heading,v,z")->required();
  p->add_option("b", pair.b, "second trajectory")->required();
  p->add_option("--range", pair.range, "transmission range, m")->required();
  p->add_option("--horizon", pair.horizon, "search horizon, s");
  p->add_flag("--oracle", pair.oracle, "also run the brute-force search");
  p->add_option("--dt", pair.oracle_dt, "brute-force step, s");

  SimulateOptions sim;
  std::uint64_t sim_seed = 0;
  auto* s = app.add_subcommand("simulate", "run a network simulation");
  s->add_option("config", sim.config, "key=value scenario file")->required();
  s->add_option("--out", sim.out, "output directory");
  auto* seed_opt = s->add_option("--seed", sim_seed, "override the scenario seed");

  RouteOptions route;
  double route_time = 0.0;
  auto* r = app.add_subcommand("route", "max-min LLT route in a snapshot CSV");
  r->add_option("csv", route.csv, "t_s,node_a,node_b,llt_s edge list")->required();
  r->add_option("src", route.src)->required();
  r->add_option("dst", route.dst)->required();
  auto* time_opt = r->add_option("--time", route_time, "snapshot time (default: latest)");

  ValidateOptions val;
  auto* v = app.add_subcommand("validate", "analytic LLT against the brute-force oracle");
  v->add_option("--case", val.which, "A, B, C or all");
  v->add_option("--trials", val.trials, "instances per case");
  v->add_option("--seed", val.seed);
  v->add_option("--horizon", val.horizon, "search horizon, s");
  v->add_option("--dt", val.dt, "brute-force step, s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*p)
      return cmd_pair(pair, out, err);
    if (*s) {
      if (*seed_opt)
        sim.seed = sim_seed;
      return cmd_simulate(sim, out, err);
    }
    if (*r) {
      if (*time_opt)
        route.time = route_time;
      return cmd_route(route, out, err);
    }
    return cmd_validate(val, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace uavllt::cli
