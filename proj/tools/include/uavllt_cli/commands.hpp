#pragma once

#include <uavllt/llt.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uavllt::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;    // runtime error or validation failure
inline constexpr int kBadInput = 2;   // flag, spec, config or CSV error
inline constexpr int kLinkNotUp = 3;
inline constexpr int kUnreachable = 4;

struct PairOptions {
  std::string a;
  std::string b;
  double range = 0.0;
  double horizon = 3600.0;
  bool oracle = false;
  double oracle_dt = 1e-3;
};

struct SimulateOptions {
  std::filesystem::path config;
  std::filesystem::path out = "out";
  std::optional<std::uint64_t> seed;
};

struct RouteOptions {
  std::filesystem::path csv;
  std::string src;
  std::string dst;
  std::optional<double> time; // snapshot to use; latest when absent
};

struct ValidateOptions {
  std::string which = "all"; // A, B, C or all
  int trials = 100;
  std::uint64_t seed = 1;
  double horizon = 300.0;
  double dt = 1e-3;
};

int cmd_pair(const PairOptions& o, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err);
int cmd_route(const RouteOptions& o, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace uavllt::cli
