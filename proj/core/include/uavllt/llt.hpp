#pragma once

#include "uavllt/kinematics.hpp"
#include "uavllt/polynomial.hpp"
#include "uavllt/uav_state.hpp"

#include <functional>
#include <numbers>
#include <optional>
#include <span>

namespace uavllt {

/// A: both UAVs turning. B: one turning, one straight. C: both straight.
enum class LinkCase { A, B, C };

const char* to_string(LinkCase c) noexcept;

struct PairCase {
  LinkCase kind = LinkCase::C;
  /// Case B only: the curve is the second argument.
  bool curve_is_second = false;
};

PairCase classify_case(const Trajectory& a, const Trajectory& b);

/// Magnitude/sign decomposition of a center offset (dx, dy), with alpha the
/// angle of (|dx|, |dy|) from the X axis. A zero gap takes sign +1.
struct CaseGeometry {
  double a = 0.0;
  double b = 0.0;
  double sign1 = 1.0;
  double sign2 = 1.0;
  double alpha = 0.0;

  double gap() const noexcept;
};

CaseGeometry case_geometry(double dx, double dy);

using DistanceFunction = std::function<double(double)>;

/// Exact squared planar link distance as a function of time since the common
/// epoch, in the sign/alpha form for turning pairs and the quadratic form for
/// straight pairs. Trajectories with different epochs are first advanced to
/// the later one.
DistanceFunction squared_link_distance(const Trajectory& a, const Trajectory& b);

/// The same quantity from the center-offset expansion (no sign/alpha
/// rewriting). Used to cross-check the two algebraic routes.
double expanded_squared_distance(const Trajectory& a, const Trajectory& b, double t);

/// Taylor polynomial in t of the squared link distance, each trigonometric
/// term cos(c0 + c1 t) expanded to t^degree. Exact quadratic for case C.
Polynomial taylor_link_polynomial(const Trajectory& a, const Trajectory& b, int degree = 12);

/// Smallest root in [0, trust_radius] at which the exact distance crosses the
/// range upward, polished by bisection on the exact function.
std::optional<double> select_root(std::span<const double> roots, const DistanceFunction& exact_sq,
                                  double range, double trust_radius);

struct LltOptions {
  double horizon = 3600.0;
  int taylor_degree = 12;
  /// Expansion window: the fastest trigonometric argument sweeps at most this
  /// many radians. 0.5 keeps the degree-12 remainder below 1e-6 relative
  /// even for close approaches; pi/2 does not.
  double trust_angle = 0.5;
};

struct LltResult {
  std::optional<double> llt; // empty means unbounded within the horizon
  LinkCase case_used = LinkCase::C;
  std::optional<double> root; // accepted root, relative to its expansion window
  double residual = 0.0;      // |exact distance at break - range|, meters
  bool horizon_capped = false;
  double horizon = 0.0;
  double anchor_time = 0.0; // absolute time t = 0 refers to
  int windows = 0;          // expansion windows examined
  bool fallback_used = false;

  bool bounded() const noexcept { return llt.has_value(); }
  /// Absolute predicted break time, or +inf.
  double predicted_break() const noexcept;
};

/// Window length over which the degree-limited expansion is trusted.
double trust_radius(const Trajectory& a, const Trajectory& b, double trust_angle);

LltResult compute_llt(const Trajectory& a, const Trajectory& b, double range,
                      const LltOptions& options = {});

LltResult compute_llt(const UavState& a, const UavState& b, double range, double horizon);

} // namespace uavllt
