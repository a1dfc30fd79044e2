#include "uavllt/oracle.hpp"

#include "uavllt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace uavllt {

std::optional<double> brute_force_break(const std::function<double(double)>& distance,
                                        double range, double dt, double horizon) {
  if (!(dt > 0.0))
    throw Error("brute_force_llt: dt must be positive");
  if (distance(0.0) > range * (1.0 + 1e-9))
    throw LinkNotUp("brute_force_llt: pair is out of range at t = 0");

  double prev = 0.0;
  for (long long k = 1;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t > horizon)
      return std::nullopt;
    if (distance(t) > range) {
      double lo = prev;
      double hi = t;
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (distance(mid) > range ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = t;
  }
}

std::optional<double> brute_force_llt(const Trajectory& a, const Trajectory& b, double range,
                                      double dt, double horizon) {
  // measure time from the later epoch, as the analytic solver does
  const double epoch = std::max(a.epoch, b.epoch);
  const double off_a = epoch - a.epoch;
  const double off_b = epoch - b.epoch;
  return brute_force_break(
      [&](double t) {
        const Position pa = position_at(a, off_a + t);
        const Position pb = position_at(b, off_b + t);
        return std::hypot(pa.x - pb.x, pa.y - pb.y);
      },
      range, dt, horizon);
}

std::optional<double> brute_force_llt(const UavState& a, const UavState& b, double range,
                                      double dt, double horizon) {
  return brute_force_llt(a.trajectory, b.trajectory, range, dt, horizon);
}

} // namespace uavllt
