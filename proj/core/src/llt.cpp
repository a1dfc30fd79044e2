#include "uavllt/llt.hpp"

#include "uavllt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

namespace uavllt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<Trajectory, Trajectory> at_common_epoch(const Trajectory& a, const Trajectory& b) {
  const double epoch = std::max(a.epoch, b.epoch);
  return {a.epoch < epoch ? advance(a, epoch - a.epoch) : a,
          b.epoch < epoch ? advance(b, epoch - b.epoch) : b};
}

auto ordering_key(const Trajectory& t) {
  if (t.is_curve()) {
    const auto& c = t.curve();
    return std::make_tuple(0, c.center_x, c.center_y, c.radius, c.speed,
                           static_cast<double>(sign_of(c.direction)), c.initial_phase);
  }
  const auto& s = t.straight();
  return std::make_tuple(1, s.origin_x, s.origin_y, s.heading, s.speed, 0.0, 0.0);
}

// Case B is handled with the curve first; cases A and C in a fixed order so
// that swapping the arguments yields bit-identical arithmetic.
std::pair<Trajectory, Trajectory> canonical_pair(const Trajectory& a, const Trajectory& b) {
  if (ordering_key(b) < ordering_key(a))
    return {b, a};
  return {a, b};
}

// Adds k * t^shift * cos(c0 + c1 t), the cosine expanded through t^order.
void add_cos_series(std::vector<double>& coeffs, double k, double c0, double c1, int order,
                    int shift) {
  const double cs = std::cos(c0);
  const double sn = std::sin(c0);
  double scale = 1.0; // c1^j / j!
  for (int j = 0; j <= order; ++j) {
    double trig = 0.0;
    switch (j % 4) {
    case 0: trig = cs; break;
    case 1: trig = -sn; break;
    case 2: trig = -cs; break;
    default: trig = sn; break;
    }
    coeffs[static_cast<std::size_t>(j + shift)] += k * trig * scale;
    scale *= c1 / static_cast<double>(j + 1);
  }
}

struct StraightPairTerms {
  double quad, lin, constant;
};

StraightPairTerms straight_pair_terms(const StraightTrajectory& s1, const StraightTrajectory& s2) {
  const double dx = s1.origin_x - s2.origin_x;
  const double dy = s1.origin_y - s2.origin_y;
  const double v1 = s1.speed;
  const double v2 = s2.speed;
  return {
      v1 * v1 + v2 * v2 - 2.0 * v1 * v2 * std::cos(s1.heading - s2.heading),
      2.0 * v1 * (dx * std::cos(s1.heading) + dy * std::sin(s1.heading)) -
          2.0 * v2 * (dx * std::cos(s2.heading) + dy * std::sin(s2.heading)),
      dx * dx + dy * dy,
  };
}

// Bisection on the exact function for a bracket with g(lo) <= 0 < g(hi).
double bisect_exact(const DistanceFunction& exact_sq, double range_sq, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 1e-13 * std::max(1.0, hi))
      break;
    (exact_sq(mid) - range_sq <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Selection {
  std::optional<double> t;
  bool downward_first = false; // a downward crossing preceded any upward one
};

Selection select_root_detailed(std::span<const double> roots, const DistanceFunction& exact_sq,
                               double range, double trust) {
  Selection out;
  const double range_sq = range * range;
  const double slack = 1e-9 * std::max(1.0, trust);
  for (double r : roots) {
    if (r < -slack || r > trust + slack)
      continue;
    r = std::clamp(r, 0.0, trust);
    for (double delta = 1e-9 * std::max(1.0, trust); delta <= 0.05 * std::max(trust, 1e-3);
         delta *= 4.0) {
      const double lo = std::max(0.0, r - delta);
      const double hi = r + delta;
      const double g_lo = exact_sq(lo) - range_sq;
      const double g_hi = exact_sq(hi) - range_sq;
      if (g_lo <= 0.0 && g_hi > 0.0) {
        const double t = bisect_exact(exact_sq, range_sq, lo, hi);
        const double miss = std::abs(std::sqrt(std::max(0.0, exact_sq(t))) - range);
        if (t <= trust + slack && miss <= 0.01 * range) {
          out.t = t;
          return out;
        }
        break;
      }
      if (g_lo > 0.0 && g_hi <= 0.0) {
        out.downward_first = true;
        break;
      }
    }
  }
  return out;
}

// First upward crossing of the exact function on [0, len] by dense sampling.
std::optional<double> scan_exact(const DistanceFunction& exact_sq, double range, double len) {
  constexpr int kSamples = 512;
  const double range_sq = range * range;
  double prev = 0.0;
  for (int i = 1; i <= kSamples; ++i) {
    const double t = len * static_cast<double>(i) / kSamples;
    if (exact_sq(t) > range_sq)
      return bisect_exact(exact_sq, range_sq, prev, t);
    prev = t;
  }
  return std::nullopt;
}

LltResult finish_bounded(LltResult r, double t, double window_start, const DistanceFunction& exact,
                         double range) {
  r.llt = window_start + t;
  r.root = t;
  r.residual = std::abs(std::sqrt(std::max(0.0, exact(t))) - range);
  return r;
}

LltResult unbounded(LltResult r, double horizon) {
  r.llt.reset();
  r.root.reset();
  r.horizon_capped = true;
  r.horizon = horizon;
  return r;
}

LltResult solve_straight_pair(const Trajectory& a, const Trajectory& b, double range,
                              LltResult r) {
  const auto terms = straight_pair_terms(a.straight(), b.straight());
  const double v_scale = a.speed() * a.speed() + b.speed() * b.speed();
  const double c = terms.constant - range * range;
  const DistanceFunction exact = squared_link_distance(a, b);
  r.windows = 1;

  std::optional<double> t;
  if (terms.quad > 1e-12 * v_scale) {
    const double disc = std::max(0.0, terms.lin * terms.lin - 4.0 * terms.quad * c);
    const double q = -0.5 * (terms.lin + std::copysign(std::sqrt(disc), terms.lin));
    double hi = q / terms.quad;
    if (q != 0.0)
      hi = std::max(hi, c / q);
    t = std::max(0.0, hi);
  } else if (terms.lin > 0.0) {
    t = std::max(0.0, -c / terms.lin);
  }

  if (!t || *t > r.horizon)
    return unbounded(r, r.horizon);
  return finish_bounded(r, *t, 0.0, exact, range);
}

// Rigid co-rotation: the relative geometry repeats with the shared angular
// velocity, so the farthest separation is |center offset| + |R1 e^{i th1} - R2 e^{i th2}|.
double co_rotating_max_distance(const CurveTrajectory& c1, const CurveTrajectory& c2) {
  const double gap = std::hypot(c1.center_x - c2.center_x, c1.center_y - c2.center_y);
  const double wx = c1.radius * std::cos(c1.initial_phase) - c2.radius * std::cos(c2.initial_phase);
  const double wy = c1.radius * std::sin(c1.initial_phase) - c2.radius * std::sin(c2.initial_phase);
  return gap + std::hypot(wx, wy);
}

} // namespace

const char* to_string(LinkCase c) noexcept {
  switch (c) {
  case LinkCase::A: return "A";
  case LinkCase::B: return "B";
  case LinkCase::C: return "C";
  }
  return "?";
}

PairCase classify_case(const Trajectory& a, const Trajectory& b) {
  if (a.is_curve() && b.is_curve())
    return {LinkCase::A, false};
  if (a.is_straight() && b.is_straight())
    return {LinkCase::C, false};
  return {LinkCase::B, b.is_curve()};
}

double CaseGeometry::gap() const noexcept { return std::hypot(a, b); }

CaseGeometry case_geometry(double dx, double dy) {
  CaseGeometry g;
  g.a = std::abs(dx);
  g.b = std::abs(dy);
  g.sign1 = dx < 0.0 ? -1.0 : 1.0;
  g.sign2 = dy < 0.0 ? -1.0 : 1.0;
  const double gap = std::hypot(g.a, g.b);
  g.alpha = gap > 0.0 ? std::acos(std::clamp(g.a / gap, 0.0, 1.0)) : 0.0;
  return g;
}

DistanceFunction squared_link_distance(const Trajectory& a_in, const Trajectory& b_in) {
  auto [a, b] = at_common_epoch(a_in, b_in);
  const PairCase pc = classify_case(a, b);

  if (pc.kind == LinkCase::A) {
    const auto& c1 = a.curve();
    const auto& c2 = b.curve();
    const CaseGeometry g = case_geometry(c1.center_x - c2.center_x, c1.center_y - c2.center_y);
    const double gap = g.gap();
    const double shift = g.sign1 * g.sign2 * g.alpha;
    const double w1 = c1.angular_velocity();
    const double w2 = c2.angular_velocity();
    const double constant = g.a * g.a + g.b * g.b + c1.radius * c1.radius + c2.radius * c2.radius;
    return [=, r1 = c1.radius, r2 = c2.radius, th1 = c1.initial_phase,
            th2 = c2.initial_phase](double t) {
      return constant - 2.0 * r1 * r2 * std::cos((th1 - th2) + (w1 - w2) * t) +
             2.0 * g.sign1 * r1 * gap * std::cos(th1 + w1 * t - shift) -
             2.0 * g.sign1 * r2 * gap * std::cos(th2 + w2 * t - shift);
    };
  }

  if (pc.kind == LinkCase::B) {
    const auto& c = (pc.curve_is_second ? b : a).curve();
    const auto& s = (pc.curve_is_second ? a : b).straight();
    const CaseGeometry g = case_geometry(c.center_x - s.origin_x, c.center_y - s.origin_y);
    const double gap = g.gap();
    const double shift = g.sign1 * g.sign2 * g.alpha;
    const double w = c.angular_velocity();
    const double constant = g.a * g.a + g.b * g.b + c.radius * c.radius;
    const double drift = std::cos(s.heading - shift);
    return [=, r = c.radius, th = c.initial_phase, v = s.speed, psi = s.heading](double t) {
      const double vt = v * t;
      return vt * vt + constant + 2.0 * g.sign1 * r * gap * std::cos(th + w * t - shift) -
             2.0 * r * vt * std::cos(th + w * t - psi) - 2.0 * g.sign1 * gap * vt * drift;
    };
  }

  const auto terms = straight_pair_terms(a.straight(), b.straight());
  return [terms](double t) { return (terms.quad * t + terms.lin) * t + terms.constant; };
}

double expanded_squared_distance(const Trajectory& a_in, const Trajectory& b_in, double t) {
  auto [a, b] = at_common_epoch(a_in, b_in);
  const PairCase pc = classify_case(a, b);
  if (pc.kind == LinkCase::A) {
    const auto& c1 = a.curve();
    const auto& c2 = b.curve();
    const double dx = c1.center_x - c2.center_x;
    const double dy = c1.center_y - c2.center_y;
    const double p1 = c1.initial_phase + c1.angular_velocity() * t;
    const double p2 = c2.initial_phase + c2.angular_velocity() * t;
    return dx * dx + dy * dy + c1.radius * c1.radius + c2.radius * c2.radius -
           2.0 * c1.radius * c2.radius * std::cos(p1 - p2) +
           2.0 * c1.radius * (dx * std::cos(p1) + dy * std::sin(p1)) -
           2.0 * c2.radius * (dx * std::cos(p2) + dy * std::sin(p2));
  }
  if (pc.kind == LinkCase::B) {
    const auto& c = (pc.curve_is_second ? b : a).curve();
    const auto& s = (pc.curve_is_second ? a : b).straight();
    const double dx = c.center_x - s.origin_x;
    const double dy = c.center_y - s.origin_y;
    const double p = c.initial_phase + c.angular_velocity() * t;
    const double vt = s.speed * t;
    return dx * dx + dy * dy + c.radius * c.radius + vt * vt +
           2.0 * c.radius * (dx * std::cos(p) + dy * std::sin(p)) -
           2.0 * vt * (dx * std::cos(s.heading) + dy * std::sin(s.heading)) -
           2.0 * c.radius * vt * std::cos(p - s.heading);
  }
  const double d = planar_distance(a, b, t);
  return d * d;
}

Polynomial taylor_link_polynomial(const Trajectory& a_in, const Trajectory& b_in, int degree) {
  if (degree < 2)
    throw Error("taylor_link_polynomial: degree must be at least 2");
  auto [a, b] = at_common_epoch(a_in, b_in);
  const PairCase pc = classify_case(a, b);
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);

  if (pc.kind == LinkCase::A) {
    const auto& c1 = a.curve();
    const auto& c2 = b.curve();
    const CaseGeometry g = case_geometry(c1.center_x - c2.center_x, c1.center_y - c2.center_y);
    const double gap = g.gap();
    const double shift = g.sign1 * g.sign2 * g.alpha;
    const double w1 = c1.angular_velocity();
    const double w2 = c2.angular_velocity();
    coeffs[0] += g.a * g.a + g.b * g.b + c1.radius * c1.radius + c2.radius * c2.radius;
    add_cos_series(coeffs, -2.0 * c1.radius * c2.radius, c1.initial_phase - c2.initial_phase,
                   w1 - w2, degree, 0);
    add_cos_series(coeffs, 2.0 * g.sign1 * c1.radius * gap, c1.initial_phase - shift, w1, degree,
                   0);
    add_cos_series(coeffs, -2.0 * g.sign1 * c2.radius * gap, c2.initial_phase - shift, w2, degree,
                   0);
    return Polynomial(std::move(coeffs));
  }

  if (pc.kind == LinkCase::B) {
    const auto& c = (pc.curve_is_second ? b : a).curve();
    const auto& s = (pc.curve_is_second ? a : b).straight();
    const CaseGeometry g = case_geometry(c.center_x - s.origin_x, c.center_y - s.origin_y);
    const double gap = g.gap();
    const double shift = g.sign1 * g.sign2 * g.alpha;
    const double w = c.angular_velocity();
    coeffs[0] += g.a * g.a + g.b * g.b + c.radius * c.radius;
    coeffs[1] += -2.0 * g.sign1 * gap * s.speed * std::cos(s.heading - shift);
    coeffs[2] += s.speed * s.speed;
    add_cos_series(coeffs, 2.0 * g.sign1 * c.radius * gap, c.initial_phase - shift, w, degree, 0);
    add_cos_series(coeffs, -2.0 * c.radius * s.speed, c.initial_phase - s.heading, w, degree - 1,
                   1);
    return Polynomial(std::move(coeffs));
  }

  const auto terms = straight_pair_terms(a.straight(), b.straight());
  return Polynomial{terms.constant, terms.lin, terms.quad};
}

std::optional<double> select_root(std::span<const double> roots, const DistanceFunction& exact_sq,
                                  double range, double trust) {
  return select_root_detailed(roots, exact_sq, range, trust).t;
}

double LltResult::predicted_break() const noexcept {
  return llt ? anchor_time + *llt : kInf;
}

double trust_radius(const Trajectory& a, const Trajectory& b, double trust_angle) {
  double rate = std::max(a.turn_rate(), b.turn_rate());
  if (a.is_curve() && b.is_curve())
    rate = std::max(rate, std::abs(a.curve().angular_velocity() - b.curve().angular_velocity()));
  return rate > 0.0 ? trust_angle / rate : kInf;
}

LltResult compute_llt(const Trajectory& a_in, const Trajectory& b_in, double range,
                      const LltOptions& options) {
  if (!(range > 0.0))
    throw Error("compute_llt: range must be positive");
  auto [anchored_a, anchored_b] = at_common_epoch(a_in, b_in);
  auto [a, b] = canonical_pair(anchored_a, anchored_b);

  LltResult result;
  result.case_used = classify_case(a, b).kind;
  result.anchor_time = a.epoch;
  result.horizon = options.horizon;

  if (planar_distance(a, b, 0.0) > range * (1.0 + 1e-9))
    throw LinkNotUp("compute_llt: pair is out of range at the anchor time");

  if (result.case_used == LinkCase::C)
    return solve_straight_pair(a, b, range, result);

  if (result.case_used == LinkCase::A &&
      a.curve().angular_velocity() == b.curve().angular_velocity() &&
      co_rotating_max_distance(a.curve(), b.curve()) <= range) {
    result.windows = 0;
    return unbounded(result, options.horizon);
  }

  const double window = trust_radius(a, b, options.trust_angle);
  const double range_sq = range * range;
  // the separation changes no faster than the sum of the speeds
  const double closing_bound = a.speed() + b.speed();
  const DistanceFunction whole = squared_link_distance(a, b);
  double start = 0.0;
  while (start < options.horizon) {
    const double len = std::min(window, options.horizon - start);
    ++result.windows;
    if (std::sqrt(whole(start)) + closing_bound * len < range * (1.0 - 1e-9)) {
      start += len;
      continue;
    }
    const Trajectory wa = advance(a, start);
    const Trajectory wb = advance(b, start);
    const DistanceFunction exact = squared_link_distance(wa, wb);

    Polynomial poly = taylor_link_polynomial(wa, wb, options.taylor_degree) - Polynomial{range_sq};
    std::vector<double> roots;
    if (!poly.is_zero()) {
      const double slack = 1e-9 * std::max(1.0, len);
      roots = find_real_roots_in(poly, -slack, len + slack);
    }
    const Selection sel = select_root_detailed(roots, exact, range, len);

    if (sel.downward_first || (!sel.t && exact(len) > range_sq)) {
      // the polynomial missed an upward crossing; locate it on the exact curve
      const auto t = scan_exact(exact, range, sel.t ? *sel.t : len);
      if (t || sel.t) {
        result.fallback_used = t.has_value();
        return finish_bounded(result, t ? *t : *sel.t, start, exact, range);
      }
    } else if (sel.t) {
      return finish_bounded(result, *sel.t, start, exact, range);
    }
    start += len;
  }
  return unbounded(result, options.horizon);
}

LltResult compute_llt(const UavState& a, const UavState& b, double range, double horizon) {
  LltOptions options;
  options.horizon = horizon;
  return compute_llt(a.trajectory, b.trajectory, range, options);
}

} // namespace uavllt
