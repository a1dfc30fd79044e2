#include "uavllt/polynomial.hpp"

#include "uavllt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uavllt {

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0)
    coeffs_.pop_back();
}

double Polynomial::coefficient(int power) const noexcept {
  if (power < 0 || power > degree())
    return 0.0;
  return coeffs_[static_cast<std::size_t>(power)];
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double c : coeffs_)
    m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

double Polynomial::magnitude(double t) const noexcept {
  const double at = std::abs(t);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double k) {
  for (double& c : coeffs_)
    c *= k;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::truncated(int max_degree) const {
  if (max_degree < 0)
    return {};
  if (max_degree >= degree())
    return *this;
  return Polynomial(std::vector<double>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

double root_bound(const Polynomial& p) {
  if (p.degree() < 1)
    return 0.0;
  const auto c = p.coefficients();
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    m = std::max(m, std::abs(c[i]) / lead);
  return 1.0 + m;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_zero(const Polynomial& p, double t) {
  return std::abs(p(t)) <= 8.0 * kEps * (p.degree() + 1) * p.magnitude(t);
}

// Root of p in [lo, hi] given p(lo) and p(hi) of opposite sign.
double polish(const Polynomial& p, const Polynomial& dp, double lo, double hi, double f_lo) {
  // orient so that p(neg) < 0 < p(pos)
  double neg = f_lo < 0.0 ? lo : hi;
  double pos = f_lo < 0.0 ? hi : lo;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = p(x);
    if (f == 0.0)
      return x;
    (f < 0.0 ? neg : pos) = x;
    const double df = dp(x);
    double next = df != 0.0 ? x - f / df : std::numeric_limits<double>::quiet_NaN();
    const double a = std::min(neg, pos);
    const double b = std::max(neg, pos);
    if (!(next > a && next < b))
      next = 0.5 * (a + b);
    if (next == x || b - a <= 2.0 * kEps * std::max(1.0, std::abs(x)))
      return next;
    x = next;
  }
  return x;
}

std::vector<double> roots_in(const Polynomial& p, double lo, double hi) {
  std::vector<double> out;
  const int n = p.degree();
  if (n < 1 || lo > hi)
    return out;
  if (n == 1) {
    const double r = -p.coefficient(0) / p.coefficient(1);
    if (r >= lo && r <= hi)
      out.push_back(r);
    return out;
  }

  const Polynomial dp = p.derivative();
  std::vector<double> knots;
  knots.push_back(lo);
  for (double c : roots_in(dp, lo, hi))
    if (c > knots.back())
      knots.push_back(c);
  if (hi > knots.back())
    knots.push_back(hi);

  // p is monotone between consecutive knots, so each piece holds at most one root
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double x = knots[i];
    if (near_zero(p, x)) {
      out.push_back(x);
      continue;
    }
    if (i + 1 == knots.size())
      break;
    const double y = knots[i + 1];
    if (near_zero(p, y))
      continue;
    const double fx = p(x);
    const double fy = p(y);
    if ((fx < 0.0) != (fy < 0.0))
      out.push_back(polish(p, dp, x, y, fx));
  }

  std::sort(out.begin(), out.end());
  std::vector<double> unique;
  for (double r : out)
    if (unique.empty() || r - unique.back() > 4.0 * kEps * std::max(1.0, std::abs(r)))
      unique.push_back(r);
  return unique;
}

} // namespace

std::vector<double> find_real_roots_in(const Polynomial& p, double lo, double hi) {
  if (p.is_zero())
    throw ZeroPolynomial("find_real_roots: polynomial is identically zero");
  return roots_in(p, lo, hi);
}

std::vector<double> find_real_roots(const Polynomial& p) {
  if (p.is_zero())
    throw ZeroPolynomial("find_real_roots: polynomial is identically zero");
  const double bound = root_bound(p);
  return roots_in(p, -bound, bound);
}

} // namespace uavllt
