#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace uavllt {

/// Real polynomial with coefficients stored in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);
  Polynomial(std::initializer_list<double> ascending);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double coefficient(int power) const noexcept;
  double max_abs_coefficient() const noexcept;

  double operator()(double t) const noexcept;
  /// Sum of |c_i| |t|^i, the scale of rounding error in operator().
  double magnitude(double t) const noexcept;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double k) { return a *= k; }
  friend Polynomial operator*(double k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Keeps terms up to and including t^max_degree.
  Polynomial truncated(int max_degree) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<double> coeffs_;
};

/// All real roots in ascending order; throws ZeroPolynomial for p == 0.
/// Roots are isolated between consecutive critical points (found recursively
/// from the derivative) and polished with safeguarded Newton iteration.
std::vector<double> find_real_roots(const Polynomial& p);

/// Real roots restricted to [lo, hi], ascending.
std::vector<double> find_real_roots_in(const Polynomial& p, double lo, double hi);

/// Upper bound on the magnitude of every root (Cauchy).
double root_bound(const Polynomial& p);

} // namespace uavllt
