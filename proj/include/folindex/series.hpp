#pragma once

#include <vector>

#include "folindex/poly.hpp"

namespace folindex {

/// Univariate power series in t with rational coefficients, known modulo
/// t^precision.  Coefficient i is the coefficient of t^i; entries at or above
/// the precision are never stored.
class Series {
public:
  Series() = default;
  Series(std::vector<Rational> coeffs, int precision);

  static Series constant(const Rational& c, int precision);
  /// The parameter t itself.
  static Series parameter(int precision);
  /// c * t^k.
  static Series monomial(const Rational& c, int k, int precision);

  int precision() const { return precision_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(int i) const;

  /// Index of the first nonzero coefficient, or -1 when the series is zero to
  /// the known precision.
  int valuation() const;
  bool is_zero() const { return valuation() < 0; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, Series a);
  Series operator-() const;

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;
  Series derivative() const;
  /// Drops coefficients at or above p and lowers the precision to p.
  Series truncate(int p) const;
  /// Divides by t^k; the first k coefficients must vanish.
  Series shift_down(int k) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Series&, const Series&) = default;

private:
  void trim();

  std::vector<Rational> coeffs_;
  int precision_ = 0;
};

/// Parametrized curve germ t -> (x_1(t), ..., x_n(t)).
struct Branch {
  std::vector<Series> comps;
  int order = 0;

  std::size_t dim() const { return comps.size(); }
  Branch truncate(int p) const;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// p(x_1(t), ..., x_n(t)) modulo t^precision of the branch.
Series compose(const Poly& p, const Branch& b);

/// For f with f(0) = 0 and df/dx_solve(0) != 0, the smooth branch through the
/// origin parametrized by the remaining variable (n = 2 only): x_param = t,
/// x_solve = phi(t) with f(t, phi(t)) = 0 mod t^order.  Newton iteration
/// doubles the precision at each step.
Branch newton_lift(const Poly& f, std::size_t solve_var, int order);

}  // namespace folindex
