#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folindex/rational.hpp"

namespace folindex {

using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

/// True when `a` divides `b` componentwise.
bool divides(const Exponent& a, const Exponent& b);

Exponent lcm(const Exponent& a, const Exponent& b);

/// Sparse multivariate polynomial over Q.
///
/// Terms live in a std::map keyed by exponent vector, so iteration order is
/// the (ascending) lexicographic order and is reproducible across runs.  Zero
/// coefficients are never stored.
class Poly {
public:
  using TermMap = std::map<Exponent, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  /// Highest total degree of a term, -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term (order of vanishing at the origin), -1 for zero.
  int order() const;

  void add_term(const Exponent& e, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned k) const;
  Poly mul_monomial(const Exponent& e, const Rational& c) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces x_i by images[i]; the result lives in the ring of the images.
  Poly substitute(std::span<const Poly> images) const;

  /// Drops every term of total degree >= bound.
  Poly truncate_degree(int bound) const;

  /// Embeds into a ring with more variables; variable i goes to slot map[i].
  Poly remap(std::size_t new_nvars, std::span<const std::size_t> map) const;

  std::string to_string(std::span<const std::string> names) const;
  /// Uses x1..xn as variable names.
  std::string to_string() const;

private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_i.
Poly partial_derivative(const Poly& p, std::size_t i);

/// Returns p(x + q), so the point q moves to the origin.
Poly translate_to_origin(const Poly& p, std::span<const Rational> q);

std::vector<std::string> default_names(std::size_t nvars);

}  // namespace folindex
