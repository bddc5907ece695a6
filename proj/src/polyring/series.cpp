#include "folindex/series.hpp"

#include <algorithm>
#include <sstream>

#include "folindex/errors.hpp"

namespace folindex {

Series::Series(std::vector<Rational> coeffs, int precision) : coeffs_(std::move(coeffs)), precision_(precision) {
  if (precision < 0) throw Error(ErrorKind::InvalidArgument, "negative series precision");
  trim();
}

void Series::trim() {
  if (static_cast<int>(coeffs_.size()) > precision_) coeffs_.resize(precision_);
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Series Series::constant(const Rational& c, int precision) { return Series({c}, precision); }

Series Series::parameter(int precision) { return monomial(Rational(1), 1, precision); }

Series Series::monomial(const Rational& c, int k, int precision) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Series(std::move(v), precision);
}

Rational Series::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

int Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  return -1;
}

Series& Series::operator+=(const Series& o) {
  precision_ = std::min(precision_, o.precision_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Series& Series::operator-=(const Series& o) {
  precision_ = std::min(precision_, o.precision_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  // a = t^va * a', b = t^vb * b' so the product is known to va+vb+min(pa-va, pb-vb).
  int va = std::max(a.valuation(), 0), vb = std::max(b.valuation(), 0);
  int prec = std::min(a.precision_ + vb, b.precision_ + va);
  std::vector<Rational> out(std::max(prec, 0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < prec; ++j) {
      tmp = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += tmp;
    }
  }
  return Series(std::move(out), std::max(prec, 0));
}

Series operator*(const Rational& c, Series a) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

Series Series::operator-() const { return Rational(-1) * *this; }

Series Series::inverse() const {
  if (sgn(coefficient(0)) == 0) throw Error(ErrorKind::InvalidArgument, "series without constant term is not invertible");
  std::vector<Rational> inv(precision_);
  Rational c0inv = 1 / coeffs_[0];
  if (precision_ > 0) inv[0] = c0inv;
  for (int k = 1; k < precision_; ++k) {
    Rational s(0);
    for (int i = 1; i <= k && i < static_cast<int>(coeffs_.size()); ++i) s += coeffs_[i] * inv[k - i];
    inv[k] = -s * c0inv;
  }
  return Series(std::move(inv), precision_);
}

Series Series::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Series(std::move(out), std::max(precision_ - 1, 0));
}

Series Series::truncate(int p) const {
  Series s = *this;
  s.precision_ = std::min(p, precision_);
  s.trim();
  return s;
}

Series Series::shift_down(int k) const {
  for (int i = 0; i < k; ++i)
    if (sgn(coefficient(i)) != 0) throw Error(ErrorKind::InvalidArgument, "series not divisible by t^k");
  std::vector<Rational> out;
  for (std::size_t i = k; i < coeffs_.size(); ++i) out.push_back(coeffs_[i]);
  return Series(std::move(out), std::max(precision_ - k, 0));
}

std::string Series::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str() << (i == 0 ? "" : "*");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Branch Branch::truncate(int p) const {
  Branch b;
  b.order = std::min(p, order);
  for (const auto& c : comps) b.comps.push_back(c.truncate(b.order));
  return b;
}

Series compose(const Poly& p, const Branch& b) {
  if (p.nvars() != b.dim()) throw Error(ErrorKind::RingMismatch, "branch dimension differs from polynomial ring");
  std::vector<std::vector<Series>> powers(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) powers[i].push_back(Series::constant(Rational(1), b.order));
  auto power = [&](std::size_t i, std::uint32_t k) -> const Series& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * b.comps[i]);
    return powers[i][k];
  };
  Series out(std::vector<Rational>{}, b.order);
  for (const auto& [e, c] : p.terms()) {
    Series t = Series::constant(c, b.order);
    for (std::size_t i = 0; i < b.dim(); ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out += t;
  }
  return out.truncate(b.order);
}

Branch newton_lift(const Poly& f, std::size_t solve_var, int order) {
  if (f.nvars() != 2 || solve_var > 1) throw Error(ErrorKind::InvalidArgument, "newton lift is implemented for plane curves");
  std::vector<Rational> zero(2);
  if (sgn(f.evaluate(zero)) != 0) throw Error(ErrorKind::InvalidBranch, "curve does not pass through the origin");
  Poly fs = partial_derivative(f, solve_var);
  if (sgn(fs.evaluate(zero)) == 0) throw Error(ErrorKind::InvalidBranch, "curve is not smooth in the chosen direction");
  std::size_t param = 1 - solve_var;
  Branch b;
  b.order = order;
  b.comps.resize(2);
  b.comps[param] = Series::parameter(order);
  // phi = 0 is correct modulo t.
  Series phi(std::vector<Rational>{}, order);
  int prec = 1;
  while (prec < order) {
    prec = std::min(2 * prec, order);
    Branch cur;
    cur.order = prec;
    cur.comps.resize(2);
    cur.comps[param] = Series::parameter(prec);
    cur.comps[solve_var] = Series(phi.coeffs(), prec);
    Series val = compose(f, cur);
    Series der = compose(fs, cur);
    phi = Series(phi.coeffs(), prec) - val * der.inverse();
  }
  b.comps[solve_var] = Series(phi.coeffs(), order);
  return b;
}

}  // namespace folindex
