#include "folindex/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "folindex/errors.hpp"

namespace folindex {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rational(1));
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && folindex::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(folindex::total_degree(e)));
  return d;
}

int Poly::order() const {
  if (terms_.empty()) return -1;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int k = static_cast<int>(folindex::total_degree(e));
    if (d < 0 || k < d) d = k;
  }
  return d;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::RingMismatch, "exponent length differs from nvars");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

static void check_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::RingMismatch, "polynomials live in rings of different size");
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_ring(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::mul_monomial(const Exponent& m, const Rational& c) const {
  Poly out(nvars_);
  if (sgn(c) == 0) return out;
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + m[i];
    out.terms_.emplace_hint(out.terms_.end(), e, ca * c);
  }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::RingMismatch, "point dimension differs from nvars");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw Error(ErrorKind::RingMismatch, "substitution arity differs from nvars");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw Error(ErrorKind::RingMismatch, "substitution images disagree on ring");
  // Power cache per variable.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(target, Rational(1)));
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Poly Poly::truncate_degree(int bound) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(folindex::total_degree(e)) < bound) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

Poly Poly::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw Error(ErrorKind::RingMismatch, "variable map arity differs from nvars");
  Poly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f[map[i]] += e[i];
    out.add_term(f, c);
  }
  return out;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string Poly::to_string() const { return to_string(default_names(nvars_)); }

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  // Print by descending total degree, ties by descending lex.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    auto da = folindex::total_degree(a->first), db = folindex::total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = folindex::total_degree(e) == 0;
    bool wrote = false;
    if (is_const || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly partial_derivative(const Poly& p, std::size_t i) {
  if (i >= p.nvars()) throw Error(ErrorKind::InvalidArgument, "derivative variable out of range");
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    out.add_term(f, c * e[i]);
  }
  return out;
}

Poly translate_to_origin(const Poly& p, std::span<const Rational> q) {
  if (q.size() != p.nvars()) throw Error(ErrorKind::RingMismatch, "point dimension differs from nvars");
  bool trivial = std::all_of(q.begin(), q.end(), [](const Rational& c) { return sgn(c) == 0; });
  if (trivial) return p;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    images.push_back(Poly::variable(p.nvars(), i) + Poly::constant(p.nvars(), q[i]));
  return p.substitute(images);
}

}  // namespace folindex
