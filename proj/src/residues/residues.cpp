#include "folindex/residues.hpp"

#include <sstream>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/indices.hpp"

namespace folindex {

namespace {

// Drops every monomial with some exponent >= N; multiplication followed by
// this truncation is multiplication in C[x]/(x_1^N, ..., x_n^N).
Poly box_truncate(const Poly& p, std::size_t N) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    bool inside = true;
    for (auto k : e) inside = inside && k < N;
    if (inside) out.add_term(e, c);
  }
  return out;
}

Poly box_mul(const Poly& a, const Poly& b, std::size_t N) { return box_truncate(a * b, N); }

// Inverse of a unit modulo (x_i^N): u = u0 (1 - r) gives u^-1 = u0^-1 sum r^k.
Poly box_inverse(const Poly& u, std::size_t N) {
  Rational u0 = u.constant_term();
  if (sgn(u0) == 0) throw Error(ErrorKind::InvalidArgument, "inverting a non-unit");
  std::size_t n = u.nvars();
  Poly r = Poly::constant(n, Rational(1)) - u * (1 / u0);
  Poly sum = Poly::constant(n, Rational(1)), power = sum;
  for (std::size_t k = 1; k <= n * (N - 1); ++k) {
    power = box_mul(power, r, N);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * (1 / u0);
}

}  // namespace

PhiSpec PhiSpec::monomial(std::vector<unsigned> exps, Rational coef) {
  PhiSpec s;
  s.terms.emplace_back(coef, std::move(exps));
  return s;
}

PhiSpec PhiSpec::top(std::size_t n) {
  std::vector<unsigned> e(n, 0);
  e[n - 1] = 1;
  return monomial(e);
}

std::size_t PhiSpec::weighted_degree() const {
  std::size_t d = 0;
  bool first = true;
  for (const auto& [c, e] : terms) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += (i + 1) * e[i];
    if (!first && w != d) throw Error(ErrorKind::InvalidArgument, "phi is not weighted-homogeneous");
    d = w;
    first = false;
  }
  return d;
}

Poly PhiSpec::evaluate(const std::vector<Poly>& chern) const {
  if (chern.empty()) throw Error(ErrorKind::InvalidArgument, "no Chern polynomials supplied");
  std::size_t nv = chern.front().nvars();
  Poly out(nv);
  for (const auto& [c, e] : terms) {
    if (e.size() > chern.size()) throw Error(ErrorKind::InvalidArgument, "phi uses more Chern classes than the dimension");
    Poly t = Poly::constant(nv, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * chern[i].pow(e[i]);
    out += t;
  }
  return out;
}

std::string PhiSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : terms) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "c" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

ResidueResult grothendieck_residue(const Poly& h, const VectorField& v, std::span<const Rational> p,
                                   std::optional<std::size_t> bound) {
  std::size_t n = v.dim();
  if (n == 0 || h.nvars() != n) throw Error(ErrorKind::RingMismatch, "residue numerator and field rings differ");
  VectorField w = v.translate_to_origin(p);
  Poly hh = translate_to_origin(h, p);
  IdealGens I(w.components, MonomialOrder::local());
  std::size_t N = monomial_power_bound(I);
  if (bound) {
    if (*bound < N) throw Error(ErrorKind::InvalidArgument, "forced residue bound is below the minimal one");
    N = *bound;
  }
  PolyMatrix A(n, n, n);
  Poly unit_inv = Poly::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = static_cast<std::uint32_t>(N);
    Membership m = membership_with_cofactors(Poly::monomial(e, Rational(1)), I);
    for (std::size_t j = 0; j < n; ++j) A.at(i, j) = box_truncate(m.cofactors[j], N);
    unit_inv = box_mul(unit_inv, box_inverse(box_truncate(m.unit, N), N), N);
  }
  Poly num = box_mul(box_mul(box_truncate(hh, N), box_truncate(determinant(A), N), N), unit_inv, N);
  Exponent corner(n, static_cast<std::uint32_t>(N - 1));
  return {num.coefficient(corner), N};
}

ResidueResult baum_bott_residue(const VectorField& v, const PhiSpec& phi, std::span<const Rational> p) {
  std::size_t n = v.dim();
  if (phi.weighted_degree() != n) throw Error(ErrorKind::InvalidArgument, "phi must have weighted degree n");
  auto chern = char_poly_coeffs(jacobian(v));
  return grothendieck_residue(phi.evaluate(chern), v, p);
}

long log_residue_det(const VectorField& v, const std::vector<std::size_t>& divisor, std::span<const Rational> p) {
  long idx = static_cast<long>(log_index(v, divisor, p).value.get_num().get_si());
  return v.dim() % 2 == 0 ? idx : -idx;
}

}  // namespace folindex
