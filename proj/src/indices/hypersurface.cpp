#include <sstream>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/indices.hpp"
#include "folindex/jet_oracle.hpp"
#include "folindex/residues.hpp"
#include "internal.hpp"

namespace folindex {

void IndexReport::cross_check(const std::string& name, const Rational& other) {
  bool ok = other == value;
  crosschecks.push_back({name, other, ok});
  if (!ok)
    throw Error(ErrorKind::Conflict, method + " gives " + value.get_str() + " but " + name + " gives " + other.get_str());
}

namespace detail {

void check_point(std::size_t nvars, std::span<const Rational> p) {
  if (p.size() != nvars)
    throw Error(ErrorKind::InvalidArgument,
                "point has " + std::to_string(p.size()) + " coordinates, ring has " + std::to_string(nvars));
}

std::size_t finite_dim(const std::vector<Poly>& gens, const std::string& what) {
  auto d = local_dim(gens);
  if (!d) throw Error(ErrorKind::NotZeroDimensional, what + " is not zero-dimensional at the point");
  return *d;
}

std::size_t oracle_dim(const std::vector<Poly>& gens) {
  constexpr int cap = 64;
  for (int order = 1; order <= cap; ++order) {
    auto t = truncated_quotient_dim(gens, order);
    if (t.stabilized) return t.value;
  }
  throw Error(ErrorKind::TruncationNotStabilized, "truncated quotient did not stabilize");
}

}  // namespace detail

using detail::check_point;
using detail::finite_dim;

namespace {

std::vector<Poly> gradient(const Poly& f) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

IndexReport dim_report(const std::vector<Poly>& gens, const std::string& method, const IndexOptions& opt) {
  IndexReport r;
  r.method = method;
  r.value = static_cast<unsigned long>(finite_dim(gens, method));
  if (opt.oracle) r.cross_check("jet oracle", static_cast<unsigned long>(detail::oracle_dim(gens)));
  return r;
}

}  // namespace

IndexReport milnor_number(const Poly& f, std::span<const Rational> p, const IndexOptions& opt) {
  check_point(f.nvars(), p);
  return dim_report(gradient(translate_to_origin(f, p)), "dim O/(df)", opt);
}

IndexReport tjurina_number(const Poly& f, std::span<const Rational> p, const IndexOptions& opt) {
  check_point(f.nvars(), p);
  Poly g = translate_to_origin(f, p);
  auto gens = gradient(g);
  gens.push_back(g);
  return dim_report(gens, "dim O/(f, df)", opt);
}

IndexReport ph_index(const VectorField& v, std::span<const Rational> p, const IndexOptions& opt) {
  check_point(v.dim(), p);
  IndexReport r = dim_report(v.translate_to_origin(p).components, "dim O/(v)", opt);
  r.cross_check("residue of det Jv", grothendieck_residue(determinant(jacobian(v)), v, p).value);
  return r;
}

Poly tangency_cofactor(const VectorField& v, const Poly& f) {
  if (v.dim() != f.nvars()) throw Error(ErrorKind::RingMismatch, "field and hypersurface rings differ");
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "hypersurface equation is zero");
  auto h = exact_divide(v.apply(f), f);
  if (!h) throw Error(ErrorKind::NotInvariant, "v(f) is not a multiple of f");
  return *h;
}

IndexReport tjurina_vf(const VectorField& v, const Poly& f, std::span<const Rational> p) {
  check_point(v.dim(), p);
  if (v.dim() != f.nvars()) throw Error(ErrorKind::RingMismatch, "field and hypersurface rings differ");
  auto gens = v.translate_to_origin(p).components;
  gens.push_back(translate_to_origin(f, p));
  return dim_report(gens, "dim O/(f, v)", {});
}

HomologyDims homology_dims(const VectorField& v, const Poly& f, std::span<const Rational> p) {
  check_point(v.dim(), p);
  Poly h = translate_to_origin(tangency_cofactor(v, f), p);
  Poly g = translate_to_origin(f, p);
  auto a = v.translate_to_origin(p).components;
  HomologyDims out;
  auto fa = a;
  fa.push_back(g);
  out.h0 = finite_dim(fa, "(f, v)");
  auto fj = gradient(g);
  fj.push_back(g);
  out.hn = finite_dim(fj, "(f, df)");
  if (v.dim() >= 3) {
    auto ha = a;
    ha.push_back(h);
    long da = static_cast<long>(finite_dim(a, "(v)"));
    out.lambda = static_cast<long>(out.h0) + static_cast<long>(finite_dim(ha, "(h, v)")) - da;
  }
  return out;
}

IndexReport homological_index(const VectorField& v, const Poly& f, std::span<const Rational> p,
                              const IndexOptions& opt) {
  check_point(v.dim(), p);
  if (v.dim() < 2) throw Error(ErrorKind::InvalidArgument, "hypersurface needs at least two variables");
  std::size_t n = v.dim() - 1;
  HomologyDims hd = homology_dims(v, f, p);
  IndexReport r;
  if (n % 2 == 1) {
    r.method = "dim O/(f,v) - dim O/(f,df)";
    r.value = static_cast<long>(hd.h0) - static_cast<long>(hd.hn);
  } else {
    auto a = v.translate_to_origin(p).components;
    auto ha = a;
    ha.push_back(translate_to_origin(tangency_cofactor(v, f), p));
    r.method = "dim O/(v) - dim O/(h,v) + dim O/(f,df)";
    r.value = static_cast<long>(finite_dim(a, "(v)")) - static_cast<long>(finite_dim(ha, "(h, v)")) +
              static_cast<long>(hd.hn);
  }
  if (opt.oracle) {
    auto cx = contraction_complex_euler(v.translate_to_origin(p), translate_to_origin(f, p));
    r.cross_check("jet window Euler characteristic", cx.euler);
  }
  return r;
}

Integer radial_index(const Integer& gsv, const Integer& mu, std::size_t n) {
  return n % 2 == 0 ? Integer(gsv - mu) : Integer(gsv + mu);
}

IndexReport log_index(const VectorField& v, const std::vector<std::size_t>& divisor, std::span<const Rational> p,
                      const IndexOptions& opt) {
  check_point(v.dim(), p);
  VectorField w = v.translate_to_origin(p);
  std::vector<Poly> gens = w.components;
  std::vector<bool> seen(v.dim(), false);
  for (std::size_t i : divisor) {
    if (i >= v.dim()) throw Error(ErrorKind::InvalidArgument, "divisor variable out of range");
    if (seen[i]) throw Error(ErrorKind::InvalidArgument, "divisor lists a hyperplane twice");
    seen[i] = true;
    auto h = exact_divide(w[i], Poly::variable(v.dim(), i));
    if (!h) throw Error(ErrorKind::NotLogarithmic, "field is not logarithmic along the divisor");
    gens[i] = *h;
  }
  IndexReport r;
  r.method = "dim O/(v_i/x_i (i in D), v_j)";
  r.value = static_cast<unsigned long>(finite_dim(gens, "logarithmic ideal"));
  if (opt.oracle) r.cross_check("log complex Euler characteristic", log_complex_euler(w, divisor).euler);
  return r;
}

bool normal_bundle_extension_check(const Integer& gsv, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "extension check needs n >= 2");
  Integer fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= static_cast<unsigned long>(k);
  return gsv % fact == 0;
}

}  // namespace folindex
