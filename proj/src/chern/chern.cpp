#include "folindex/chern.hpp"

#include "folindex/errors.hpp"

namespace folindex {

ChernSeries::ChernSeries(std::size_t n) : coeffs_(n + 1) { coeffs_[0] = 1; }

ChernSeries ChernSeries::line(std::size_t n, const Rational& a) {
  ChernSeries s(n);
  if (n >= 1) s[1] = a;
  return s;
}

ChernSeries ChernSeries::tangent(std::size_t n) {
  ChernSeries s(n);
  for (std::size_t i = 0; i <= n; ++i) s = s * line(n, 1);
  return s;
}

ChernSeries operator*(const ChernSeries& a, const ChernSeries& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "Chern series of different dimensions");
  ChernSeries out(a.dim());
  out[0] = 0;
  for (std::size_t i = 0; i <= a.dim(); ++i)
    for (std::size_t j = 0; i + j <= a.dim(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ChernSeries ChernSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error(ErrorKind::InvalidArgument, "Chern series is not invertible");
  ChernSeries out(dim());
  out[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k <= dim(); ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += coeffs_[i] * out[k - i];
    out[k] = -s * out[0];
  }
  return out;
}

Rational pn_chern_integral(std::size_t n, const std::vector<Rational>& numerator,
                           const std::vector<Rational>& denominator) {
  ChernSeries num(n), den(n);
  for (const auto& a : numerator) num = num * ChernSeries::line(n, a);
  for (const auto& b : denominator) den = den * ChernSeries::line(n, b);
  return (num / den).integral();
}

namespace {

const std::vector<std::pair<IdentityKind, std::string>> kind_names = {
    {IdentityKind::Brunella, "brunella"},         {IdentityKind::CsTotal, "cs_total"},
    {IdentityKind::VarTotal, "var_total"},        {IdentityKind::BbTotal, "bb_total"},
    {IdentityKind::MilnorTotal, "milnor_total"},  {IdentityKind::PfaffDegree, "pfaff_degree"},
    {IdentityKind::LogBb, "log_bb"},              {IdentityKind::Soares, "soares"},
    {IdentityKind::Adjunction, "adjunction"},
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

Rational product(const std::vector<long>& v) {
  Rational p = 1;
  for (long x : v) p *= x;
  return p;
}

}  // namespace

IdentityKind parse_identity_kind(const std::string& name) {
  for (const auto& [k, s] : kind_names)
    if (s == name) return k;
  throw Error(ErrorKind::UnsupportedIdentity, "no identity named '" + name + "'");
}

std::string to_string(IdentityKind kind) {
  for (const auto& [k, s] : kind_names)
    if (k == kind) return s;
  return "unknown";
}

Rational identity_rhs(const IdentitySpec& s) {
  require(s.d >= 0, "foliation degree must be nonnegative");
  require(s.n >= 1, "dimension must be positive");
  auto n = static_cast<std::size_t>(s.n);
  switch (s.kind) {
    case IdentityKind::Brunella:
      require(s.m >= 1, "curve degree must be positive");
      return Rational((s.d + 2) * s.m - s.m * s.m);
    case IdentityKind::CsTotal:
      require(s.m >= 1, "curve degree must be positive");
      return Rational(s.m * s.m);
    case IdentityKind::VarTotal:
      require(s.m >= 1, "curve degree must be positive");
      return Rational((s.d + 2) * s.m);
    case IdentityKind::BbTotal:
      return Rational((s.d + 2) * (s.d + 2));
    case IdentityKind::MilnorTotal:
      return pn_chern_integral(n, std::vector<Rational>(n + 1, Rational(1)), {Rational(1 - s.d)});
    case IdentityKind::PfaffDegree: {
      require(!s.degrees.empty() && static_cast<long>(s.degrees.size()) < s.n, "need between 1 and n-1 equations");
      long codim = static_cast<long>(s.degrees.size()), sum = 0;
      for (long di : s.degrees) {
        require(di >= 1, "degrees must be positive");
        sum += di;
      }
      return (s.d + codim + 1 - sum) * product(s.degrees);
    }
    case IdentityKind::LogBb: {
      std::vector<Rational> den;
      for (long mi : s.degrees) {
        require(mi >= 1, "divisor degrees must be positive");
        den.emplace_back(mi);
      }
      den.emplace_back(1 - s.d);
      return pn_chern_integral(n, std::vector<Rational>(n + 1, Rational(1)), den);
    }
    case IdentityKind::Soares:
      return Rational(s.d + 1);
    case IdentityKind::Adjunction: {
      require(!s.degrees.empty() && static_cast<long>(s.degrees.size()) < s.n, "need between 1 and n-1 equations");
      long k = s.n - static_cast<long>(s.degrees.size());
      // c_1(T V) from (1+h)^(n+1) / prod(1 + d_i h); K_F = (d - k) h for a
      // Pfaff system of dimension k and degree d.
      ChernSeries tv = ChernSeries::tangent(n);
      for (long di : s.degrees) {
        require(di >= 1, "degrees must be positive");
        tv = tv / ChernSeries::line(n, di);
      }
      Rational kf = s.d - k, kv = -tv[1];
      return (kf - kv) * product(s.degrees);
    }
  }
  throw Error(ErrorKind::UnsupportedIdentity, "unknown identity");
}

}  // namespace folindex
