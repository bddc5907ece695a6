#pragma once

#include <string>
#include <vector>

#include "folindex/rational.hpp"

namespace folindex {

/// Element of H^*(P^n; Q) = Q[h]/(h^(n+1)).
class ChernSeries {
public:
  explicit ChernSeries(std::size_t n);
  /// 1 + a h, the total Chern class of O(a).
  static ChernSeries line(std::size_t n, const Rational& a);
  /// (1 + h)^(n+1), the total Chern class of T P^n.
  static ChernSeries tangent(std::size_t n);

  std::size_t dim() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  /// Degree of the top class.
  const Rational& integral() const { return coeffs_.back(); }

  friend ChernSeries operator*(const ChernSeries& a, const ChernSeries& b);
  /// Requires a unit constant term.
  ChernSeries inverse() const;
  friend ChernSeries operator/(const ChernSeries& a, const ChernSeries& b) { return a * b.inverse(); }

private:
  std::vector<Rational> coeffs_;
};

/// Coefficient of h^n in prod(1 + a_i h) / prod(1 + b_j h).
Rational pn_chern_integral(std::size_t n, const std::vector<Rational>& numerator,
                           const std::vector<Rational>& denominator);

enum class IdentityKind { Brunella, CsTotal, VarTotal, BbTotal, MilnorTotal, PfaffDegree, LogBb, Soares, Adjunction };

IdentityKind parse_identity_kind(const std::string& name);
std::string to_string(IdentityKind kind);

/// Parameters of a global identity on P^n for a foliation of degree d.
/// `degrees` holds the multidegree of the invariant complete intersection
/// (pfaff_degree, adjunction) or the component degrees of the divisor
/// (log_bb); `m` is the degree of an invariant plane curve.
struct IdentitySpec {
  IdentityKind kind = IdentityKind::Brunella;
  long n = 2;
  long d = 1;
  long m = 1;
  std::vector<long> degrees;
};

/// Right-hand side of the identity:
///   brunella      (d+2)m - m^2          sum of GSV along a plane curve
///   cs_total      m^2                   sum of CS
///   var_total     (d+2)m                sum of Var
///   bb_total      (d+2)^2               sum of c1^2 residues on P^2
///   milnor_total  c_n(T P^n - T F)      sum of Milnor numbers
///   pfaff_degree  (d+n-k+1-sum d_i) prod d_i
///   log_bb        c_n(T P^n(-log D) - T F)
///   soares        d+1                   extremal degree of a smooth invariant divisor
///   adjunction    (K_F - K_V) . V from canonical classes
Rational identity_rhs(const IdentitySpec& spec);

}  // namespace folindex
