#pragma once

#include <optional>
#include <span>
#include <vector>

#include "folindex/forms.hpp"

namespace folindex {

/// Rational combination of monomials c_1^a_1 ... c_n^a_n in the Chern
/// polynomials of Jv; each exponent vector has weighted degree sum i*a_i = n.
struct PhiSpec {
  std::vector<std::pair<Rational, std::vector<unsigned>>> terms;

  static PhiSpec monomial(std::vector<unsigned> exps, Rational coef = Rational(1));
  /// c_n, which reproduces the Poincare-Hopf index.
  static PhiSpec top(std::size_t n);

  std::size_t weighted_degree() const;
  Poly evaluate(const std::vector<Poly>& chern) const;
  std::string to_string() const;
};

struct ResidueResult {
  Rational value;
  std::size_t bound = 0;  // N with x_i^N in (v) used by the transformation law
};

/// Res_p[h dx / (v_1 ... v_n)] without the (2 pi i)^n normalization, by the
/// transformation law to the monomial denominators x_i^N.  A bound larger
/// than the minimal one may be forced for testing.
ResidueResult grothendieck_residue(const Poly& h, const VectorField& v, std::span<const Rational> p,
                                   std::optional<std::size_t> bound = std::nullopt);

/// Residue of phi(Jv) at the isolated zero p.
ResidueResult baum_bott_residue(const VectorField& v, const PhiSpec& phi, std::span<const Rational> p);

/// (-1)^n times the logarithmic index along the coordinate hyperplanes D.
long log_residue_det(const VectorField& v, const std::vector<std::size_t>& divisor, std::span<const Rational> p);

}  // namespace folindex
