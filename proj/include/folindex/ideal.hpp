#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "folindex/monomial_order.hpp"
#include "folindex/poly.hpp"

namespace folindex {

/// Process-wide budget on reduction steps per basis or normal-form
/// computation.  Exceeding it raises ResourceCap.
void set_step_budget(std::size_t steps);
std::size_t step_budget();

/// unit * element = sum_j cofactors[j] * gens[j], with unit(0) != 0.
struct Representation {
  Poly unit;
  std::vector<Poly> cofactors;
};

/// Standard basis for a local order (Mora) or Groebner basis for a global one.
class StandardBasis {
public:
  StandardBasis() = default;

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& elements() const { return elements_; }
  const std::vector<Exponent>& leading() const { return leading_; }
  /// Present only when the basis was built with cofactor tracking.
  const std::vector<Representation>& representations() const { return reps_; }
  bool tracks_cofactors() const { return tracked_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Weak normal form: the result is zero iff p lies in the ideal (in the
  /// local ring for local orders); otherwise its leading monomial lies outside
  /// the leading ideal.
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  /// True when x^e lies in the leading ideal.
  bool in_leading_ideal(const Exponent& e) const;

  /// Number of standard monomials, nullopt when infinite.
  std::optional<std::size_t> quotient_dim() const;
  /// The standard monomials themselves; empty optional when infinite.
  std::optional<std::vector<Exponent>> staircase() const;

private:
  friend StandardBasis standard_basis(const std::vector<Poly>&, const MonomialOrder&, bool);

  MonomialOrder order_;
  std::size_t nvars_ = 0;
  std::vector<Poly> gens_;
  std::vector<Poly> elements_;
  std::vector<Exponent> leading_;
  std::vector<Representation> reps_;
  bool tracked_ = false;
};

/// Mora's tangent-cone algorithm (Buchberger for global orders, where every
/// ecart is zero).  Zero generators are ignored.
StandardBasis standard_basis(const std::vector<Poly>& gens, const MonomialOrder& order, bool track_cofactors = false);

/// Generator list with lazily cached bases.
class IdealGens {
public:
  IdealGens(std::vector<Poly> gens, MonomialOrder order = MonomialOrder::local());

  const std::vector<Poly>& gens() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }

  const StandardBasis& basis() const;
  const StandardBasis& tracked_basis() const;

private:
  std::vector<Poly> gens_;
  MonomialOrder order_;
  std::size_t nvars_ = 0;
  mutable std::shared_ptr<const StandardBasis> basis_;
  mutable std::shared_ptr<const StandardBasis> tracked_;
};

std::optional<std::size_t> quotient_dim(const IdealGens& ideal);

/// Smallest N with x_i^N in the ideal for every i.
std::size_t monomial_power_bound(const IdealGens& ideal);

/// unit * p = sum_j cofactors[j] * gens[j]; unit is 1 for global orders.
struct Membership {
  Poly unit;
  std::vector<Poly> cofactors;
};

Membership membership_with_cofactors(const Poly& p, const IdealGens& ideal);

/// q with p = q * f, or nullopt when f does not divide p.
std::optional<Poly> exact_divide(const Poly& p, const Poly& f);

/// dim O/(I_C + (g)) at the origin; nullopt when g vanishes on a component.
std::optional<std::size_t> order_along_curve(const Poly& g, const std::vector<Poly>& curve);

/// Shorthand for the local quotient dimension of the ideal spanned by gens.
std::optional<std::size_t> local_dim(const std::vector<Poly>& gens);
std::optional<std::size_t> global_dim(const std::vector<Poly>& gens);

}  // namespace folindex
