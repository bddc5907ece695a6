#pragma once

#include <vector>

#include "folindex/poly.hpp"

namespace folindex {

enum class OrderKind {
  LocalDs,   // anti-graded reverse lexicographic: 1 > x_i
  GlobalDp,  // degree reverse lexicographic: x_i > 1
};

/// A monomial order together with an optional variable permutation.  The
/// permutation lists the variables from most to least significant for the
/// reverse-lexicographic tie break; empty means the identity.
struct MonomialOrder {
  OrderKind kind = OrderKind::LocalDs;
  std::vector<std::size_t> perm;

  static MonomialOrder local() { return {OrderKind::LocalDs, {}}; }
  static MonomialOrder global() { return {OrderKind::GlobalDp, {}}; }

  bool is_local() const { return kind == OrderKind::LocalDs; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  /// Largest monomial of p; p must be nonzero.
  Exponent leading(const Poly& p) const;
  /// deg(p) - deg(LM(p)); zero for global orders.
  int ecart(const Poly& p) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace folindex
