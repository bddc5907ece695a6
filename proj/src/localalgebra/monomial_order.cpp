#include "folindex/monomial_order.hpp"

#include "folindex/errors.hpp"

namespace folindex {

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) {
    bool a_bigger = is_local() ? da < db : da > db;
    return a_bigger ? 1 : -1;
  }
  // Reverse lexicographic: look at the least significant variable first; the
  // smaller exponent there is the bigger monomial.
  std::size_t n = a.size();
  for (std::size_t k = n; k-- > 0;) {
    std::size_t i = perm.empty() ? k : perm[k];
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Exponent MonomialOrder::leading(const Poly& p) const {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading monomial of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (best == nullptr || compare(e, *best) > 0) best = &e;
  return *best;
}

int MonomialOrder::ecart(const Poly& p) const {
  if (!is_local() || p.is_zero()) return 0;
  return p.total_degree() - static_cast<int>(total_degree(leading(p)));
}

}  // namespace folindex
