#pragma once

#include <random>
#include <string>
#include <vector>

#include "folindex/expr.hpp"
#include "folindex/forms.hpp"
#include "folindex/poly.hpp"

namespace testing_helpers {

using folindex::Poly;
using folindex::Rational;
using folindex::VectorField;

inline const std::vector<std::string> xy{"x", "y"};
inline const std::vector<std::string> xyz{"x", "y", "z"};

inline Poly P(const std::string& s, const std::vector<std::string>& vars = xy) { return folindex::parse_poly(s, vars); }

inline VectorField V(std::initializer_list<const char*> comps, const std::vector<std::string>& vars = xy) {
  std::vector<Poly> c;
  for (const char* s : comps) c.push_back(P(s, vars));
  return VectorField(std::move(c));
}

inline Rational Q(long a, long b = 1) { return folindex::make_rational(a, b); }

// Random polynomial with small integer coefficients and bounded degree.
inline Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
  Poly p(nvars);
  for (int k = 0; k < nterms; ++k) {
    folindex::Exponent e(nvars, 0);
    int budget = deg(rng);
    for (int b = 0; b < budget; ++b) e[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)]++;
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace testing_helpers
