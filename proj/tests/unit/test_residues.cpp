#include <gtest/gtest.h>

#include "folindex/errors.hpp"
#include "folindex/residues.hpp"
#include "helpers.hpp"

using namespace folindex;
using namespace testing_helpers;

namespace {

const std::vector<Rational> origin2(2), origin3(3);

// det of a small rational matrix by cofactor expansion.
Rational det(const std::vector<std::vector<Rational>>& a) {
  std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      m.push_back(row);
    }
    Rational t = a[0][j] * det(m);
    s += j % 2 == 0 ? t : Rational(-t);
  }
  return s;
}

VectorField linear_field(const std::vector<std::vector<Rational>>& a) {
  std::size_t n = a.size();
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c(n);
    for (std::size_t j = 0; j < n; ++j) c += a[i][j] * Poly::variable(n, j);
    comps.push_back(c);
  }
  return VectorField(comps);
}

std::vector<std::vector<Rational>> random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (;;) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& x : row) x = d(rng);
    if (sgn(det(a)) != 0) return a;
  }
}

}  // namespace

TEST(Residue, Examples) {
  EXPECT_EQ(grothendieck_residue(P("1"), V({"x", "y"}), origin2).value, 1);
  EXPECT_EQ(grothendieck_residue(P("x*y"), V({"x^2", "y^2"}), origin2).value, 1);
  EXPECT_EQ(grothendieck_residue(P("6"), V({"2*x", "3*y"}), origin2).value, 1);
}

TEST(Residue, LinearFieldsMatchValueOverDeterminant) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto a = random_invertible(rng, n);
    Poly h = random_poly(rng, n, 3, 4);
    std::vector<Rational> zero(n);
    EXPECT_EQ(grothendieck_residue(h, linear_field(a), zero).value, h.evaluate(zero) / det(a));
  }
}

TEST(Residue, MonomialDenominatorsReadOffCoefficient) {
  std::mt19937 rng(8);
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b) {
      Poly h = random_poly(rng, 2, 5, 8);
      Poly vx = Poly::monomial({a, 0}, Rational(1)), vy = Poly::monomial({0, b}, Rational(1));
      EXPECT_EQ(grothendieck_residue(h, VectorField({vx, vy}), origin2).value, h.coefficient({a - 1, b - 1}));
    }
}

TEST(Residue, IndependentOfBound) {
  VectorField v = V({"x^2 - y^3", "x*y + y^2"});
  Poly h = P("1 + 3*x - x*y + 7*y^2");
  auto base = grothendieck_residue(h, v, origin2);
  for (std::size_t extra = 1; extra <= 2; ++extra)
    EXPECT_EQ(grothendieck_residue(h, v, origin2, base.bound + extra).value, base.value);
  EXPECT_THROW(grothendieck_residue(h, v, origin2, base.bound - 1), Error);
}

TEST(Residue, DetJacobianCountsMultiplicity) {
  // Res[det Jv / v] is the local intersection multiplicity.
  const std::vector<std::pair<VectorField, int>> cases = {
      {V({"x^2", "y^3"}), 6},
      {V({"x^2 - y^3", "x*y"}), 5},
      {V({"x^3 + y^2", "x^2*y + y^3"}), 7},
  };
  for (const auto& [v, mult] : cases)
    EXPECT_EQ(grothendieck_residue(determinant(jacobian(v)), v, origin2).value, mult);
}

TEST(Residue, TranslatedPoint) {
  std::vector<Rational> p{Q(1), Q(-2)};
  VectorField v = V({"x - 1", "3*(y + 2)"});
  EXPECT_EQ(grothendieck_residue(P("x^2 + y"), v, p).value, Q(-1, 3));
}

TEST(Residue, NonIsolatedZeroRejected) {
  EXPECT_THROW(grothendieck_residue(P("1"), V({"x*y", "x*y"}), origin2), Error);
}

TEST(BaumBott, Examples) {
  EXPECT_EQ(baum_bott_residue(V({"2*x", "3*y"}), PhiSpec::monomial({2, 0}), origin2).value, Q(25, 6));
  EXPECT_EQ(baum_bott_residue(V({"2*x", "3*y"}), PhiSpec::top(2), origin2).value, 1);
  // Degenerate zero: Res[(2x + 1)^2 / (x^2 y)] is the coefficient of x.
  EXPECT_EQ(baum_bott_residue(V({"x^2", "y"}), PhiSpec::monomial({2, 0}), origin2).value, 4);
}

TEST(BaumBott, NondegenerateZeroMatchesEigenvalueFormula) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_invertible(rng, 2);
    VectorField v = linear_field(a);
    // Higher-order terms do not change the residue at a nondegenerate zero.
    std::vector<Poly> comps = v.components;
    comps[0] += P("x^2 - 2*x*y");
    comps[1] += P("y^3 + x*y");
    VectorField w(comps);
    Rational tr = a[0][0] + a[1][1], d = det(a);
    EXPECT_EQ(baum_bott_residue(w, PhiSpec::monomial({2, 0}), origin2).value, tr * tr / d);
    EXPECT_EQ(baum_bott_residue(w, PhiSpec::monomial({0, 1}), origin2).value, 1);
  }
}

TEST(BaumBott, ThreeDimensionalTrace) {
  // c1^3 / c3 at (x, 2y, 3z) = 6^3 / 6.
  EXPECT_EQ(baum_bott_residue(V({"x", "2*y", "3*z"}, xyz), PhiSpec::monomial({3, 0, 0}), origin3).value, 36);
  PhiSpec mix;
  mix.terms = {{Q(1), {1, 1, 0}}, {Q(-1), {0, 0, 1}}};
  // c1 c2 - c3 = 6 * 11 - 6.
  EXPECT_EQ(baum_bott_residue(V({"x", "2*y", "3*z"}, xyz), mix, origin3).value, 10);
}

TEST(BaumBott, WrongWeightRejected) {
  EXPECT_THROW(baum_bott_residue(V({"x", "y"}), PhiSpec::monomial({1, 0}), origin2), Error);
  EXPECT_EQ(PhiSpec::monomial({2, 0}).to_string(), "c1^2");
}

TEST(LogResidue, SignedLogIndex) {
  EXPECT_EQ(log_residue_det(V({"x^2", "y"}), {0}, origin2), 1);
  EXPECT_EQ(log_residue_det(V({"x^2", "y", "z"}, xyz), {0}, origin3), -1);
}
