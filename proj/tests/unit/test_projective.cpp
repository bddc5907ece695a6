#include <gtest/gtest.h>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/projective.hpp"
#include "folindex/residues.hpp"
#include "helpers.hpp"

using namespace folindex;
using namespace testing_helpers;

namespace {

const std::vector<std::string> uw{"u", "w"};
const std::vector<std::string> hom2{"x0", "x1", "x2"};
const std::vector<std::string> hom3{"x0", "x1", "x2", "x3"};

Branch branch(std::vector<std::vector<long>> coeffs, int order) {
  Branch b;
  b.order = order;
  for (auto& c : coeffs) b.comps.emplace_back(std::vector<Rational>(c.begin(), c.end()), order);
  return b;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

ChartPoint at(std::string label, std::size_t chart, std::vector<Rational> c, std::vector<Branch> b = {}) {
  return ChartPoint{std::move(label), chart, std::move(c), std::move(b)};
}

// Cuspidal cubic y^2 z = x^3 with the degree-one field 2x d/dx + 3y d/dy.
struct Cusp {
  ProjectiveFoliation F = ProjectiveFoliation::from_affine(V({"2*x", "3*y"}));
  Poly C = homogenize(P("y^2 - x^3"));
  // The point at infinity [0:0:1] is the origin of chart 2, coordinates (x0, x1),
  // where the curve reads x0 = x1^3.
  std::vector<ChartPoint> points = {at("p0", 0, {0, 0}, {branch({{0, 0, 1}, {0, 0, 0, 1}}, 12)}),
                                    at("pinf", 2, {0, 0}, {branch({{0, 0, 0, 1}, {0, 1}}, 12)})};
};

}  // namespace

TEST(Charts, LinearFieldInChartOne) {
  for (long lam : {2, 3, 5}) {
    auto F = ProjectiveFoliation::from_affine(VectorField({P("x"), Q(lam) * P("y")}));
    EXPECT_EQ(F.degree, 1);
    VectorField c1 = chart_restrict(F, 1);
    EXPECT_EQ(c1, VectorField({P("-u", uw), Q(lam - 1) * P("w", uw)}));
  }
}

TEST(Charts, ConstantFieldRoundTrip) {
  VectorField v = V({"1", "-2"});
  auto F = ProjectiveFoliation::from_affine(v);
  EXPECT_EQ(F.degree, 0);
  EXPECT_EQ(chart_restrict(F, 0), v);
}

TEST(Charts, AffineFieldRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    VectorField v({random_poly(rng, 2, 3, 5), random_poly(rng, 2, 3, 5)});
    if (v[0].is_zero() && v[1].is_zero()) continue;
    EXPECT_EQ(chart_restrict(ProjectiveFoliation::from_affine(v), 0), v);
  }
}

TEST(Charts, RadialTopDropsDegree) {
  auto F = ProjectiveFoliation::from_affine(V({"x + x^2", "y + x*y"}));
  EXPECT_EQ(F.degree, 1);
  EXPECT_EQ(ProjectiveFoliation::from_affine(V({"x", "y"})).degree, 0);
  EXPECT_EQ(kind_of([] { ProjectiveFoliation::from_affine(V({"2*x", "3*y"}), 2); }), ErrorKind::DegreeMismatch);
}

TEST(Charts, EulerConditionOnForms) {
  DiffForm bad(3, 1);
  bad.add({1}, P("x0", hom2));
  EXPECT_EQ(kind_of([&] { ProjectiveFoliation::from_homogeneous_form(bad); }), ErrorKind::EulerConditionViolated);
  // i_R (x1 dx2 - x2 dx1) = 0.
  DiffForm good(3, 1);
  good.add({2}, P("x1", hom2));
  good.add({1}, P("-x2", hom2));
  auto F = ProjectiveFoliation::from_homogeneous_form(good);
  EXPECT_EQ(F.degree, 0);
  EXPECT_EQ(ph_index(chart_restrict(F, 0), std::vector<Rational>(2)).value, 1);
}

TEST(Charts, FormAndFieldRoutesAgree) {
  // w = i_X i_R (dx0 ^ dx1 ^ dx2) for the homogenized field X.
  auto F = ProjectiveFoliation::from_affine(V({"x + y^2", "2*y - x*y"}));
  std::vector<Poly> radial;
  for (std::size_t i = 0; i < 3; ++i) radial.push_back(Poly::variable(3, i));
  DiffForm w = contract(contract(DiffForm::volume(3), VectorField(radial)), VectorField(F.field));
  auto G = ProjectiveFoliation::from_homogeneous_form(w);
  EXPECT_EQ(G.degree, F.degree);
  for (std::size_t k = 0; k < 3; ++k) {
    VectorField a = chart_restrict(F, k), b = chart_restrict(G, k);
    // Same foliation: the fields are proportional.
    EXPECT_TRUE((a[0] * b[1] - a[1] * b[0]).is_zero()) << k;
  }
}

TEST(Charts, TransportRoundTrip) {
  Point p{Q(2), Q(-3, 5)};
  for (std::size_t to = 0; to < 3; ++to) {
    auto q = transport_point(p, 0, to);
    ASSERT_TRUE(q);
    EXPECT_EQ(*transport_point(*q, to, 0), p);
  }
  // [1:0:1] misses chart 1 and [0:1:1] misses chart 0.
  EXPECT_FALSE(transport_point({Q(0), Q(1)}, 0, 1));
  EXPECT_FALSE(transport_point({Q(0), Q(1)}, 2, 0));
}

TEST(Charts, LocalIndicesAgreeAcrossCharts) {
  // Singular point (1, 1) = [1:1:1] lies in every chart; the line x = 1 is invariant.
  auto F = ProjectiveFoliation::from_affine(V({"x - 1", "2*(y - 1)"}));
  Poly L = homogenize(P("x - 1"));
  Point p{Q(1), Q(1)};
  std::optional<Rational> gsv, cs, bb, mu;
  for (std::size_t k = 0; k < 3; ++k) {
    Point q = *transport_point(p, 0, k);
    VectorField v = chart_restrict(F, k);
    Poly l = chart_restrict(L, k);
    Rational g = gsv_curve(v, l, q).value, c = cs_index(v, l, {}, q).value;
    Rational b = baum_bott_residue(v, PhiSpec::monomial({2, 0}), q).value, m = ph_index(v, q).value;
    if (k == 0) {
      gsv = g, cs = c, bb = b, mu = m;
    } else {
      EXPECT_EQ(g, *gsv);
      EXPECT_EQ(c, *cs);
      EXPECT_EQ(b, *bb);
      EXPECT_EQ(m, *mu);
    }
  }
  EXPECT_EQ(*cs, Q(1, 2));
}

TEST(GlobalCheck, CuspidalCubicChain) {
  Cusp c;
  auto gsv = run_global_check(c.F, IdentityKind::Brunella, {c.C}, c.points);
  ASSERT_EQ(gsv.rows.size(), 2u);
  EXPECT_EQ(gsv.rows[0].value, -1);
  EXPECT_EQ(gsv.rows[1].value, 1);
  EXPECT_EQ(gsv.rhs, 0);
  EXPECT_TRUE(gsv.pass);
  auto cs = run_global_check(c.F, IdentityKind::CsTotal, {c.C}, c.points);
  EXPECT_EQ(cs.rows[0].value, 6);
  EXPECT_EQ(cs.rows[1].value, 3);
  EXPECT_EQ(cs.rhs, 9);
  EXPECT_TRUE(cs.pass);
  auto var = run_global_check(c.F, IdentityKind::VarTotal, {c.C}, c.points);
  EXPECT_EQ(var.rows[0].value, 5);
  EXPECT_EQ(var.rows[1].value, 4);
  EXPECT_EQ(var.sum, 9);
  EXPECT_TRUE(var.pass);
  EXPECT_EQ(gsv.diagnostics.size(), 3u);
}

TEST(GlobalCheck, MissingPointIsReported) {
  Cusp c;
  c.points.pop_back();
  EXPECT_EQ(kind_of([&] { run_global_check(c.F, IdentityKind::Brunella, {c.C}, c.points); }),
            ErrorKind::IncompleteSingularities);
}

TEST(GlobalCheck, BaumBottAndMilnorTotals) {
  for (long lam : {2, 3, 5}) {
    auto F = ProjectiveFoliation::from_affine(VectorField({P("x"), Q(lam) * P("y")}));
    std::vector<ChartPoint> pts = {at("p0", 0, {0, 0}), at("p1", 1, {0, 0}), at("p2", 2, {0, 0})};
    auto bb = run_global_check(F, IdentityKind::BbTotal, {}, pts);
    Rational l = lam;
    EXPECT_EQ(bb.rows[0].value, (1 + l) * (1 + l) / l);
    EXPECT_EQ(bb.rows[1].value, (l - 2) * (l - 2) / (1 - l));
    EXPECT_EQ(bb.rows[2].value, (1 - 2 * l) * (1 - 2 * l) / (l * (l - 1)));
    EXPECT_EQ(bb.sum, 9);
    EXPECT_TRUE(bb.pass);
    auto mu = run_global_check(F, IdentityKind::MilnorTotal, {}, pts);
    EXPECT_EQ(mu.sum, 3);
    EXPECT_TRUE(mu.pass);
  }
}

TEST(GlobalCheck, LogarithmicAlongLineAtInfinity) {
  auto F = ProjectiveFoliation::from_affine(V({"x", "3*y"}));
  std::vector<ChartPoint> pts = {at("p0", 0, {0, 0}), at("p1", 1, {0, 0}), at("p2", 2, {0, 0})};
  auto r = run_global_check(F, IdentityKind::LogBb, {}, pts);
  EXPECT_EQ(r.rows[0].value, 1);
  EXPECT_EQ(r.rows[1].value, 0);
  EXPECT_EQ(r.rows[2].value, 0);
  EXPECT_EQ(r.rhs, 1);
  EXPECT_TRUE(r.pass);
}

TEST(GlobalCheck, PfaffLineInP3) {
  auto F = ProjectiveFoliation::from_affine(V({"x", "2*y", "3*z"}, xyz));
  std::vector<Poly> line = {P("x2", hom3), P("x3", hom3)};
  std::vector<ChartPoint> pts = {at("p0", 0, {0, 0, 0}), at("p1", 1, {0, 0, 0})};
  auto r = run_global_check(F, IdentityKind::PfaffDegree, line, pts);
  EXPECT_EQ(r.rows[0].value, 1);
  EXPECT_EQ(r.rows[1].value, 1);
  EXPECT_EQ(r.rhs, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(run_global_check(F, IdentityKind::Adjunction, line, pts).pass);
}

TEST(GlobalCheck, FiveSingularPointsAudit) {
  DiffForm w(2, 1);
  w.add({0}, P("x*(5*y^2 - 9)"));
  w.add({1}, P("-y*(5*x^2 - 9)"));
  VectorField v = field_from_dual(w);
  EXPECT_EQ(global_dim(v.components), 5u);
  // Each zero is simple: the Jacobian determinant is a unit in the quotient.
  auto J = determinant(jacobian(v));
  auto gens = v.components;
  gens.push_back(J);
  EXPECT_EQ(global_dim(gens), 0u);
}

TEST(GlobalCheck, SoaresVerdict) {
  Cusp c;
  auto r = run_global_check(c.F, IdentityKind::Soares, {c.C}, {});
  EXPECT_EQ(r.sum, 3);
  EXPECT_EQ(r.rhs, 2);
  EXPECT_FALSE(r.pass);
  // A conic invariant by a degree-one foliation attains the bound.
  auto G = ProjectiveFoliation::from_affine(V({"-y", "x"}));
  EXPECT_TRUE(run_global_check(G, IdentityKind::Soares, {homogenize(P("x^2 + y^2 - 1"))}, {}).pass);
}

TEST(GlobalCheck, ArgumentErrors) {
  Cusp c;
  EXPECT_THROW(run_global_check(c.F, IdentityKind::Brunella, {}, c.points), Error);
  auto dup = c.points;
  dup.push_back(at("again", 0, {0, 0}));
  EXPECT_THROW(run_global_check(c.F, IdentityKind::Brunella, {c.C}, dup), Error);
}
