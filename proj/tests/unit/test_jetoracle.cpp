#include <gtest/gtest.h>

#include <chrono>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/jet_oracle.hpp"
#include "folindex/linalg.hpp"
#include "helpers.hpp"

using namespace folindex;
using namespace testing_helpers;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-4, 4);
  SparseMatrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::map<std::size_t, Rational> row;
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) < density) row[c] = Q(v(rng), 1 + (r + c) % 3);
    m.add_row(make_row(row));
  }
  return m;
}

}  // namespace

TEST(Linalg, SerialAndParallelRanksAgree) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 20 + trial * 4, cols = 15 + trial * 3;
    SparseMatrix m = random_matrix(rng, rows, cols, 0.15);
    // Duplicate some rows as combinations so the rank is deficient.
    SparseMatrix dup = m;
    for (std::size_t k = 0; k + 1 < m.rows(); k += 3) {
      std::map<std::size_t, Rational> combo;
      for (const auto& [c, v] : m.row_list()[k]) combo[c] += Rational(v) * 2;
      for (const auto& [c, v] : m.row_list()[k + 1]) combo[c] -= Rational(v);
      dup.add_row(make_row(combo));
    }
    EXPECT_EQ(rank_serial(dup), rank_parallel(dup));
    EXPECT_EQ(rank_serial(dup), rank_serial(m));
  }
}

TEST(Linalg, IdentityAndZero) {
  SparseMatrix id(5);
  for (std::size_t i = 0; i < 5; ++i) id.add_row({{i, Integer(3)}});
  EXPECT_EQ(rank_parallel(id), 5u);
  SparseMatrix z(4);
  EXPECT_EQ(rank_serial(z), 0u);
}

TEST(JetSpace, EnumeratesMonomialsBelowOrder) {
  JetSpace js(3, 4);
  EXPECT_EQ(js.size(), 20u);
  for (std::size_t k = 0; k < js.size(); ++k) EXPECT_EQ(js.index(js.monomials()[k]), k);
  EXPECT_EQ(js.index(Exponent{4, 0, 0}), std::nullopt);
}

TEST(TruncatedQuotientDim, Examples) {
  auto a = truncated_quotient_dim({P("x"), P("y")}, 3);
  EXPECT_EQ(a.value, 1u);
  EXPECT_TRUE(a.stabilized);
  auto b = truncated_quotient_dim({P("3*x^2"), P("2*y")}, 4);
  EXPECT_EQ(b.value, 2u);
  EXPECT_TRUE(b.stabilized);
  auto c = truncated_quotient_dim({P("x")}, 5);
  EXPECT_EQ(c.value, 5u);
  EXPECT_FALSE(c.stabilized);
}

TEST(TruncatedQuotientDim, StabilizesToStandardBasisCount) {
  std::vector<std::vector<Poly>> corpus{
      {P("3*x^2"), P("-2*y")},
      {P("x^2 + y^3"), P("x*y")},
      {P("y^2 - x^3"), P("x*y^2 + x^4")},
      {P("x^3 + y^3 + x*y"), P("x - y^2")},
      {P("x*(x - 1)"), P("y^2 + x")},
  };
  for (const auto& gens : corpus) {
    auto exact = local_dim(gens);
    ASSERT_TRUE(exact);
    int N = 2;
    TruncatedDim t;
    do t = truncated_quotient_dim(gens, N++);
    while (!t.stabilized && N < 20);
    EXPECT_TRUE(t.stabilized);
    EXPECT_EQ(t.value, *exact);
  }
}

TEST(ContractionComplex, Examples) {
  auto euler = contraction_complex_euler(V({"2*x", "3*y"}), P("y^2 - x^3"));
  EXPECT_TRUE(euler.stabilized);
  EXPECT_EQ(euler.euler, -1);
  EXPECT_EQ(euler.dims, (std::vector<long>{1, 2}));
  auto ham = contraction_complex_euler(V({"-2*y", "-3*x^2"}), P("y^2 - x^3"));
  EXPECT_EQ(ham.euler, 0);
  auto radial = contraction_complex_euler(V({"x", "y", "z"}, xyz), P("x^2 + y^2 + z^2", xyz));
  EXPECT_EQ(radial.euler, 2);
  EXPECT_EQ(radial.dims, (std::vector<long>{1, 0, 1}));
}

TEST(ContractionComplex, NotTangentIsRejected) {
  EXPECT_THROW(contraction_complex_euler(V({"x", "y"}), P("y - x^2")), Error);
}

TEST(LogComplex, KoszulCountMatchesQuotient) {
  auto a = log_complex_euler(V({"x^2", "y"}), {0});
  EXPECT_EQ(a.euler, 1);
  auto b = log_complex_euler(V({"2*x", "3*y"}), {0});
  EXPECT_EQ(b.euler, 0);
  auto c = log_complex_euler(V({"x*(1 + y)", "y^2 + x"}), {0});
  EXPECT_EQ(c.euler, static_cast<long>(*local_dim({P("1 + y"), P("y^2 + x")})));
  EXPECT_THROW(log_complex_euler(V({"1", "y"}), {0}), Error);
}
