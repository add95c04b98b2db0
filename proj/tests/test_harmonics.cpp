#include <gtest/gtest.h>

#include "osp/harmonics.hpp"

using namespace osp;

TEST(Harmonics, LowDegrees) {
  auto s = Signature::standard(4, 1);
  auto h0 = harmonic_basis(s, 0);
  ASSERT_EQ(h0.basis.size(), 1u);
  EXPECT_EQ(h0.basis[0], poly_one(s));
  EXPECT_EQ(harmonic_basis(s, 1).basis.size(), 6u);
}

TEST(Harmonics, BasisIsHarmonic) {
  auto s = Signature::standard(4, 1);
  auto h = harmonic_basis(s, 2);
  EXPECT_EQ(h.basis.size(), 18u);
  for (const auto& b : h.basis) {
    EXPECT_TRUE(laplacian(b).is_zero());
    EXPECT_EQ(euler(b), b * Scalar(2));
  }
}

TEST(Harmonics, DimFormula) {
  EXPECT_EQ(dim_harmonic(4, 1, 2), 18);
  EXPECT_EQ(dim_harmonic(3, 0, 2), 5);
  EXPECT_EQ(dim_harmonic(5, 2, 0), 1);
  for (int m = 2; m <= 7; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 6; ++k) EXPECT_NO_THROW(dim_harmonic(m, n, k));
}

TEST(Harmonics, NullspaceMatchesFormula) {
  for (auto [m, n] : {std::pair{4, 0}, {5, 0}, {4, 1}, {6, 1}, {3, 1}})
    for (int k = 0; k <= 4; ++k) {
      auto s = Signature::standard(m, n);
      EXPECT_EQ(Integer(static_cast<long>(harmonic_nullity(s, k))), dim_harmonic(m, n, k)) << m << n << k;
    }
}

TEST(Harmonics, FischerExamples) {
  auto s = Signature::standard(4, 0);
  auto x1 = poly_var(s, 1);
  auto comp = fischer_decompose(x1 * x1);
  ASSERT_EQ(comp.size(), 2u);
  EXPECT_EQ(comp[0].j, 0);
  EXPECT_EQ(comp[0].h, x1 * x1 - r2_poly(s) * Scalar::frac(1, 4));
  EXPECT_EQ(comp[1].j, 1);
  EXPECT_EQ(comp[1].h, SuperPolynomial::constant(s, Scalar::frac(1, 4)));
  auto c2 = fischer_decompose(r2_poly(s));
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0].j, 1);
  EXPECT_EQ(c2[0].h, poly_one(s));
}

TEST(Harmonics, FischerReconstructs) {
  auto s = Signature::standard(4, 1);
  for (const auto& mo : monomials_of_degree(*s, 3)) {
    auto p = SuperPolynomial::monomial(s, mo);
    SuperPolynomial sum(s);
    for (const auto& c : fischer_decompose(p)) {
      EXPECT_TRUE(laplacian(c.h).is_zero());
      SuperPolynomial t = c.h;
      for (int j = 0; j < c.j; ++j) t = r2_mul(t);
      sum += t;
    }
    EXPECT_EQ(sum, p);
  }
}

TEST(Harmonics, FischerRefusesExceptionalM) {
  auto s = Signature::standard(2, 2);
  EXPECT_THROW(fischer_decompose(poly_var(s, 1) * poly_var(s, 1)), Error);
}

TEST(Harmonics, GeneralizedBasis) {
  auto s = Signature::standard(2, 2);
  EXPECT_EQ(generalized_basis(s, 1).basis.size(), 6u);
  EXPECT_GT(generalized_basis(s, 3).basis.size(), harmonic_nullity(s, 3));
  auto t = Signature::standard(4, 1);
  EXPECT_EQ(generalized_basis(t, 3).basis.size(), harmonic_nullity(t, 3));
}
