#include <gtest/gtest.h>

#include "osp/liealg.hpp"

using namespace osp;

namespace {

TkkVector add(TkkVector a, const TkkVector& b, const Scalar& s = Scalar(1)) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}
TkkVector scale(TkkVector a, const Scalar& s) {
  for (auto& c : a) c *= s;
  return a;
}
bool is_zero(const TkkVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

class LieFixture : public ::testing::TestWithParam<std::pair<int, int>> {};

}  // namespace

TEST(Jordan, Products) {
  JordanAlgebra J(Signature::standard(4, 1));
  EXPECT_EQ(J.multiply(J.basis(0), J.basis(0)), J.basis(0));
  EXPECT_EQ(J.multiply(J.basis(1), J.basis(1)), J.basis(0));
  EXPECT_EQ(J.multiply(J.basis(4), J.basis(5)), scale(J.basis(0), Scalar(-1)));
  EXPECT_EQ(J.multiply(J.basis(5), J.basis(4)), J.basis(0));
  EXPECT_EQ(J.multiply(J.basis(0), J.basis(3)), J.basis(3));
}

TEST(Tkk, BracketExamples) {
  TkkAlgebra g(Signature::standard(4, 1));
  EXPECT_EQ(g.bracket(g.basis(g.plus(0)), g.basis(g.minus(0))), scale(g.basis(g.L(0)), Scalar(2)));
  EXPECT_EQ(g.bracket(g.basis(g.L(0)), g.basis(g.plus(1))), g.basis(g.plus(1)));
  EXPECT_EQ(g.bracket(g.basis(g.L(0)), g.basis(g.minus(1))), scale(g.basis(g.minus(1)), Scalar(-1)));
  EXPECT_EQ(g.inn_count(), 12);
  EXPECT_EQ(g.dim(), 30);
}

TEST_P(LieFixture, AntisymmetryAndJacobi) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  int d = g.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Scalar s = (g.parity(a) && g.parity(b)) ? Scalar(1) : Scalar(-1);
      ASSERT_EQ(g.bracket(g.basis(a), g.basis(b)), scale(g.bracket(g.basis(b), g.basis(a)), s));
    }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      TkkVector ab = g.bracket(g.basis(a), g.basis(b));
      for (int c = 0; c < d; ++c) {
        TkkVector lhs = g.bracket(g.basis(a), g.bracket(g.basis(b), g.basis(c)));
        TkkVector rhs = g.bracket(ab, g.basis(c));
        Scalar s = (g.parity(a) && g.parity(b)) ? Scalar(-1) : Scalar(1);
        rhs = add(rhs, g.bracket(g.basis(b), g.bracket(g.basis(a), g.basis(c))), s);
        ASSERT_EQ(lhs, rhs) << g.label(a) << " " << g.label(b) << " " << g.label(c);
      }
    }
}

TEST_P(LieFixture, RealizationIsHomomorphism) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  SigPtr rs = g.realization_signature();
  auto mons = monomials_up_to(*rs, 2);
  int d = g.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      TkkVector ab = g.bracket(g.basis(a), g.basis(b));
      for (const auto& mo : mons) {
        auto p = SuperPolynomial::monomial(rs, mo);
        SuperPolynomial l = g.realize(g.basis(a), g.realize(g.basis(b), p));
        SuperPolynomial r = g.realize(g.basis(b), g.realize(g.basis(a), p));
        l = (g.parity(a) && g.parity(b)) ? l + r : l - r;
        ASSERT_EQ(l, g.realize(ab, p)) << g.label(a) << " " << g.label(b) << " on " << p;
      }
    }
}

TEST_P(LieFixture, MatrixRealizationPreservesForm) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  SigPtr rs = g.realization_signature();
  int D = rs->dim();
  for (int a = 0; a < g.dim(); ++a) {
    CMatrix X = g.osp_matrix(g.basis(a), rs);
    for (int u = 0; u < D; ++u)
      for (int v = 0; v < D; ++v) {
        // <X u, v> + (-1)^{|u||X|} <u, X v>
        Scalar lhs, rhs;
        for (int k = 0; k < D; ++k) {
          lhs += X(k, u) * Scalar(rs->beta(k, v));
          rhs += Scalar(rs->beta(u, k)) * X(k, v);
        }
        Scalar s = (rs->parity(u) && g.parity(a)) ? Scalar(-1) : Scalar(1);
        ASSERT_TRUE((lhs + s * rhs).is_zero()) << g.label(a) << " " << u << " " << v;
      }
  }
}

TEST_P(LieFixture, CayleyClosedForms) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  Cayley c(g);
  Scalar i = Scalar::i();
  Scalar q = Scalar::frac(1, 4);
  for (int l = 0; l < g.N(); ++l) {
    // c(a,0,0) = (a/4, i L_a, a)
    TkkVector e = add(add(scale(g.basis(g.minus(l)), q), g.basis(g.L(l)), i), g.basis(g.plus(l)));
    EXPECT_EQ(c.apply(g.basis(g.minus(l))), e) << l;
    // c(0,0,a) = (a/4, -i L_a, a)
    e = add(add(scale(g.basis(g.minus(l)), q), g.basis(g.L(l)), -i), g.basis(g.plus(l)));
    EXPECT_EQ(c.apply(g.basis(g.plus(l))), e) << l;
    // c(0,L_a,0) = (i a/4, 0, -i a)
    e = add(scale(g.basis(g.minus(l)), i * q), g.basis(g.plus(l)), -i);
    EXPECT_EQ(c.apply(g.basis(g.L(l))), e) << l;
  }
  for (int k = 0; k < g.inn_count(); ++k) EXPECT_EQ(c.apply(g.basis(g.inn(k))), g.basis(g.inn(k)));
  for (int l = 0; l < g.N(); ++l)
    for (int k = 0; k < g.inn_count(); ++k) {
      // (a, I, -a) -> I + 2i L_a
      TkkVector x = add(add(g.basis(g.minus(l)), g.basis(g.inn(k))), g.basis(g.plus(l)), Scalar(-1));
      TkkVector e = add(g.basis(g.inn(k)), g.basis(g.L(l)), Scalar(2) * i);
      EXPECT_EQ(c.apply(x), e);
    }
}

TEST_P(LieFixture, CayleyPreservesBrackets) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  Cayley c(g);
  int d = g.dim();
  std::vector<TkkVector> img;
  for (int a = 0; a < d; ++a) img.push_back(c.apply(g.basis(a)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      ASSERT_EQ(c.apply(g.bracket(g.basis(a), g.basis(b))), g.bracket(img[a], img[b]))
          << g.label(a) << " " << g.label(b);
  for (int a = 0; a < d; ++a) EXPECT_EQ(c.inverse(img[a]), g.basis(a));
}

TEST_P(LieFixture, CayleyMapsKIntoIstr) {
  auto [m, n] = GetParam();
  TkkAlgebra g(Signature::standard(m, n));
  Cayley c(g);
  std::vector<TkkVector> k;
  for (int l = 0; l < g.N(); ++l) k.push_back(add(g.basis(g.minus(l)), g.basis(g.plus(l)), Scalar(-1)));
  for (int j = 0; j < g.inn_count(); ++j) k.push_back(g.basis(g.inn(j)));
  for (const auto& x : k) {
    TkkVector y = c.apply(x);
    for (int l = 0; l < g.N(); ++l) {
      EXPECT_TRUE(y[g.minus(l)].is_zero());
      EXPECT_TRUE(y[g.plus(l)].is_zero());
    }
  }
  // k closes under the bracket and has a one-dimensional center
  int K = static_cast<int>(k.size());
  CMatrix cond(static_cast<size_t>(K) * g.dim(), K);
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b) {
      TkkVector v = g.bracket(k[a], k[b]);
      for (int r = 0; r < g.dim(); ++r) cond(static_cast<size_t>(b) * g.dim() + r, a) = v[r];
    }
  EXPECT_EQ(cond.nullspace().size(), 1u);
}

TEST(Tkk, IstrClosesUnderBracket) {
  TkkAlgebra g(Signature::standard(5, 1));
  for (int a = g.L(0); a < g.plus(0); ++a)
    for (int b = g.L(0); b < g.plus(0); ++b) {
      TkkVector v = g.bracket(g.basis(a), g.basis(b));
      for (int l = 0; l < g.N(); ++l) {
        EXPECT_TRUE(v[g.minus(l)].is_zero());
        EXPECT_TRUE(v[g.plus(l)].is_zero());
      }
    }
}

TEST(Tkk, RealizationTable) {
  TkkAlgebra g(Signature::standard(4, 1));
  auto t = g.realization_terms(g.L(0));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].a, 0);
  EXPECT_EQ(t[0].b, 5);
  auto u = g.realization_terms(g.minus(0));
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].a, 4);
  EXPECT_EQ(u[0].b, 5);
  EXPECT_EQ(u[1].a, 4);
  EXPECT_EQ(u[1].b, 0);
  // odd index shifts by two
  auto w = g.realization_terms(g.L(4));
  EXPECT_EQ(w[0].a, 6);
  EXPECT_EQ(w[0].b, 4);
}

INSTANTIATE_TEST_SUITE_P(Configs, LieFixture,
                         ::testing::Values(std::pair{4, 0}, std::pair{4, 1}, std::pair{2, 2}, std::pair{3, 1}));
