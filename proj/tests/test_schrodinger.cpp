#include <gtest/gtest.h>

#include "osp/schrodinger.hpp"

using namespace osp;

namespace {

SuperPolynomial var(const SigPtr& s, int i) { return poly_var(s, i); }
SuperPolynomial one(const SigPtr& s) { return poly_one(s); }

WElement apply(DiffOp::Kind k, int i, const WElement& f) { return diffop_on_w(DiffOp{k, i}, f); }

// memoized pi on monomials, extended linearly
class PiCache {
 public:
  explicit PiCache(const TkkAlgebra& g) : g_(g) {}
  WElement basis(int a, const WElement& f) {
    WElement r(f.rate, SuperPolynomial(f.sig()));
    for (const auto& [mo, c] : f.poly.terms()) {
      auto key = std::make_pair(a, mo);
      auto it = memo_.find(key);
      if (it == memo_.end()) {
        TkkVector X = g_.basis(a);
        it = memo_.emplace(key, pi_apply(g_, X, WElement(2, SuperPolynomial::monomial(f.sig(), mo)))).first;
      }
      r += it->second * c;
    }
    return r;
  }
  WElement vec(const TkkVector& X, const WElement& f) {
    WElement r(f.rate, SuperPolynomial(f.sig()));
    for (int a = 0; a < g_.dim(); ++a)
      if (!X[a].is_zero()) r += basis(a, f) * X[a];
    return r;
  }

 private:
  const TkkAlgebra& g_;
  std::map<std::pair<int, Monomial>, WElement> memo_;
};

class PiFixture : public ::testing::TestWithParam<std::pair<int, int>> {};

}  // namespace

TEST(WElement, MakeW) {
  auto s = Signature::standard(5, 1);
  EXPECT_EQ(make_w(one(s), 2).poly, one(s));
  EXPECT_TRUE(make_w(r2_poly(s), 2).is_zero());
  WElement w = make_w(var(s, 0) * var(s, 0), 2);
  EXPECT_EQ(w.poly, r2_poly(s) + var(s, 0) * var(s, 0));
  EXPECT_EQ(w.poly.coefficient(Monomial{}), Scalar(0));
  EXPECT_THROW(make_w(one(s), 0), Error);
  EXPECT_THROW(make_w(one(s), -2), Error);
}

TEST(WElement, OperatorTable) {
  for (auto [m, n] : {std::pair{4, 0}, std::pair{5, 1}, std::pair{3, 2}}) {
    auto s = Signature::standard(m, n);
    int M = s->M();
    WElement e2 = make_w(one(s), 2);
    for (int k = 1; k < s->dim(); ++k)
      EXPECT_EQ(apply(DiffOp::Kind::ModBessel, k, e2), make_w(var(s, k) * Scalar(4), 2)) << k;
    EXPECT_EQ(apply(DiffOp::Kind::Euler, 0, e2), make_w(var(s, 0) * Scalar(-2), 2));
    WElement half = apply(DiffOp::Kind::ModBessel, 0, make_w(one(s), 4)) * Scalar::frac(1, 2);
    EXPECT_EQ(half, make_w(var(s, 0) * Scalar(8) + one(s) * Scalar(4 - 2 * M), 4));
  }
}

TEST(WElement, ScaledRateTable) {
  // E exp(-c x0) = -c x0 exp(-c x0), Btilde(x_k) exp(-c x0) = c^2 x_k exp(-c x0)
  auto s = Signature::standard(4, 1);
  for (int c : {1, 3, 6}) {
    WElement e = make_w(one(s), c);
    EXPECT_EQ(apply(DiffOp::Kind::Euler, 0, e), make_w(var(s, 0) * Scalar(-c), c));
    for (int k = 1; k < s->dim(); ++k)
      EXPECT_EQ(apply(DiffOp::Kind::ModBessel, k, e), make_w(var(s, k) * Scalar(c * c), c));
  }
}

TEST(WElement, TangentialRepresentativeIndependence) {
  auto s = Signature::standard(4, 1);
  auto R2 = r2_poly(s);
  std::vector<DiffOp> ops;
  ops.push_back({DiffOp::Kind::Euler});
  for (int k = 0; k < s->dim(); ++k) {
    ops.push_back({DiffOp::Kind::ModBessel, k});
    ops.push_back({DiffOp::Kind::Mul, k});
  }
  for (int i = 1; i < s->dim(); ++i)
    for (int j = i; j < s->dim(); ++j)
      if (i != j || s->odd(i)) ops.push_back({DiffOp::Kind::Angular, i, j});
  for (int i = 1; i < s->dim(); ++i) ops.push_back({DiffOp::Kind::Angular, 0, i});
  auto mons = monomials_up_to(*s, 2);
  for (const auto& d : ops)
    for (size_t a = 0; a < mons.size(); a += 3)
      for (size_t b = 0; b < mons.size(); b += 5) {
        auto q = SuperPolynomial::monomial(s, mons[a]);
        auto p = SuperPolynomial::monomial(s, mons[b]);
        WElement lhs = diffop_on_w(d, ExpPoly(2, q + R2 * p));
        ASSERT_EQ(lhs, diffop_on_w(d, make_w(q, 2))) << static_cast<int>(d.kind) << " " << d.i << " " << q << " " << p;
      }
}

TEST(Pi, Examples) {
  for (auto [m, n] : {std::pair{4, 0}, std::pair{4, 1}, std::pair{6, 1}}) {
    auto s = Signature::standard(m, n);
    TkkAlgebra g(s);
    Scalar i = Scalar::i();
    WElement e2 = make_w(one(s), 2);
    EXPECT_EQ(pi_apply(g, g.basis(g.minus(0)), e2), make_w(var(s, 0) * (Scalar(-2) * i), 2));
    EXPECT_EQ(pi_apply(g, g.basis(g.L(0)), e2),
              make_w(var(s, 0) * Scalar(2) + one(s) * Scalar(Rational(2 - s->M(), 2)), 2));
    for (int k = 1; k < s->dim(); ++k) {
      EXPECT_EQ(pi_apply(g, g.basis(g.plus(k)), e2), make_w(var(s, k) * (Scalar(-2) * i), 2));
      EXPECT_EQ(pi_apply(g, g.basis(g.minus(k)), e2), make_w(var(s, k) * (Scalar(-2) * i), 2));
    }
    EXPECT_THROW(pi_apply(g, g.basis(g.minus(0)), make_w(one(s), 4)), Error);
  }
}

TEST_P(PiFixture, RepresentationProperty) {
  auto [m, n] = GetParam();
  auto s = Signature::standard(m, n);
  TkkAlgebra g(s);
  PiCache pi(g);
  std::vector<WElement> fs;
  for (int k = 0; k <= 2; ++k)
    for (const auto& mo : normal_form_monomials(*s, k)) fs.push_back(make_w(SuperPolynomial::monomial(s, mo), 2));
  int d = g.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      TkkVector ab = g.bracket(g.basis(a), g.basis(b));
      bool both_odd = g.parity(a) && g.parity(b);
      for (const auto& f : fs) {
        WElement l = pi.basis(a, pi.basis(b, f));
        WElement r = pi.basis(b, pi.basis(a, f));
        l = both_odd ? l + r : l - r;
        ASSERT_EQ(l, pi.vec(ab, f)) << g.label(a) << " " << g.label(b) << " on " << f;
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Configs, PiFixture,
                         ::testing::Values(std::pair{4, 0}, std::pair{5, 0}, std::pair{6, 1}, std::pair{7, 1},
                                           std::pair{4, 1}, std::pair{2, 2}));

TEST(Radial, ExpOfNilpotent) {
  auto s = Signature::standard(2, 1);
  auto t12 = var(s, 2) * var(s, 3);
  BaseFunction ex{"exp", {}};
  for (int j = 0; j <= 2; ++j) ex.derivative.push_back([s](const SuperPolynomial&) { return poly_one(s); });
  EXPECT_EQ(radial_apply(ex, t12), one(s) + t12);
}

TEST(Radial, SquareTaylor) {
  auto s = Signature::standard(2, 1);
  auto f = var(s, 0) + var(s, 2) * var(s, 3);
  BaseFunction sq{"square",
                  {[](const SuperPolynomial& x) { return x * x; },
                   [](const SuperPolynomial& x) { return x * Scalar(2); },
                   [s](const SuperPolynomial&) { return poly_one(s) * Scalar(2); }}};
  EXPECT_EQ(radial_apply(sq, f), var(s, 0) * var(s, 0) + var(s, 0) * var(s, 2) * var(s, 3) * Scalar(2));
  EXPECT_EQ(radial_apply(sq, f), f * f);
  BaseFunction shortt{"short", {sq.derivative[0], sq.derivative[1]}};
  EXPECT_THROW(radial_apply(shortt, f), Error);
}

TEST(Radial, AbsXSquares) {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{4, 3}}) {
    auto s = Signature::standard(m, n);
    auto x0 = var(s, 0);
    auto f = (x0 * x0 + small_r2_poly(s)) * Scalar::frac(1, 2);
    RadialSeries absx = radial_power(Rational(1, 2), f);
    RadialSeries sq = absx * absx;
    RadialSeries expect(s);
    expect.add(1, one(s));
    SuperPolynomial nu = f - even_body(f);
    expect.add(0, nu);
    EXPECT_EQ(sq, expect) << m << "," << n;
    EXPECT_FALSE(nu.is_zero());
    // |X| carries Grassmann order up to 2n
    int top = 0;
    for (const auto& [e, c] : absx.terms()) top = std::max(top, c.degree());
    EXPECT_EQ(top, 2 * n);
  }
}
