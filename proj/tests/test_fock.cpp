#include <gtest/gtest.h>

#include "osp/fock.hpp"

using namespace osp;

namespace {

SigPtr zsig(int m, int n) { return Signature::standard(m, n, VarSet::Z); }
SuperPolynomial var(const SigPtr& s, int i) { return poly_var(s, i); }
SuperPolynomial one(const SigPtr& s) { return poly_one(s); }
SuperPolynomial mono(const SigPtr& s, const Monomial& mo) { return SuperPolynomial::monomial(s, mo); }

// <z_i p', q> = (-1)^{|i||p'|} <p', Btilde(z_i) q>, peeling the leftmost factor first
Scalar bf_oracle(const Signature& s, std::vector<int> word, SuperPolynomial qbar) {
  if (word.empty()) return qbar.constant_term();
  int i = word.front();
  word.erase(word.begin());
  int rest = 0;
  for (int j : word) rest += s.odd(j);
  Scalar sign = (s.odd(i) && rest % 2) ? Scalar(-1) : Scalar(1);
  return sign * bf_oracle(s, word, mbessel(i, qbar));
}
Scalar bf_oracle(const SuperPolynomial& p, const SuperPolynomial& q) {
  Scalar r;
  for (const auto& [mo, a] : p.terms()) r += a * bf_oracle(p.signature(), monomial_word(p.signature(), mo), q.conj());
  return r;
}

// Bessel-Fischer form on F through cached Gram matrices
class FockForm {
 public:
  explicit FockForm(SigPtr s) : s_(std::move(s)) {}
 // <p, e> for every basis monomial e of each degree, and <e, q> likewise
  std::map<int, std::vector<Scalar>> against_basis(const SuperPolynomial& p, bool p_first) {
    std::map<int, std::vector<Scalar>> out;
    SuperPolynomial a = reduce(p);
    for (int k = 0; k <= a.degree(); ++k) {
      auto pa = a.homogeneous_part(k);
      if (pa.is_zero()) continue;
      auto& [basis, G] = level(k);
      auto u = basis.coords(pa);
      std::vector<Scalar> r(u.size());
      for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < u.size(); ++j)
          r[j] += p_first ? u[i] * G(i, j) : G(j, i) * u[i].conj();
      }
      out[k] = std::move(r);
    }
    return out;
  }
  size_t index(const Monomial& mo) { return *level(mo.deg).first.find(mo); }

 private:
  std::pair<MonomialBasis, CMatrix>& level(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end())
      it = cache_.emplace(k, std::make_pair(MonomialBasis(fock_basis(*s_, k)), gram(s_, k))).first;
    return it->second;
  }
  SigPtr s_;
  std::map<int, std::pair<MonomialBasis, CMatrix>> cache_;
};

std::vector<SuperPolynomial> fock_monomials(const SigPtr& s, int upto) {
  std::vector<SuperPolynomial> out;
  for (int k = 0; k <= upto; ++k)
    for (const auto& mo : fock_basis(*s, k)) out.push_back(mono(s, mo));
  return out;
}

class FockFixture : public ::testing::TestWithParam<std::pair<int, int>> {};
class SmallFixture : public ::testing::TestWithParam<std::pair<int, int>> {};

}  // namespace

TEST(BesselFischer, Examples) {
  for (auto [m, n] : {std::pair{4, 0}, std::pair{4, 1}, std::pair{2, 2}, std::pair{5, 2}}) {
    auto s = zsig(m, n);
    int M = s->M();
    EXPECT_EQ(bf_product(one(s), one(s)), Scalar(1));
    EXPECT_EQ(bf_product(var(s, 0), var(s, 0)), Scalar(M - 2));
    if (n > 0) {
      EXPECT_EQ(bf_product(var(s, m), var(s, m + n)), Scalar(2 - M));
      EXPECT_EQ(bf_product(var(s, m + n), var(s, m)), Scalar(M - 2));
    }
    EXPECT_EQ(bf_product(var(s, 1), var(s, 1)), Scalar(M - 2));
  }
}

TEST_P(SmallFixture, MatchesPeelingOracle) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto mons = monomials_up_to(*s, 3);
  Scalar w(Rational(1, 3), Rational(-2));
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (a.deg != b.deg) continue;
      auto p = mono(s, a) * w, q = mono(s, b) * Scalar::i();
      ASSERT_EQ(bf_product(p, q), bf_oracle(p, q)) << p << " | " << q;
    }
}

TEST_P(SmallFixture, SesquilinearAndOrthogonal) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto mons = monomials_up_to(*s, 4);
  Scalar al(Rational(2), Rational(1)), be(Rational(-1, 2), Rational(3));
  for (size_t a = 0; a < mons.size(); a += 3)
    for (size_t b = 0; b < mons.size(); b += 2) {
      auto p = mono(s, mons[a]), q = mono(s, mons[b]);
      if (mons[a].deg != mons[b].deg) {
        ASSERT_TRUE(bf_product(p, q).is_zero());
        continue;
      }
      auto r = mono(s, mons[(a + 1) % mons.size()]), t = mono(s, mons[(b + 1) % mons.size()]);
      Scalar lhs = bf_product(p * al + r, q * be + t);
      Scalar rhs = al * be.conj() * bf_product(p, q) + al * bf_product(p, t) + be.conj() * bf_product(r, q) +
                   bf_product(r, t);
      ASSERT_EQ(lhs, rhs);
    }
}

TEST_P(SmallFixture, ShiftIdentity) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto mons = monomials_up_to(*s, 3);
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (b.deg != a.deg + 1) continue;
      auto p = mono(s, a), q = mono(s, b);
      for (int i = 0; i < s->dim(); ++i) {
        Scalar sign = (s->odd(i) && p.parity()) ? Scalar(-1) : Scalar(1);
        ASSERT_EQ(bf_product(mul_var(i, p), q), sign * bf_product(p, mbessel(i, q)));
      }
    }
}

TEST_P(SmallFixture, Superhermitian) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto mons = monomials_up_to(*s, 4);
  Scalar w(Rational(1), Rational(1));
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (a.deg != b.deg) continue;
      auto p = mono(s, a) * w, q = mono(s, b);
      Scalar sign = (p.parity() && q.parity()) ? Scalar(-1) : Scalar(1);
      ASSERT_EQ(bf_product(p, q), sign * bf_product(q, p).conj()) << p << " | " << q;
    }
}

TEST_P(SmallFixture, AngularAdjointness) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto mons = monomials_up_to(*s, 3);
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (a.deg != b.deg || a.deg == 0) continue;
      auto p = mono(s, a), q = mono(s, b);
      for (int i = 1; i < s->dim(); ++i) {
        Scalar si = (s->odd(i) && p.parity()) ? Scalar(-1) : Scalar(1);
        ASSERT_EQ(bf_product(angular(0, i, p), q), si * bf_product(p, angular(0, i, q)));
        for (int j = i; j < s->dim(); ++j) {
          if (i == j && !s->odd(i)) continue;
          Scalar sij = ((s->odd(i) + s->odd(j)) % 2 && p.parity()) ? Scalar(1) : Scalar(-1);
          ASSERT_EQ(bf_product(angular(i, j, p), q), sij * bf_product(p, angular(i, j, q)));
        }
      }
    }
}

TEST_P(SmallFixture, IdealAnnihilation) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  auto R2 = r2_poly(s);
  auto mons = monomials_up_to(*s, 3);
  for (const auto& a : mons)
    for (const auto& b : mons) {
      if (a.deg != b.deg + 2) continue;
      auto p = mono(s, a), q = mono(s, b);
      ASSERT_TRUE(bf_product(p, R2 * q).is_zero());
      ASSERT_TRUE(bf_product(R2 * q, p).is_zero());
    }
}

INSTANTIATE_TEST_SUITE_P(Configs, SmallFixture,
                         ::testing::Values(std::pair{4, 0}, std::pair{3, 1}, std::pair{2, 2}, std::pair{4, 1}));

TEST(Kernel, Examples) {
  auto z = zsig(5, 1);
  auto w = Signature::standard(5, 1, VarSet::W);
  EXPECT_EQ(kernel(z, w, 0), BiSuperPolynomial::one(z, w));
  EXPECT_EQ(kernel_pairing(var(z, 0), w, 1), var(w, 0));
  auto p = var(z, 1) * var(z, 2);
  EXPECT_EQ(reduce(kernel_pairing(p, w, 2)), reduce(var(w, 1) * var(w, 2)));
  EXPECT_THROW(kernel(zsig(2, 1), Signature::standard(2, 1, VarSet::W), 1), Error);
  EXPECT_THROW(kernel(zsig(2, 2), Signature::standard(2, 2, VarSet::W), 1), Error);
}

TEST_P(FockFixture, ReproducingKernel) {
  auto [m, n] = GetParam();
  auto z = zsig(m, n);
  if (!kernel_defined(z->M())) GTEST_SKIP() << "M-2 in -2N";
  auto w = Signature::standard(m, n, VarSet::W);
  for (int k = 0; k <= 4; ++k)
    for (const auto& mo : fock_basis(*z, k)) {
      auto p = mono(z, mo);
      ASSERT_EQ(reduce(kernel_pairing(p, w, k)), reduce(p.relabel(w))) << p;
    }
}

TEST(Gram, Examples) {
  auto g0 = gram(zsig(4, 0), 0);
  ASSERT_EQ(g0.rows(), 1u);
  EXPECT_EQ(g0(0, 0), Scalar(1));
  EXPECT_EQ(gram(zsig(4, 0), 1).rank(), 4u);
}

TEST(Gram, MatchesDirectProduct) {
  auto s = zsig(4, 1);
  for (int k = 0; k <= 3; ++k) {
    auto basis = fock_basis(*s, k);
    CMatrix G = gram(s, k);
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = 0; b < basis.size(); ++b) ASSERT_EQ(G(a, b), bf_product(mono(s, basis[a]), mono(s, basis[b])));
  }
}

TEST(Gram, DegenerateCase) {
  // M = -2: radical in degree 2 - M/2 = 3 contains the z0-free harmonics
  auto s = zsig(2, 2);
  auto basis = MonomialBasis(fock_basis(*s, 3));
  CMatrix G = gram(s, 3);
  EXPECT_LT(G.rank(), basis.size());
  std::vector<Monomial> free;
  for (const auto& mo : monomials_of_degree(*s, 3))
    if (mo.e[0] == 0) free.push_back(mo);
  MonomialBasis dom(free);
  MonomialBasis cod(monomials_of_degree(*s, 1));
  QMatrix lap = real_operator_matrix(s, dom, cod, [](const SuperPolynomial& p) { return laplacian(p); });
  auto harm = nullspace_basis(s, 3, lap, dom);
  ASSERT_FALSE(harm.basis.empty());
  for (const auto& q : harm.basis) {
    auto v = basis.coords(reduce(q));
    auto col = G.apply(v);
    for (const auto& c : col) EXPECT_TRUE(c.is_zero()) << q;
    for (int i = 0; i < s->dim(); ++i) EXPECT_TRUE(mbessel(i, q).is_zero());
  }
}

TEST_P(FockFixture, GramRankMatchesKernelCondition) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  for (int k = 0; k <= 3; ++k) {
    CMatrix G = gram(s, k);
    bool full = G.rank() == G.rows();
    // degenerate only from degree 2 - M/2 on
    bool expect_full = kernel_defined(s->M()) || k < 2 - s->M() / 2;
    EXPECT_EQ(full, expect_full) << k;
  }
}

TEST_P(FockFixture, GradedDimension) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  for (int k = 0; k <= 5; ++k) {
    auto d = graded_dim_F(*s, k);
    EXPECT_EQ(Integer(static_cast<long>(fock_basis(*s, k).size())), d.count);
    EXPECT_EQ(d.count, d.closed_form);
  }
}

TEST(PiComplex, Examples) {
  auto s = zsig(4, 1);
  TkkAlgebra g(Signature::standard(4, 1));
  int M = s->M();
  Scalar i = Scalar::i();
  EXPECT_EQ(pi_complex_apply(g, g.basis(g.L(0)), one(s)), one(s) * Scalar(Rational(2 - M, 2)));
  EXPECT_EQ(pi_complex_apply(g, g.basis(g.minus(1)), one(s)), var(s, 1) * (Scalar(-2) * i));
  EXPECT_EQ(pi_complex_apply(g, g.basis(g.plus(1)), var(s, 1)), one(s) * (Scalar::frac(-1, 2) * i * Scalar(M - 2)));
}

TEST(Rho, Examples) {
  for (auto [m, n] : {std::pair{4, 0}, std::pair{5, 1}, std::pair{2, 2}}) {
    auto s = zsig(m, n);
    TkkAlgebra g(Signature::standard(m, n));
    Cayley c(g);
    int M = s->M();
    Scalar i = Scalar::i();
    auto z0 = var(s, 0);
    EXPECT_EQ(rho_apply(g, g.basis(g.L(0)), z0), reduce((z0 * z0 - one(s) * Scalar(M - 2)) * Scalar::frac(1, 2)));
    EXPECT_EQ(rho_apply(g, g.basis(g.L(0)), z0), (small_r2_poly(s) - one(s) * Scalar(M - 2)) * Scalar::frac(1, 2));
    TkkVector minus2 = g.zero();
    minus2[g.plus(0)] = Scalar(-2);
    TkkVector rho_minus = c.inverse(minus2);
    TkkVector half = g.zero();
    half[g.minus(0)] = Scalar::frac(-1, 2);
    TkkVector rho_plus = c.inverse(half);
    std::vector<SuperPolynomial> pw{one(s)};
    for (int k = 1; k <= 6; ++k) pw.push_back(pw.back() * z0);
    for (int k = 0; k <= 5; ++k) {
      SuperPolynomial down = k ? reduce(pw[k - 1]) * (i * Scalar(k * (M + k - 3))) : SuperPolynomial(s);
      EXPECT_EQ(rho_apply(g, rho_minus, reduce(pw[k])), down) << k;
      EXPECT_EQ(rho_apply(g, rho_plus, reduce(pw[k])), reduce(pw[k + 1]) * i) << k;
    }
  }
}

TEST_P(FockFixture, RhoIsPiComplexAfterCayley) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  TkkAlgebra g(Signature::standard(m, n));
  Cayley c(g);
  auto fs = fock_monomials(s, 3);
  for (int a = 0; a < g.dim(); ++a) {
    TkkVector cx = c.apply(g.basis(a));
    for (const auto& f : fs) ASSERT_EQ(rho_apply(g, g.basis(a), f), pi_complex_apply(g, cx, f)) << g.label(a) << " " << f;
  }
}

TEST_P(FockFixture, RhoRepresentation) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  TkkAlgebra g(Signature::standard(m, n));
  std::map<std::pair<int, Monomial>, SuperPolynomial> memo;
  auto rb = [&](int a, const SuperPolynomial& f) {
    SuperPolynomial r(s);
    for (const auto& [mo, c] : f.terms()) {
      auto key = std::make_pair(a, mo);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, rho_apply(g, g.basis(a), mono(s, mo))).first;
      r += it->second * c;
    }
    return r;
  };
  auto fs = fock_monomials(s, 3);
  int d = g.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      TkkVector ab = g.bracket(g.basis(a), g.basis(b));
      bool both_odd = g.parity(a) && g.parity(b);
      for (const auto& f : fs) {
        auto l = rb(a, rb(b, f));
        auto r = rb(b, rb(a, f));
        l = both_odd ? l + r : l - r;
        SuperPolynomial e(s);
        for (int k = 0; k < d; ++k)
          if (!ab[k].is_zero()) e += rb(k, f) * ab[k];
        ASSERT_EQ(l, e) << g.label(a) << " " << g.label(b) << " on " << f;
      }
    }
}

TEST_P(FockFixture, RhoSkewSupersymmetric) {
  auto [m, n] = GetParam();
  auto s = zsig(m, n);
  TkkAlgebra g(Signature::standard(m, n));
  FockForm form(s);
  auto fs = fock_monomials(s, 3);
  auto mons = [&] {
    std::vector<Monomial> v;
    for (int k = 0; k <= 3; ++k)
      for (const auto& mo : fock_basis(*s, k)) v.push_back(mo);
    return v;
  }();
  auto at = [&](std::map<int, std::vector<Scalar>>& m, const Monomial& mo) {
    auto it = m.find(mo.deg);
    return it == m.end() ? Scalar(0) : it->second[form.index(mo)];
  };
  for (int a = 0; a < g.dim(); ++a) {
    std::vector<std::map<int, std::vector<Scalar>>> left, right;
    for (const auto& f : fs) {
      SuperPolynomial img = rho_apply(g, g.basis(a), f);
      left.push_back(form.against_basis(img, true));
      right.push_back(form.against_basis(img, false));
    }
    for (size_t u = 0; u < fs.size(); ++u)
      for (size_t v = 0; v < fs.size(); ++v) {
        Scalar sign = (g.parity(a) && fs[u].parity()) ? Scalar(-1) : Scalar(1);
        Scalar lhs = at(left[u], mons[v]) + sign * at(right[v], mons[u]);
        ASSERT_TRUE(lhs.is_zero()) << g.label(a) << " " << fs[u] << " " << fs[v];
      }
  }
}

INSTANTIATE_TEST_SUITE_P(Configs, FockFixture,
                         ::testing::Values(std::pair{4, 0}, std::pair{5, 0}, std::pair{6, 1}, std::pair{7, 1},
                                           std::pair{4, 1}, std::pair{2, 2}));
