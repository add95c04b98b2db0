#pragma once

#include <functional>

#include "osp/bipoly.hpp"
#include "osp/harmonics.hpp"
#include "osp/schrodinger.hpp"

namespace osp {

// Variables of a monomial in canonical order, with multiplicity.
inline std::vector<int> monomial_word(const Signature& s, const Monomial& mo) {
  std::vector<int> w;
  for (int i = 0; i < s.m(); ++i)
    for (int e = 0; e < mo.e[i]; ++e) w.push_back(i);
  for (int k = 0; k < 2 * s.n(); ++k)
    if (mo.has_odd(k)) w.push_back(s.m() + k);
  return w;
}

// p(Btilde) f for a monomial p: the rightmost factor acts first.
template <class Ctx>
typename Ctx::value_type bessel_word(const Ctx& c, const Monomial& p, typename Ctx::value_type f) {
  auto w = monomial_word(c.sig, p);
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = mbessel(c, *it, f);
  return f;
}

// <p, q> = p(Btilde) conj(q) at z = 0
inline Scalar bf_product(const SuperPolynomial& p, const SuperPolynomial& q) {
  p.check(q);
  SuperPolynomial qb = q.conj();
  PolyCtx ctx(q.signature());
  Scalar r;
  for (const auto& [mo, a] : p.terms()) {
    SuperPolynomial part = qb.homogeneous_part(mo.deg);
    if (part.is_zero()) continue;
    r += a * bessel_word(ctx, mo, part).constant_term();
  }
  return r;
}

inline std::vector<Monomial> fock_basis(const Signature& s, int k) { return normal_form_monomials(s, k); }

// Gram matrix of the Bessel-Fischer product on degree-k monomials, normal-form ones by default.
inline CMatrix gram(const SigPtr& s, int k, bool normal_only = true) {
  auto basis = normal_only ? fock_basis(*s, k) : monomials_of_degree(*s, k);
  std::map<Monomial, size_t> index;
  for (size_t a = 0; a < basis.size(); ++a) index[basis[a]] = a;
  CMatrix G(basis.size(), basis.size());
  PolyCtx ctx(*s);
  int top = s->dim() - 1;
  for (size_t b = 0; b < basis.size(); ++b) {
    // choose factors from the right: indices non-increasing, odd ones strictly, x_0 at most once
    Monomial word;
    std::function<void(const SuperPolynomial&, int, int)> dfs = [&](const SuperPolynomial& f, int left, int maxi) {
      if (f.is_zero()) return;
      if (left == 0) {
        G(index.at(word), b) = f.constant_term();
        return;
      }
      for (int i = maxi; i >= 0; --i) {
        if (normal_only && i == 0 && left > 1) break;
        SuperPolynomial g = mbessel(ctx, i, f);
        Monomial saved = word;
        if (s->odd(i))
          word.odd |= 1u << (i - s->m());
        else
          ++word.e[i];
        ++word.deg;
        dfs(g, left - 1, s->odd(i) ? i - 1 : i);
        word = saved;
      }
    };
    dfs(SuperPolynomial::monomial(s, basis[b]), k, top);
  }
  return G;
}

inline bool kernel_defined(int M) { return !in_minus_2N(M - 2); }

inline Rational kernel_coefficient(int M, int k) {
  if (!kernel_defined(M)) throw Error("reproducing kernel needs M-2 outside -2N");
  return Rational(1) / (rpow(Rational(4), k) * factorial(k) * pochhammer(Rational(M - 2, 2), k));
}

// K^k(z, w) with the second alphabet standing for conj(w).
inline BiSuperPolynomial kernel(const SigPtr& z, const SigPtr& w, int k) {
  Rational c = kernel_coefficient(z->M(), k);
  BiSuperPolynomial pair = pairing_poly(z, w);
  BiSuperPolynomial r = BiSuperPolynomial::one(z, w);
  for (int j = 0; j < k; ++j) r = r * pair;
  return r * Scalar(c);
}

// <p, K^k(., w)> as a polynomial in w
inline SuperPolynomial kernel_pairing(const SuperPolynomial& p, const SigPtr& w, int k) {
  const SigPtr& z = p.sig();
  BiSuperPolynomial K = kernel(z, w, k);
  BiCtx ctx(*z, false);
  SuperPolynomial r(w);
  for (const auto& [mo, a] : p.terms()) {
    if (mo.deg != k) continue;
    r += bessel_word(ctx, mo, K).first_at_zero() * a;
  }
  return r;
}

inline SuperPolynomial pi_complex_apply(const TkkAlgebra& g, const TkkVector& X, const SuperPolynomial& p) {
  return reduce(pi_generic(g, X, PolyCtx(p.signature()), p));
}

template <class Ctx>
typename Ctx::value_type rho_basis(const TkkAlgebra& g, int a, const Ctx& c, const typename Ctx::value_type& f) {
  using K = TkkAlgebra::Kind;
  Scalar mi2 = Scalar(Rational(-1, 2)) * Scalar::i();
  Scalar M(c.sig.M());
  switch (g.kind(a)) {
    case K::Minus: {
      int l = g.jordan_index(a);
      auto r = c.mul(l, f) + mbessel(c, l, f);
      if (l == 0)
        r += f * (M - Scalar(2)) + euler(c, f) * Scalar(2);
      else
        r += angular(c, 0, l, f) * Scalar(2);
      return r * mi2;
    }
    case K::L: {
      int l = g.jordan_index(a);
      return (c.mul(l, f) - mbessel(c, l, f)) * Scalar::frac(1, 2);
    }
    case K::Inn: {
      auto [p, q] = g.inn_pair(a - g.inn(0));
      return angular(c, p, q, f);
    }
    case K::Plus: {
      int l = g.jordan_index(a);
      auto r = c.mul(l, f) + mbessel(c, l, f);
      if (l == 0)
        r += f * (Scalar(2) - M) - euler(c, f) * Scalar(2);
      else
        r -= angular(c, 0, l, f) * Scalar(2);
      return r * mi2;
    }
  }
  throw Error("unknown basis element");
}

template <class Ctx>
typename Ctx::value_type rho_generic(const TkkAlgebra& g, const TkkVector& X, const Ctx& c,
                                     const typename Ctx::value_type& f) {
  auto r = c.zero(f);
  for (int a = 0; a < g.dim(); ++a)
    if (!X[a].is_zero()) r += rho_basis(g, a, c, f) * X[a];
  return r;
}

inline SuperPolynomial rho_apply(const TkkAlgebra& g, const TkkVector& X, const SuperPolynomial& p) {
  return reduce(rho_generic(g, X, PolyCtx(p.signature()), p));
}

}  // namespace osp
