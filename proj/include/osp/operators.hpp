#pragma once

#include <functional>

#include "osp/superpoly.hpp"

namespace osp {

// A context supplies left multiplication by x_i and the derivation d^i on some
// space of functions; all classical operators are built from those two.
struct PolyCtx {
  using value_type = SuperPolynomial;
  const Signature& sig;
  explicit PolyCtx(const Signature& s) : sig(s) {}
  value_type mul(int i, const value_type& f) const { return mul_var(i, f); }
  value_type d_upper(int i, const value_type& f) const { return osp::d_upper(i, f); }
  value_type zero(const value_type& f) const { return SuperPolynomial(f.sig()); }
  value_type euler(const value_type& f) const {
    SuperPolynomial r(f.sig());
    for (const auto& [mo, c] : f.terms()) r.add_term(mo, c * Scalar(static_cast<long>(mo.deg)));
    return r;
  }
};

template <class Ctx>
concept HasEuler = requires(const Ctx& c, const typename Ctx::value_type& f) {
  { c.euler(f) } -> std::same_as<typename Ctx::value_type>;
};

template <class Ctx>
typename Ctx::value_type d_lower(const Ctx& c, int j, const typename Ctx::value_type& f) {
  if (j < 0 || j >= c.sig.dim()) throw Error("derivative index out of range");
  auto r = c.zero(f);
  for (const auto& e : c.sig.lower_rows(j)) r += c.d_upper(e.b, f) * Scalar(e.c);
  return r;
}

template <class Ctx>
typename Ctx::value_type euler(const Ctx& c, const typename Ctx::value_type& f) {
  if constexpr (HasEuler<Ctx>) {
    return c.euler(f);
  } else {
    auto r = c.zero(f);
    for (int i = 0; i < c.sig.dim(); ++i) r += c.mul(i, c.d_upper(i, f));
    return r;
  }
}

template <class Ctx>
typename Ctx::value_type laplacian(const Ctx& c, const typename Ctx::value_type& f) {
  auto r = c.zero(f);
  for (const auto& e : c.sig.laplacian_terms()) r += c.d_upper(e.a, c.d_upper(e.b, f)) * Scalar(e.c);
  return r;
}

template <class Ctx>
typename Ctx::value_type r2_mul(const Ctx& c, const typename Ctx::value_type& f) {
  auto r = c.zero(f);
  for (const auto& e : c.sig.r2_terms()) r += c.mul(e.a, c.mul(e.b, f)) * Scalar(e.c);
  return r;
}

// L_ij = x_i d_j - (-1)^{|i||j|} x_j d_i
template <class Ctx>
typename Ctx::value_type angular(const Ctx& c, int i, int j, const typename Ctx::value_type& f) {
  if (i == j && !c.sig.odd(i)) throw Error("L_ii is only defined for odd i");
  auto a = c.mul(i, d_lower(c, j, f));
  auto b = c.mul(j, d_lower(c, i, f));
  if (c.sig.odd(i) && c.sig.odd(j)) return a + b;
  return a - b;
}

// ((-lambda + 2E) d_k - x_k Delta) f
template <class Ctx>
typename Ctx::value_type bessel(const Ctx& c, const Scalar& lambda, int k, const typename Ctx::value_type& f) {
  auto dk = d_lower(c, k, f);
  auto r = euler(c, dk) * Scalar(2) - dk * lambda;
  r -= c.mul(k, laplacian(c, f));
  return r;
}

// Modified Bessel operator at lambda = 2 - M with the sign flip at index 0.
template <class Ctx>
typename Ctx::value_type mbessel(const Ctx& c, int k, const typename Ctx::value_type& f) {
  auto r = bessel(c, Scalar(2 - c.sig.M()), k, f);
  if (k == 0) r *= Scalar(-1);
  return r;
}

// Convenience wrappers on plain polynomials.
inline SuperPolynomial d_lower(int j, const SuperPolynomial& p) { return d_lower(PolyCtx(p.signature()), j, p); }
inline SuperPolynomial euler(const SuperPolynomial& p) { return euler(PolyCtx(p.signature()), p); }
inline SuperPolynomial laplacian(const SuperPolynomial& p) { return laplacian(PolyCtx(p.signature()), p); }
inline SuperPolynomial r2_mul(const SuperPolynomial& p) { return r2_mul(PolyCtx(p.signature()), p); }
inline SuperPolynomial angular(int i, int j, const SuperPolynomial& p) {
  return angular(PolyCtx(p.signature()), i, j, p);
}
inline SuperPolynomial bessel(const Scalar& lambda, int k, const SuperPolynomial& p) {
  return bessel(PolyCtx(p.signature()), lambda, k, p);
}
inline SuperPolynomial mbessel(int k, const SuperPolynomial& p) { return mbessel(PolyCtx(p.signature()), k, p); }

inline SuperPolynomial r2_poly(const SigPtr& s) { return r2_mul(poly_one(s)); }

// r^2 = R^2 + x_0^2
inline SuperPolynomial small_r2_poly(const SigPtr& s) {
  SuperPolynomial r = r2_poly(s);
  r += mul_var(0, poly_var(s, 0));
  return r;
}

// Homogeneous-parity linear operator.
template <class V>
struct Operator {
  int parity = 0;
  std::function<V(const V&)> apply;
  V operator()(const V& f) const { return apply(f); }
};

// [A,B] f = A(B f) - (-1)^{|A||B|} B(A f)
template <class V>
V supercommutator(const Operator<V>& a, const Operator<V>& b, const V& f) {
  V r = a(b(f));
  V s = b(a(f));
  if (a.parity && b.parity) return r + s;
  return r - s;
}

}  // namespace osp
