#pragma once

#include <mutex>

#include "osp/fock.hpp"
#include "osp/integral.hpp"

namespace osp {

// B_alpha(t) = sum_l c_l t^l with c_l = Gamma(M/2-1) / (l! Gamma(l+M/2-1+alpha))
struct BKernelSeries {
  int M;
  int alpha = 0;

  Rational coefficient(int l) const {
    Rational a(M - 2, 2);
    Rational p = pochhammer(a, l + alpha);
    if (sgn(p) == 0) throw Error("B-kernel needs M/2-1 outside -N");
    return Rational(1) / (factorial(l) * p);
  }

  // B_alpha(x|z) up to z-degree d, x first and z second
  BiSuperPolynomial truncated(const SigPtr& s, int d) const {
    BiSuperPolynomial pair = pairing_poly(s, s);
    BiSuperPolynomial pw = BiSuperPolynomial::one(s, s);
    BiSuperPolynomial r(s, s);
    for (int l = 0; l <= d; ++l) {
      r += pw * Scalar(coefficient(l));
      pw = pw * pair;
    }
    return r;
  }
};

// normal form modulo R^2 in the first alphabet
inline BiSuperPolynomial reduce_first(const BiSuperPolynomial& f) {
  std::map<Monomial, SuperPolynomial> by_second;
  for (const auto& [bm, c] : f.terms()) by_second.try_emplace(bm.b, f.first_sig()).first->second.add_term(bm.a, c);
  BiSuperPolynomial r(f.first_sig(), f.second_sig());
  for (const auto& [b, p] : by_second) {
    SuperPolynomial q = reduce(p);
    for (const auto& [a, c] : q.terms()) r.add_term({a, b}, c);
  }
  return r;
}

// exp(-B~(z0)) p, a finite sum
inline SuperPolynomial exp_minus_bessel0(const SuperPolynomial& p) {
  PolyCtx ctx(p.signature());
  SuperPolynomial r = p, term = p;
  for (int j = 1; !term.is_zero(); ++j) {
    term = mbessel(ctx, 0, term) * Scalar(Rational(-1, j));
    r += term;
  }
  return r;
}

inline SuperPolynomial scale_variables(const SuperPolynomial& p, const Rational& c) {
  SuperPolynomial r(p.sig());
  for (const auto& [mo, a] : p.terms()) r.add_term(mo, a * Scalar(rpow(c, mo.deg)));
  return r;
}

inline SigPtr w_signature(const SigPtr& s) { return s->varset() == VarSet::X ? s : s->relabel(VarSet::X); }
inline SigPtr fock_signature(const SigPtr& s) { return s->varset() == VarSet::Z ? s : s->relabel(VarSet::Z); }

// exp(-2|X|) [exp(-B~(z0)) p](4x); valid for every M
inline WElement sb_inverse_closed(const SuperPolynomial& p) {
  return make_w(scale_variables(exp_minus_bessel0(p), 4).relabel(w_signature(p.sig())), 2);
}

// Homogeneous-degree formula; needs (M/2-1)_r != 0.
inline WElement sb_inverse_explicit(const SuperPolynomial& p) {
  const SigPtr& s = p.sig();
  int M = s->M();
  PolyCtx ctx(*s);
  BiSuperPolynomial pair = pairing_poly(s, s);
  SuperPolynomial z0 = poly_var(s, 0);
  SuperPolynomial out(w_signature(s));
  std::map<int, SuperPolynomial> parts;
  for (const auto& [mo, a] : p.terms()) parts.try_emplace(mo.deg, s).first->second.add_term(mo, a);
  for (const auto& [k, pk] : parts) {
    std::vector<BiSuperPolynomial> pw{BiSuperPolynomial::one(s, s)};
    for (int l = 1; l <= k; ++l) pw.push_back(pw.back() * pair);
    SuperPolynomial z0j = poly_one(s);
    for (int j = 0; j <= k; ++j, z0j = z0j * z0) {
      Rational poch = pochhammer(Rational(M - 2, 2), k - j);
      if (sgn(poch) == 0) throw Error("explicit inverse needs M/2-1 outside -N");
      Rational c = Rational(j % 2 ? -1 : 1) / (factorial(j) * factorial(k - j) * poch);
      BiSuperPolynomial f = BiSuperPolynomial::from_second(s, z0j) * pw[k - j];
      for (const auto& [bm, b] : f.terms()) {
        Scalar v = bessel_word(ctx, bm.b, pk).constant_term();
        if (v.is_zero()) continue;
        out.add_term(bm.a, b * v * Scalar(c));
      }
    }
  }
  return make_w(out, 2);
}

inline WElement sb_inverse(const SuperPolynomial& p) {
  return kernel_defined(p.signature().M()) ? sb_inverse_explicit(p) : sb_inverse_closed(p);
}

struct HermiteData {
  Monomial alpha;
  SuperPolynomial H;
  WElement h;
};

// (1/2 B~)^alpha exp(-4x0), factors in canonical order, rightmost acting first
inline SuperPolynomial hermite_direct(const SigPtr& sig, const Monomial& alpha) {
  SigPtr s = w_signature(sig);
  ExpPoly f = bessel_word(ExpCtx(*s), alpha, ExpPoly(4, poly_one(s)));
  return reduce(f.poly * Scalar(rpow(Rational(1, 2), alpha.deg)));
}

inline HermiteData hermite(const SigPtr& s, const Monomial& alpha) {
  SuperPolynomial a = hermite_direct(s, alpha);
  SuperPolynomial z = SuperPolynomial::monomial(fock_signature(s), alpha) * Scalar(rpow(Rational(2), alpha.deg));
  SuperPolynomial b = sb_inverse(z).poly;
  if (a != b) throw Error("Hermite routes disagree: " + a.to_string() + " vs " + b.to_string());
  return {alpha, a, WElement(2, a)};
}

struct Outcome {
  bool pass = true;
  std::string witness;
};

inline Outcome compare(const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
  SuperPolynomial d = reduce(lhs - rhs);
  if (d.is_zero()) return {};
  return {false, d.to_string()};
}

class SegalBargmann {
 public:
  SegalBargmann(int m, int n, int max_degree = 12)
      : W_(m, n), zsig_(fock_signature(W_.sig())), B_{W_.sig()->M()}, cap_(max_degree) {}

  const SigPtr& sig() const { return W_.sig(); }
  const SigPtr& fock_sig() const { return zsig_; }
  const WIntegral& integral() const { return W_; }

  SuperPolynomial operator()(const WElement& f) const {
    SuperPolynomial r(zsig_);
    if (f.is_zero()) return r;
    if (f.rate != 2) throw Error("SB acts on W only at rate 2");
    for (const auto& [mo, c] : f.poly.terms()) r += on_monomial(mo) * c;
    return r;
  }

  Outcome check_intertwine(const TkkAlgebra& g, const TkkVector& X, const WElement& f) const {
    return compare((*this)(pi_apply(g, X, f)), rho_apply(g, X, (*this)(f)));
  }

  Outcome check_unitary(const WElement& f, const WElement& g) const {
    Scalar lhs = bf_product((*this)(f), (*this)(g));
    Scalar rhs = W_.form(f, g);
    if (lhs == rhs) return {};
    return {false, lhs.to_string() + " vs " + rhs.to_string()};
  }

 private:
  // exp(-z0) int_W B0(x|z) exp(-4x0) x^mo, degree by degree
  const SuperPolynomial& on_monomial(const Monomial& mo) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(mo);
      if (it != memo_.end()) return it->second;
    }
    const SigPtr& s = sig();
    int J = mo.deg;
    std::vector<SuperPolynomial> G;  // c_l int_W (x|z)^l x^mo exp(-4x0)
    BiSuperPolynomial pair = pairing_poly(s, s);
    BiSuperPolynomial pw = BiSuperPolynomial::one(s, s);
    SuperPolynomial z0 = poly_var(s, 0);
    SuperPolynomial result(s);
    int zeros = 0;
    for (int d = 0;; ++d) {
      if (d > cap_) throw Error("SB degree cap exceeded on " + SuperPolynomial::monomial(s, mo).to_string());
      G.push_back(moment(pw, mo) * Scalar(B_.coefficient(d)));
      pw = pw * pair;
      SuperPolynomial deg_d(s), z0j = poly_one(s);
      for (int j = 0; j <= d; ++j, z0j = z0j * z0)
        deg_d += z0j * G[d - j] * Scalar(Rational(Rational(j % 2 ? -1 : 1) / factorial(j)));
      deg_d = reduce(deg_d);
      if (d > J) {
        if (!deg_d.is_zero()) throw Error("SB leaves the degree bound at z-degree " + std::to_string(d));
        if (++zeros == 2) break;
      }
      result += deg_d;
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(mo, result.relabel(zsig_)).first->second;
  }

  // int_W P(x,z) x^mo exp(-4x0), z pulled to the right
  SuperPolynomial moment(const BiSuperPolynomial& P, const Monomial& mo) const {
    const SigPtr& s = sig();
    std::map<Monomial, SuperPolynomial> by_z;
    Monomial prod;
    for (const auto& [bm, a] : P.terms()) {
      int sg = monomial_multiply(bm.a, mo, prod);
      if (sg == 0) continue;
      if (bm.b.parity() && mo.parity()) sg = -sg;
      by_z.try_emplace(bm.b, s).first->second.add_term(prod, sg > 0 ? a : -a);
    }
    SuperPolynomial r(s);
    for (const auto& [zm, xp] : by_z) {
      Scalar v = W_.integrate(ExpPoly(4, xp));
      if (!v.is_zero()) r.add_term(zm, v);
    }
    return r;
  }

  WIntegral W_;
  SigPtr zsig_;
  BKernelSeries B_;
  int cap_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, SuperPolynomial> memo_;
};

}  // namespace osp
