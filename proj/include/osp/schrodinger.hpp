#pragma once

#include <functional>
#include <map>

#include "osp/liealg.hpp"
#include "osp/quotient.hpp"

namespace osp {

// poly * exp(-rate x_0)
struct ExpPoly {
  Rational rate;
  SuperPolynomial poly;

  ExpPoly(const Rational& c, SuperPolynomial p) : rate(c), poly(std::move(p)) {}

  const SigPtr& sig() const { return poly.sig(); }
  bool is_zero() const { return poly.is_zero(); }
  ExpPoly conj() const { return {rate, poly.conj()}; }

  ExpPoly& operator+=(const ExpPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) rate = o.rate;
    if (rate != o.rate) throw Error("adding exponentials with different rates");
    poly += o.poly;
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) rate = o.rate;
    if (rate != o.rate) throw Error("adding exponentials with different rates");
    poly -= o.poly;
    return *this;
  }
  ExpPoly& operator*=(const Scalar& s) {
    poly *= s;
    return *this;
  }
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const Scalar& s) { return a *= s; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) { return {a.rate + b.rate, a.poly * b.poly}; }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    if (a.is_zero() && b.is_zero()) return a.sig()->same_space(*b.sig());
    return a.rate == b.rate && a.poly == b.poly;
  }
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  std::string to_string() const {
    std::string p = poly.to_string();
    if (poly.size() > 1) p = "(" + p + ")";
    return p + "*exp(-" + rate.get_str() + "*" + poly.signature().var_name(0) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const ExpPoly& f) { return os << f.to_string(); }

// Representative q exp(-c x_0) of q exp(-c|X|) modulo <R^2>; q in normal form.
using WElement = ExpPoly;

inline WElement make_w(const SuperPolynomial& q, const Rational& c) {
  if (sgn(c) <= 0) throw Error("make_w: rate must be positive");
  return {c, reduce(q)};
}
inline WElement reduce(const ExpPoly& f) { return {f.rate, reduce(f.poly)}; }

struct ExpCtx {
  using value_type = ExpPoly;
  const Signature& sig;
  explicit ExpCtx(const Signature& s) : sig(s) {}
  value_type mul(int i, const value_type& f) const { return {f.rate, mul_var(i, f.poly)}; }
  value_type d_upper(int i, const value_type& f) const {
    SuperPolynomial d = osp::d_upper(i, f.poly);
    if (i == 0) d -= f.poly * Scalar(f.rate);
    return {f.rate, d};
  }
  value_type zero(const value_type& f) const { return {f.rate, SuperPolynomial(f.sig())}; }
};

struct DiffOp {
  enum class Kind { DUpper, DLower, Euler, Laplacian, Angular, Bessel, ModBessel, Mul };
  Kind kind;
  int i = 0;
  int j = 0;
  Scalar lambda = Scalar(0);
};

template <class Ctx>
typename Ctx::value_type apply_diffop(const Ctx& c, const DiffOp& d, const typename Ctx::value_type& f) {
  switch (d.kind) {
    case DiffOp::Kind::DUpper: return c.d_upper(d.i, f);
    case DiffOp::Kind::DLower: return d_lower(c, d.i, f);
    case DiffOp::Kind::Euler: return euler(c, f);
    case DiffOp::Kind::Laplacian: return laplacian(c, f);
    case DiffOp::Kind::Angular: return angular(c, d.i, d.j, f);
    case DiffOp::Kind::Bessel: return bessel(c, d.lambda, d.i, f);
    case DiffOp::Kind::ModBessel: return mbessel(c, d.i, f);
    case DiffOp::Kind::Mul: return c.mul(d.i, f);
  }
  throw Error("unknown operator");
}

inline WElement diffop_on_w(const DiffOp& d, const WElement& f) {
  return reduce(apply_diffop(ExpCtx(f.poly.signature()), d, f));
}

// pi on a basis element of TKK(J); the same table in z gives pi_C.
template <class Ctx>
typename Ctx::value_type pi_basis(const TkkAlgebra& g, int a, const Ctx& c, const typename Ctx::value_type& f) {
  using K = TkkAlgebra::Kind;
  Scalar i = Scalar::i();
  switch (g.kind(a)) {
    case K::Minus: return c.mul(g.jordan_index(a), f) * (Scalar(-2) * i);
    case K::L: {
      int l = g.jordan_index(a);
      if (l == 0) return f * Scalar(Rational(2 - c.sig.M(), 2)) - euler(c, f);
      return angular(c, 0, l, f) * Scalar(-1);
    }
    case K::Inn: {
      auto [p, q] = g.inn_pair(a - g.inn(0));
      return angular(c, p, q, f);
    }
    case K::Plus: return mbessel(c, g.jordan_index(a), f) * (Scalar(Rational(-1, 2)) * i);
  }
  throw Error("unknown basis element");
}

template <class Ctx>
typename Ctx::value_type pi_generic(const TkkAlgebra& g, const TkkVector& X, const Ctx& c,
                                    const typename Ctx::value_type& f) {
  auto r = c.zero(f);
  for (int a = 0; a < g.dim(); ++a)
    if (!X[a].is_zero()) r += pi_basis(g, a, c, f) * X[a];
  return r;
}

inline WElement pi_apply(const TkkAlgebra& g, const TkkVector& X, const WElement& f) {
  if (f.rate != 2) throw Error("pi acts on W only at rate 2");
  if (f.is_zero()) return f;
  return reduce(pi_generic(g, X, ExpCtx(f.poly.signature()), f));
}

// Radial superfunctions: f = f0 + nu with f0 free of odd variables.
struct RadialTerm {
  int order;
  SuperPolynomial coefficient;  // nu^j / j!
};

inline std::vector<RadialTerm> radial_expand(const SuperPolynomial& f) {
  SuperPolynomial f0(f.sig()), nu(f.sig());
  for (const auto& [mo, c] : f.terms()) (mo.odd ? nu : f0).add_term(mo, c);
  if (nu.parity() != 0) throw Error("radial_expand needs an even superfunction");
  std::vector<RadialTerm> out;
  SuperPolynomial pw = poly_one(f.sig());
  int n2 = 2 * f.signature().n();
  for (int j = 0; j <= n2; ++j) {
    if (pw.is_zero()) break;
    out.push_back({j, pw * Scalar(Rational(1) / factorial(j))});
    pw = pw * nu;
  }
  return out;
}

inline SuperPolynomial even_body(const SuperPolynomial& f) {
  SuperPolynomial f0(f.sig());
  for (const auto& [mo, c] : f.terms())
    if (!mo.odd) f0.add_term(mo, c);
  return f0;
}

// Base function with derivatives h^{(j)}(f0) that are polynomials in f0.
struct BaseFunction {
  std::string name;
  std::vector<std::function<SuperPolynomial(const SuperPolynomial&)>> derivative;
};

inline SuperPolynomial radial_apply(const BaseFunction& h, const SuperPolynomial& f) {
  int n2 = 2 * f.signature().n();
  if (static_cast<int>(h.derivative.size()) < n2 + 1)
    throw Error("derivative table of " + h.name + " is shorter than order 2n");
  SuperPolynomial f0 = even_body(f);
  SuperPolynomial r(f.sig());
  for (const auto& t : radial_expand(f)) r += h.derivative[t.order](f0) * t.coefficient;
  return r;
}

// Sum of coefficient * f0^e with rational e; used for power functions of f0.
class RadialSeries {
 public:
  explicit RadialSeries(SigPtr s) : sig_(std::move(s)) {}
  void add(const Rational& e, const SuperPolynomial& c) {
    if (c.is_zero()) return;
    auto it = terms_.try_emplace(e, sig_).first;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  const std::map<Rational, SuperPolynomial>& terms() const { return terms_; }
  friend RadialSeries operator*(const RadialSeries& a, const RadialSeries& b) {
    RadialSeries r(a.sig_);
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  friend bool operator==(const RadialSeries& a, const RadialSeries& b) { return a.terms_ == b.terms_; }

 private:
  SigPtr sig_;
  std::map<Rational, SuperPolynomial> terms_;
};

// f^a = sum_j (a)(a-1)...(a-j+1) f0^{a-j} nu^j / j!
inline RadialSeries radial_power(const Rational& a, const SuperPolynomial& f) {
  RadialSeries r(f.sig());
  Rational fall = 1;
  for (const auto& t : radial_expand(f)) {
    r.add(a - t.order, t.coefficient * Scalar(fall));
    fall *= a - t.order;
  }
  return r;
}

}  // namespace osp
