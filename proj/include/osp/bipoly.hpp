#pragma once

#include "osp/operators.hpp"

namespace osp {

struct BiMonomial {
  Monomial a;  // first alphabet
  Monomial b;  // second alphabet
  friend bool operator<(const BiMonomial& x, const BiMonomial& y) {
    if (x.a.deg + x.b.deg != y.a.deg + y.b.deg) return x.a.deg + x.b.deg < y.a.deg + y.b.deg;
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const BiMonomial& x, const BiMonomial& y) { return x.a == y.a && x.b == y.b; }
};

// Polynomial in two alphabets, terms stored as (first monomial)(second monomial).
class BiSuperPolynomial {
 public:
  using Terms = std::map<BiMonomial, Scalar>;

  BiSuperPolynomial(SigPtr first, SigPtr second) : first_(std::move(first)), second_(std::move(second)) {}

  static BiSuperPolynomial from_first(const SuperPolynomial& p, SigPtr second) {
    BiSuperPolynomial r(p.sig(), std::move(second));
    for (const auto& [mo, c] : p.terms()) r.add_term({mo, Monomial{}}, c);
    return r;
  }
  static BiSuperPolynomial from_second(SigPtr first, const SuperPolynomial& q) {
    BiSuperPolynomial r(std::move(first), q.sig());
    for (const auto& [mo, c] : q.terms()) r.add_term({Monomial{}, mo}, c);
    return r;
  }
  static BiSuperPolynomial one(SigPtr first, SigPtr second) {
    BiSuperPolynomial r(std::move(first), std::move(second));
    r.add_term({}, Scalar(1));
    return r;
  }

  const SigPtr& first_sig() const { return first_; }
  const SigPtr& second_sig() const { return second_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BiMonomial& mo, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mo, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  BiSuperPolynomial& operator+=(const BiSuperPolynomial& o) {
    for (const auto& [mo, c] : o.terms_) add_term(mo, c);
    return *this;
  }
  BiSuperPolynomial& operator-=(const BiSuperPolynomial& o) {
    for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
    return *this;
  }
  BiSuperPolynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mo, c] : terms_) c *= s;
    return *this;
  }
  friend BiSuperPolynomial operator+(BiSuperPolynomial a, const BiSuperPolynomial& b) { return a += b; }
  friend BiSuperPolynomial operator-(BiSuperPolynomial a, const BiSuperPolynomial& b) { return a -= b; }
  friend BiSuperPolynomial operator*(BiSuperPolynomial a, const Scalar& s) { return a *= s; }

  // (a1 b1)(a2 b2) = (-1)^{|b1||a2|} (a1 a2)(b1 b2)
  friend BiSuperPolynomial operator*(const BiSuperPolynomial& x, const BiSuperPolynomial& y) {
    BiSuperPolynomial r(x.first_, x.second_);
    BiMonomial out;
    for (const auto& [m1, c1] : x.terms_)
      for (const auto& [m2, c2] : y.terms_) {
        int s1 = monomial_multiply(m1.a, m2.a, out.a);
        if (s1 == 0) continue;
        int s2 = monomial_multiply(m1.b, m2.b, out.b);
        if (s2 == 0) continue;
        int s = s1 * s2 * ((m1.b.parity() && m2.a.parity()) ? -1 : 1);
        Scalar c = c1 * c2;
        r.add_term(out, s > 0 ? c : -c);
      }
    return r;
  }

  friend bool operator==(const BiSuperPolynomial& x, const BiSuperPolynomial& y) { return x.terms_ == y.terms_; }

  // Keep terms of the given total degree in the second alphabet.
  BiSuperPolynomial second_degree_part(int d) const {
    BiSuperPolynomial r(first_, second_);
    for (const auto& [mo, c] : terms_)
      if (mo.b.deg == d) r.terms_.emplace_hint(r.terms_.end(), mo, c);
    return r;
  }
  BiSuperPolynomial truncate_total(int d) const {
    BiSuperPolynomial r(first_, second_);
    for (const auto& [mo, c] : terms_)
      if (mo.a.deg + mo.b.deg <= d) r.terms_.emplace_hint(r.terms_.end(), mo, c);
    return r;
  }

  // Evaluate the first alphabet at zero.
  SuperPolynomial first_at_zero() const {
    SuperPolynomial r(second_);
    for (const auto& [mo, c] : terms_)
      if (mo.a.deg == 0) r.add_term(mo.b, c);
    return r;
  }
  SuperPolynomial second_at_zero() const {
    SuperPolynomial r(first_);
    for (const auto& [mo, c] : terms_)
      if (mo.b.deg == 0) r.add_term(mo.a, c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    SuperPolynomial pa(first_), pb(second_);
    std::string out;
    for (const auto& [mo, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string ms = pa.monomial_string(mo.a);
      std::string mb = pb.monomial_string(mo.b);
      if (!ms.empty() && !mb.empty()) ms += "*";
      ms += mb;
      std::string cs = (c.is_real() || sgn(c.re()) == 0) ? c.to_string() : "(" + c.to_string() + ")";
      out += ms.empty() ? cs : cs + "*" + ms;
    }
    return out;
  }

 private:
  SigPtr first_, second_;
  Terms terms_;
};

// Operators acting on one of the two alphabets.
struct BiCtx {
  using value_type = BiSuperPolynomial;
  const Signature& sig;
  bool second;
  BiCtx(const Signature& s, bool on_second) : sig(s), second(on_second) {}

  value_type mul(int i, const value_type& f) const {
    BiSuperPolynomial r(f.first_sig(), f.second_sig());
    BiMonomial out;
    for (const auto& [mo, c] : f.terms()) {
      out = mo;
      int s;
      if (second) {
        s = monomial_mul_var(sig, i, mo.b, out.b);
        if (sig.odd(i) && mo.a.parity()) s = -s;
      } else {
        s = monomial_mul_var(sig, i, mo.a, out.a);
      }
      if (s == 0) continue;
      r.add_term(out, s > 0 ? c : -c);
    }
    return r;
  }
  value_type d_upper(int i, const value_type& f) const {
    BiSuperPolynomial r(f.first_sig(), f.second_sig());
    BiMonomial out;
    for (const auto& [mo, c] : f.terms()) {
      out = mo;
      long s;
      if (second) {
        s = monomial_d_upper(sig, i, mo.b, out.b);
        if (sig.odd(i) && mo.a.parity()) s = -s;
      } else {
        s = monomial_d_upper(sig, i, mo.a, out.a);
      }
      if (s == 0) continue;
      r.add_term(out, c * Scalar(s));
    }
    return r;
  }
  value_type zero(const value_type& f) const { return BiSuperPolynomial(f.first_sig(), f.second_sig()); }
};

// (a|b) = 2 a_0 b_0 + 2 sum_{i,j>=1} a_i beta^{ij} b_j
inline BiSuperPolynomial pairing_poly(const SigPtr& first, const SigPtr& second) {
  const Signature& s = *first;
  BiSuperPolynomial r(first, second);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      Rational c = (i == 0 && j == 0) ? Rational(2) : (i == 0 || j == 0) ? Rational(0) : Rational(2 * s.beta_inv(i, j));
      if (sgn(c) == 0) continue;
      BiMonomial mo;
      monomial_mul_var(s, i, Monomial{}, mo.a);
      monomial_mul_var(*second, j, Monomial{}, mo.b);
      r.add_term(mo, Scalar(c));
    }
  return r;
}

}  // namespace osp
