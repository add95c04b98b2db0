#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "osp/scalar.hpp"
#include "osp/signature.hpp"

namespace osp {

struct Monomial {
  std::array<uint8_t, kMaxEven> e{};
  uint32_t odd = 0;  // bit k <-> variable m + k
  uint8_t deg = 0;

  bool has_odd(int k) const { return (odd >> k) & 1u; }
  int odd_degree() const { return std::popcount(odd); }
  int parity() const { return odd_degree() & 1; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.odd == b.odd && a.e == b.e;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.e != b.e) return a.e > b.e;
    return a.odd < b.odd;
  }
};

// Sign of theta_A * theta_B relative to the sorted product; 0 if they overlap.
inline int odd_product_sign(uint32_t A, uint32_t B) {
  if (A & B) return 0;
  int count = 0;
  uint32_t b = B;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    count += std::popcount(A >> (j + 1));
  }
  return (count & 1) ? -1 : 1;
}

inline int monomial_multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  int s = odd_product_sign(a.odd, b.odd);
  if (s == 0) return 0;
  for (int i = 0; i < kMaxEven; ++i) out.e[i] = a.e[i] + b.e[i];
  out.odd = a.odd | b.odd;
  out.deg = a.deg + b.deg;
  return s;
}

class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit SuperPolynomial(SigPtr sig) : sig_(std::move(sig)) {}

  static SuperPolynomial constant(SigPtr sig, const Scalar& c) {
    SuperPolynomial p(std::move(sig));
    p.add_term(Monomial{}, c);
    return p;
  }
  static SuperPolynomial variable(SigPtr sig, int i, const Scalar& c = Scalar(1)) {
    const Signature& s = *sig;
    if (i < 0 || i >= s.dim()) throw Error("variable index out of range");
    Monomial mo;
    if (s.odd(i))
      mo.odd = 1u << (i - s.m());
    else
      mo.e[i] = 1;
    mo.deg = 1;
    SuperPolynomial p(std::move(sig));
    p.add_term(mo, c);
    return p;
  }
  static SuperPolynomial monomial(SigPtr sig, const Monomial& mo, const Scalar& c = Scalar(1)) {
    SuperPolynomial p(std::move(sig));
    p.add_term(mo, c);
    return p;
  }

  const SigPtr& sig() const { return sig_; }
  const Signature& signature() const { return *sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial& mo, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mo, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Scalar coefficient(const Monomial& mo) const {
    auto it = terms_.find(mo);
    return it == terms_.end() ? Scalar() : it->second;
  }
  Scalar constant_term() const { return coefficient(Monomial{}); }

  int degree() const {
    int d = -1;
    for (const auto& [mo, c] : terms_) d = std::max<int>(d, mo.deg);
    return d;
  }
  int min_degree() const {
    int d = -1;
    for (const auto& [mo, c] : terms_)
      if (d < 0 || mo.deg < d) d = mo.deg;
    return d;
  }
  // 0 or 1 for homogeneous parity (zero counts as even), -1 if mixed.
  int parity() const {
    int p = -2;
    for (const auto& [mo, c] : terms_) {
      if (p == -2)
        p = mo.parity();
      else if (p != mo.parity())
        return -1;
    }
    return p == -2 ? 0 : p;
  }

  SuperPolynomial homogeneous_part(int k) const {
    SuperPolynomial r(sig_);
    for (const auto& [mo, c] : terms_)
      if (mo.deg == k) r.terms_.emplace_hint(r.terms_.end(), mo, c);
    return r;
  }

  SuperPolynomial conj() const {
    SuperPolynomial r(sig_);
    for (const auto& [mo, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mo, c.conj());
    return r;
  }

  // Same coefficients over another alphabet with identical (m, n, beta).
  SuperPolynomial relabel(SigPtr other) const {
    if (other->m() != sig_->m() || other->n() != sig_->n()) throw Error("relabel: shape mismatch");
    SuperPolynomial r(std::move(other));
    r.terms_ = terms_;
    return r;
  }

  SuperPolynomial& operator+=(const SuperPolynomial& o) {
    check(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, c);
    return *this;
  }
  SuperPolynomial& operator-=(const SuperPolynomial& o) {
    check(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
    return *this;
  }
  SuperPolynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mo, c] : terms_) c *= s;
    return *this;
  }
  SuperPolynomial operator-() const {
    SuperPolynomial r = *this;
    r *= Scalar(-1);
    return r;
  }
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const Scalar& s) { return a *= s; }
  friend SuperPolynomial operator*(const Scalar& s, SuperPolynomial a) { return a *= s; }

  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    a.check(b);
    SuperPolynomial r(a.sig_);
    Monomial mo;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int s = monomial_multiply(ma, mb, mo);
        if (s == 0) continue;
        Scalar c = ca * cb;
        if (s < 0) c = -c;
        r.add_term(mo, c);
      }
    return r;
  }

  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return a.sig_->same_space(*b.sig_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

  std::string monomial_string(const Monomial& mo) const {
    const Signature& s = *sig_;
    std::string out;
    for (int i = 0; i < s.m(); ++i) {
      if (mo.e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += s.var_name(i);
      if (mo.e[i] > 1) out += "^" + std::to_string(mo.e[i]);
    }
    for (int k = 0; k < 2 * s.n(); ++k) {
      if (!mo.has_odd(k)) continue;
      if (!out.empty()) out += "*";
      out += s.var_name(s.m() + k);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mo, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string ms = monomial_string(mo);
      std::string cs = (c.is_real() || sgn(c.re()) == 0) ? c.to_string() : "(" + c.to_string() + ")";
      if (ms.empty())
        out += cs;
      else if (c == Scalar(1))
        out += ms;
      else if (c == Scalar(-1))
        out += "-" + ms;
      else
        out += cs + "*" + ms;
    }
    return out;
  }

  void check(const SuperPolynomial& o) const {
    if (sig_ != o.sig_ && !sig_->same_space(*o.sig_)) throw Error("signature mismatch");
  }

 private:
  SigPtr sig_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p) { return os << p.to_string(); }

inline SuperPolynomial poly_one(const SigPtr& s) { return SuperPolynomial::constant(s, Scalar(1)); }
inline SuperPolynomial poly_var(const SigPtr& s, int i) { return SuperPolynomial::variable(s, i); }

// Left multiplication of a monomial by x_i; returns sign (0 if the odd square vanishes).
inline int monomial_mul_var(const Signature& s, int i, const Monomial& mo, Monomial& out) {
  out = mo;
  if (!s.odd(i)) {
    out.e[i] += 1;
    out.deg += 1;
    return 1;
  }
  int k = i - s.m();
  if (mo.has_odd(k)) return 0;
  out.odd |= 1u << k;
  out.deg += 1;
  return (std::popcount(mo.odd & ((1u << k) - 1)) & 1) ? -1 : 1;
}

// Left derivative d^i of a monomial; returns factor (0 if it vanishes).
inline long monomial_d_upper(const Signature& s, int i, const Monomial& mo, Monomial& out) {
  out = mo;
  if (!s.odd(i)) {
    if (mo.e[i] == 0) return 0;
    long f = mo.e[i];
    out.e[i] -= 1;
    out.deg -= 1;
    return f;
  }
  int k = i - s.m();
  if (!mo.has_odd(k)) return 0;
  out.odd &= ~(1u << k);
  out.deg -= 1;
  return (std::popcount(mo.odd & ((1u << k) - 1)) & 1) ? -1 : 1;
}

inline SuperPolynomial mul_var(int i, const SuperPolynomial& p) {
  const Signature& s = p.signature();
  if (i < 0 || i >= s.dim()) throw Error("variable index out of range");
  SuperPolynomial r(p.sig());
  Monomial out;
  for (const auto& [mo, c] : p.terms()) {
    int sg = monomial_mul_var(s, i, mo, out);
    if (sg == 0) continue;
    r.add_term(out, sg > 0 ? c : -c);
  }
  return r;
}

inline SuperPolynomial d_upper(int i, const SuperPolynomial& p) {
  const Signature& s = p.signature();
  if (i < 0 || i >= s.dim()) throw Error("derivative index out of range");
  SuperPolynomial r(p.sig());
  Monomial out;
  for (const auto& [mo, c] : p.terms()) {
    long f = monomial_d_upper(s, i, mo, out);
    if (f == 0) continue;
    r.add_term(out, c * Scalar(f));
  }
  return r;
}

// Evaluate all variables at zero.
inline Scalar at_zero(const SuperPolynomial& p) { return p.constant_term(); }

// All monomials of total degree k.
inline std::vector<Monomial> monomials_of_degree(const Signature& s, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  int m = s.m();
  int no = 2 * s.n();
  std::vector<uint32_t> masks_by_size[kMaxOdd + 1];
  for (uint32_t mask = 0; mask < (1u << no); ++mask) masks_by_size[std::popcount(mask)].push_back(mask);
  Monomial cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      cur.e[i] = static_cast<uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur.e[i] = static_cast<uint8_t>(a);
      rec(i + 1, left - a);
    }
    cur.e[i] = 0;
  };
  for (int od = 0; od <= std::min(k, no); ++od) {
    for (uint32_t mask : masks_by_size[od]) {
      cur = Monomial{};
      cur.odd = mask;
      cur.deg = static_cast<uint8_t>(k);
      if (m == 0) {
        if (k == od) out.push_back(cur);
        continue;
      }
      rec(0, k - od);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> monomials_up_to(const Signature& s, int k) {
  std::vector<Monomial> out;
  for (int d = 0; d <= k; ++d) {
    auto v = monomials_of_degree(s, d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// dim P_k(C^{m|2n})
inline Integer dim_poly(int m, int n, int k) {
  if (k < 0) return 0;
  Integer d = 0;
  for (int i = 0; i <= std::min(k, 2 * n); ++i) {
    if (m == 0) {
      if (k == i) d += binomial(2 * n, i);
      continue;
    }
    d += binomial(2 * n, i) * binomial(k - i + m - 1, m - 1);
  }
  return d;
}

}  // namespace osp
