#pragma once

#include <optional>

#include "osp/operators.hpp"

namespace osp {

namespace detail {

// Split p by the exponent of x_0: e -> (terms with x_0 removed).
inline std::map<int, SuperPolynomial> split_x0(const SuperPolynomial& p) {
  std::map<int, SuperPolynomial> out;
  for (const auto& [mo, c] : p.terms()) {
    Monomial r = mo;
    int e = r.e[0];
    r.e[0] = 0;
    r.deg -= e;
    out.try_emplace(e, p.sig()).first->second.add_term(r, c);
  }
  return out;
}

inline SuperPolynomial x0_power(const SigPtr& s, int e) {
  Monomial mo;
  mo.e[0] = static_cast<uint8_t>(e);
  mo.deg = static_cast<uint8_t>(e);
  return SuperPolynomial::monomial(s, mo);
}

}  // namespace detail

// Normal form modulo <R^2>: x_0^2 -> r^2 until the x_0-degree is at most 1.
inline SuperPolynomial reduce(const SuperPolynomial& p) {
  bool done = true;
  for (const auto& [mo, c] : p.terms())
    if (mo.e[0] >= 2) {
      done = false;
      break;
    }
  if (done) return p;
  const SigPtr& s = p.sig();
  SuperPolynomial r2 = small_r2_poly(s);
  std::vector<SuperPolynomial> pw{poly_one(s)};
  SuperPolynomial out(s);
  for (auto& [e, rest] : detail::split_x0(p)) {
    while (static_cast<int>(pw.size()) <= e / 2) pw.push_back(pw.back() * r2);
    SuperPolynomial t = pw[e / 2] * rest;
    if (e % 2) t = mul_var(0, t);
    out += t;
  }
  return out;
}

struct Division {
  SuperPolynomial normal_form;
  SuperPolynomial quotient;  // p = normal_form + R^2 * quotient
};

inline Division divide_r2(const SuperPolynomial& p) {
  const SigPtr& s = p.sig();
  SuperPolynomial r2 = small_r2_poly(s);
  SuperPolynomial nf(s), q(s);
  for (auto& [e, rest] : detail::split_x0(p)) {
    int h = e / 2;
    SuperPolynomial base = e % 2 ? mul_var(0, rest) : rest;
    SuperPolynomial rp = poly_one(s);
    for (int j = 0; j < h; ++j) rp = rp * r2;
    nf += rp * base;
    // x0^{2h} = r^{2h} - R^2 * sum_t x0^{2t} r^{2(h-1-t)}
    SuperPolynomial sum(s);
    for (int t = 0; t < h; ++t) {
      SuperPolynomial term = detail::x0_power(s, 2 * t);
      for (int j = 0; j < h - 1 - t; ++j) term = term * r2;
      sum += term;
    }
    q -= sum * base;
  }
  return {nf, q};
}

inline bool ideal_member(const SuperPolynomial& p) {
  if (!reduce(p).is_zero()) return false;
  Division d = divide_r2(p);
  if (r2_mul(d.quotient) != p) throw Error("ideal_member: inconsistent division");
  return true;
}

class QuotientPolynomial {
 public:
  explicit QuotientPolynomial(const SuperPolynomial& p) : p_(reduce(p)) {}
  const SuperPolynomial& poly() const { return p_; }
  const SigPtr& sig() const { return p_.sig(); }
  std::string to_string() const { return p_.to_string(); }
  friend bool operator==(const QuotientPolynomial& a, const QuotientPolynomial& b) { return a.p_ == b.p_; }

 private:
  SuperPolynomial p_;
};

using FockElement = QuotientPolynomial;

// Normal-form monomials of degree k: x_0-exponent at most 1.
inline std::vector<Monomial> normal_form_monomials(const Signature& s, int k) {
  std::vector<Monomial> out;
  for (const auto& mo : monomials_of_degree(s, k))
    if (mo.e[0] <= 1) out.push_back(mo);
  return out;
}

struct GradedDim {
  Integer count;
  Integer closed_form;
  bool harmonic_identification_proven;
};

inline GradedDim graded_dim_F(const Signature& s, int k) {
  Integer count = static_cast<long>(normal_form_monomials(s, k).size());
  Integer cf = dim_poly(s.m() - 1, s.n(), k) + dim_poly(s.m() - 1, s.n(), k - 1);
  int M = s.M();
  bool bad = (M - 1) <= 0 && (M - 1) % 2 == 0;
  return {count, cf, !bad};
}

}  // namespace osp
