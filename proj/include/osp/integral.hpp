#pragma once

#include <mutex>

#include "osp/schrodinger.hpp"

namespace osp {

// Top Grassmann coefficient via d^{m+2n-1} ... d^m (d^m applied first).
inline SuperPolynomial berezin(const SuperPolynomial& p) {
  const Signature& s = p.signature();
  SuperPolynomial r = p;
  for (int i = s.m(); i < s.dim(); ++i) r = d_upper(i, r);
  return r;
}

// Integral of omega^alpha over S^{m-2}.
inline PiScalar sphere_moment(const std::vector<int>& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a % 2) return PiScalar();
    total += a;
  }
  PiScalar num(Scalar(2));
  for (int a : alpha) num = num * gamma_half(a + 1);
  return num.divided_by(gamma_half(total + static_cast<int>(alpha.size())));
}

// int_0^inf rho^N exp(-c rho) d rho
inline Rational radial_integral(int N, const Rational& c) {
  if (N < 0) throw Error("divergent radial integral: rho^" + std::to_string(N));
  if (sgn(c) <= 0) throw Error("radial integral needs a positive rate");
  return factorial(N) / rpow(c, N + 1);
}

inline PiScalar gamma_closed_form(int m, int n) {
  int M = m - 2 * n;
  if (M < 4) throw Error("gamma is only defined for M >= 4");
  Rational c = rpow(Rational(2), 5 - 2 * M) / factorial(n) * pochhammer(Rational(3 - m, 2), n) * factorial(M - 3);
  PiScalar v = PiScalar::pi_power(m - 1, Scalar(c));
  return v.divided_by(gamma_half(m - 1));
}

inline SuperPolynomial theta_squared(const SigPtr& sig) {
  SuperPolynomial t(sig);
  for (const auto& e : sig->r2_terms())
    if (sig->odd(e.a)) t += mul_var(e.a, poly_var(sig, e.b)) * Scalar(e.c);
  return t;
}

// Replace omega_{m-1}^2 by 1 - sum_{0<i<m-1} omega_i^2 until no longer possible.
inline SuperPolynomial sphere_reduce(const SuperPolynomial& p) {
  const Signature& s = p.signature();
  int last = s.m() - 1;
  if (last < 1) return p;
  SuperPolynomial out(p.sig());
  std::vector<std::pair<Monomial, Scalar>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [mo, c] = work.back();
    work.pop_back();
    if (mo.e[last] < 2) {
      out.add_term(mo, c);
      continue;
    }
    Monomial base = mo;
    base.e[last] -= 2;
    base.deg -= 2;
    work.push_back({base, c});
    for (int i = 1; i < last; ++i) {
      Monomial t = base;
      t.e[i] += 2;
      t.deg += 2;
      work.push_back({t, -c});
    }
  }
  return out;
}

// sum over (p, q) of x0^p s^q * A_{pq}(omega, theta) * exp(-rate x0)
struct RadialIntegrand {
  Rational rate;
  std::map<std::pair<int, int>, SuperPolynomial> terms;
  SigPtr sig;

  void add(int p, int q, const SuperPolynomial& a) {
    if (a.is_zero()) return;
    auto it = terms.try_emplace({p, q}, sig).first;
    it->second += a;
    if (it->second.is_zero()) terms.erase(it);
  }
  RadialIntegrand sphere_reduced() const {
    RadialIntegrand r{rate, {}, sig};
    for (const auto& [pq, a] : terms) r.add(pq.first, pq.second, sphere_reduce(a));
    return r;
  }
  friend bool operator==(const RadialIntegrand& a, const RadialIntegrand& b) {
    return a.rate == b.rate && a.terms == b.terms;
  }
};

// x_i = omega_i s for 0 < i < m
inline RadialIntegrand to_radial(const ExpPoly& f) {
  RadialIntegrand r{f.rate, {}, f.sig()};
  const Signature& s = f.poly.signature();
  for (const auto& [mo, c] : f.poly.terms()) {
    Monomial w = mo;
    int q = 0;
    for (int i = 1; i < s.m(); ++i) q += mo.e[i];
    w.e[0] = 0;
    w.deg = static_cast<uint8_t>(mo.deg - mo.e[0]);
    r.add(mo.e[0], q, SuperPolynomial::monomial(f.sig(), w, c));
  }
  return r;
}

// D = (1/(4 x0)) d/dx0 - (1/(4 s)) d/ds
inline RadialIntegrand radial_D(const RadialIntegrand& f) {
  RadialIntegrand r{f.rate, {}, f.sig};
  for (const auto& [pq, a] : f.terms) {
    auto [p, q] = pq;
    if (p) r.add(p - 2, q, a * Scalar(Rational(p, 4)));
    r.add(p - 1, q, a * Scalar(-f.rate / 4));
    if (q) r.add(p, q - 2, a * Scalar(Rational(-q, 4)));
  }
  return r;
}

inline RadialIntegrand phi_sharp(const RadialIntegrand& f) {
  SuperPolynomial t2 = theta_squared(f.sig);
  RadialIntegrand r{f.rate, {}, f.sig};
  RadialIntegrand g = f;
  SuperPolynomial tp = poly_one(f.sig);
  for (int j = 0; j <= f.sig->n(); ++j) {
    if (j > 0) {
      g = radial_D(g);
      tp = tp * t2 * Scalar(Rational(1, j));
    }
    for (const auto& [pq, a] : g.terms) r.add(pq.first, pq.second, tp * a);
  }
  return r;
}

// Unnormalized integral evaluated term by term from phi_sharp; reference path for the cached engine.
inline PiScalar radial_evaluate(const RadialIntegrand& phi) {
  const Signature& s = *phi.sig;
  int m = s.m(), n = s.n();
  SuperPolynomial t2 = theta_squared(phi.sig);
  // (1+eta)^{m-3} and (1+xi)^{-1} as sums of theta^{2j} s^{-2j} resp. theta^{2j} x0^{-2j}
  std::vector<SuperPolynomial> eta, xi;
  SuperPolynomial tp = poly_one(phi.sig);
  for (int j = 0; j <= n; ++j) {
    Rational a1 = pochhammer(Rational(-(m - 3), 2), j) / factorial(j) / rpow(Rational(2), j);
    Rational a2 = ((j % 2) ? Rational(-1) : Rational(1)) * pochhammer(Rational(1, 2), j) / factorial(j) /
                  rpow(Rational(2), j);
    eta.push_back(tp * Scalar(a1));
    xi.push_back(tp * Scalar(a2));
    tp = tp * t2;
  }
  std::map<int, PiScalar> acc;
  for (const auto& [pq, a] : phi.terms)
    for (int j1 = 0; j1 <= n; ++j1)
      for (int j2 = 0; j2 <= n; ++j2) {
        SuperPolynomial b = berezin(eta[j1] * xi[j2] * a);
        int N = m - 3 + pq.first + pq.second - 2 * j1 - 2 * j2;
        for (const auto& [mo, c] : b.terms()) {
          std::vector<int> alpha(mo.e.begin() + 1, mo.e.begin() + m);
          acc[N] += sphere_moment(alpha) * c;
        }
      }
  PiScalar total;
  for (const auto& [N, v] : acc) {
    if (v.is_zero()) continue;
    total += v * Scalar(radial_integral(N, phi.rate));
  }
  return total;
}

struct IntegralTrace {
  std::string term;
  int N;
  Rational rate;
  std::string sphere;
  std::string berezin;
  std::string contribution;
};

class WIntegral {
 public:
  WIntegral(int m, int n) : sig_(Signature::standard(m, n)) {
    if (sig_->M() < 4) throw Error("the integral over W needs M >= 4");
    SuperPolynomial theta2 = theta_squared(sig_);
    SuperPolynomial pw = poly_one(sig_);
    for (int J = 0; J <= n; ++J) {
      theta_pow_.push_back(pw);
      pw = pw * theta2;
    }
    gamma_ = unnormalized(ExpPoly(4, poly_one(sig_)));
  }

  const SigPtr& sig() const { return sig_; }
  const PiScalar& gamma() const { return gamma_; }

  PiScalar unnormalized(const ExpPoly& f, std::vector<IntegralTrace>* trace = nullptr) const {
    f.poly.check(SuperPolynomial(sig_));
    std::map<int, PiScalar> acc;
    for (const auto& [mo, c] : f.poly.terms()) {
      const Profile& pr = trace ? compute_profile(mo, f.rate, trace, c) : profile(mo, f.rate);
      for (const auto& [N, v] : pr) acc[N] += v * c;
    }
    PiScalar total;
    for (const auto& [N, v] : acc) {
      if (v.is_zero()) continue;
      if (N < 0) throw Error("divergent term rho^" + std::to_string(N) + " in " + f.to_string());
      total += v * Scalar(radial_integral(N, f.rate));
    }
    return total;
  }

  PiScalar normalized(const ExpPoly& f) const { return unnormalized(f).divided_by(gamma_); }

  Scalar integrate(const ExpPoly& f) const {
    PiScalar v = normalized(f);
    if (!v.is_scalar()) throw Error("normalized integral kept a power of pi: " + v.to_string());
    return v.scalar();
  }

  // <f, g> = int f conj(g)
  Scalar form(const ExpPoly& f, const ExpPoly& g) const { return integrate(f * g.conj()); }

 private:
  using Profile = std::map<int, PiScalar>;
  using Laurent = std::map<std::pair<int, int>, Rational>;  // x0^p s^q

  const Profile& profile(const Monomial& mo, const Rational& rate) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(mo, rate);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, compute_profile(mo, rate, nullptr, Scalar(1))).first->second;
  }

  // D = (1/(4 x0)) d/dx0 - (1/(4 s)) d/ds acting on x0^p s^q exp(-c x0)
  static Laurent apply_D(const Laurent& in, const Rational& c) {
    Laurent out;
    auto add = [&](int p, int q, const Rational& v) {
      if (sgn(v) == 0) return;
      Rational& r = out[{p, q}];
      r += v;
      if (sgn(r) == 0) out.erase({p, q});
    };
    for (const auto& [pq, v] : in) {
      auto [p, q] = pq;
      add(p - 2, q, v * Rational(p, 4));
      add(p - 1, q, -v * c / 4);
      add(p, q - 2, -v * Rational(q, 4));
    }
    return out;
  }

  Profile compute_profile(const Monomial& mo, const Rational& c, std::vector<IntegralTrace>* trace,
                          const Scalar& coef) const {
    const Signature& s = *sig_;
    int m = s.m(), n = s.n();
    std::vector<int> alpha;
    int b = 0;
    for (int i = 1; i < m; ++i) {
      alpha.push_back(mo.e[i]);
      b += mo.e[i];
    }
    Profile out;
    PiScalar sphere = sphere_moment(alpha);
    if (sphere.is_zero()) return out;
    Monomial odd_part;
    odd_part.odd = mo.odd;
    odd_part.deg = static_cast<uint8_t>(mo.odd_degree());
    SuperPolynomial thetaA = SuperPolynomial::monomial(sig_, odd_part);
    std::vector<Scalar> ber(n + 1);
    for (int J = 0; J <= n; ++J) ber[J] = berezin(theta_pow_[J] * thetaA).constant_term();

    Laurent L{{{mo.e[0], b}, Rational(1)}};
    for (int j = 0; j <= n; ++j) {
      if (j > 0) L = apply_D(L, c);
      Rational fj = Rational(1) / factorial(j);
      for (int j1 = 0; j + j1 <= n; ++j1) {
        Rational a1 = pochhammer(Rational(-(m - 3), 2), j1) / factorial(j1) / rpow(Rational(2), j1);
        for (int j2 = 0; j + j1 + j2 <= n; ++j2) {
          int J = j + j1 + j2;
          if (ber[J].is_zero()) continue;
          Rational a2 = ((j2 % 2) ? Rational(-1) : Rational(1)) * pochhammer(Rational(1, 2), j2) / factorial(j2) /
                        rpow(Rational(2), j2);
          for (const auto& [pq, v] : L) {
            int N = m - 3 + pq.first - 2 * j2 + pq.second - 2 * j1;
            PiScalar contrib = sphere * (ber[J] * Scalar(v * fj * a1 * a2));
            out[N] += contrib;
            if (trace)
              trace->push_back({SuperPolynomial::monomial(sig_, mo, coef).to_string(), N, c, sphere.to_string(),
                                ber[J].to_string(), (contrib * coef).to_string()});
          }
        }
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

  SigPtr sig_;
  std::vector<SuperPolynomial> theta_pow_;
  PiScalar gamma_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Monomial, Rational>, Profile> cache_;
};

}  // namespace osp
