#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "osp/scalar.hpp"

namespace osp::specfun {

struct SeriesValue {
  double value = 0;
  double bound = 0;  // magnitude of the last retained term, or step-halving difference
  int terms = 0;
  bool converged = true;
};

// 1/Gamma(x), zero at the poles
inline double rgamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0;
  if (x > 0) return std::exp(-std::lgamma(x));
  return std::tgamma(1 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
}

// I~_a(t) = sum_k t^{2k} / (4^k k! Gamma(k+a+1))
inline SeriesValue itilde(double a, double t, int order = 40) {
  SeriesValue r;
  double w = t * t / 4;
  double pw = 1;  // w^k / k!
  double last = 0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) pw *= w / k;
    last = pw * rgamma(k + a + 1);
    r.value += last;
  }
  r.terms = order + 1;
  r.bound = std::abs(last);
  r.converged = r.bound <= 1e-15 * std::max(1.0, std::abs(r.value));
  return r;
}

namespace detail {

// pi/(2 sin(pi a)) ((t/2)^{-2a} I~_{-a}(t) - I~_a(t)), a not an integer
inline SeriesValue ktilde_series_raw(double a, double t, int order) {
  SeriesValue m = itilde(-a, t, order), p = itilde(a, t, order);
  double c = std::numbers::pi / (2 * std::sin(std::numbers::pi * a));
  double s = std::pow(t / 2, -2 * a);
  return {c * (s * m.value - p.value), std::abs(c) * (s * m.bound + p.bound), m.terms, m.converged && p.converged};
}

// e^t int_0^inf exp(-t cosh u) cosh(a u) du by the trapezoid rule
inline double scaled_k_integral(double a, double t, double h) {
  double sum = 0.5;
  for (int k = 1;; ++k) {
    double u = k * h;
    double v = std::exp(-t * (std::cosh(u) - 1)) * std::cosh(a * u);
    sum += v;
    if (v < 1e-18 * sum && t * (std::cosh(u) - 1) > std::abs(a) * u) break;
  }
  return sum * h;
}

}  // namespace detail

inline constexpr double kIntegralThreshold = 2.0;
inline constexpr double kIntegerEps = 1e-5;

// K~_a(t) = (t/2)^{-a} K_a(t)
inline SeriesValue ktilde(double a, double t, int order = 40) {
  if (!(t > 0)) throw Error("ktilde needs t > 0");
  if (t > kIntegralThreshold) {
    double k1 = detail::scaled_k_integral(a, t, 0.05);
    double k2 = detail::scaled_k_integral(a, t, 0.025);
    double f = std::pow(t / 2, -a) * std::exp(-t);
    return {f * k2, f * std::abs(k2 - k1), 0, true};
  }
  if (std::abs(a - std::round(a)) < kIntegerEps) {
    double n = std::round(a);
    SeriesValue lo = detail::ktilde_series_raw(n - kIntegerEps, t, order);
    SeriesValue hi = detail::ktilde_series_raw(n + kIntegerEps, t, order);
    return {(lo.value + hi.value) / 2, std::max(lo.bound, hi.bound) + std::abs(hi.value - lo.value) * kIntegerEps,
            lo.terms, lo.converged && hi.converged};
  }
  return detail::ktilde_series_raw(a, t, order);
}

// Truncated power series in s.
using Series = std::vector<double>;

inline Series series_mul(const Series& a, const Series& b, int J) {
  Series r(J + 1, 0.0);
  for (int i = 0; i <= J && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= J && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// (1-s)^{-c}
inline Series binomial_series(double c, int J) {
  Series r(J + 1);
  r[0] = 1;
  for (int k = 1; k <= J; ++k) r[k] = r[k - 1] * (c + k - 1) / k;
  return r;
}

// sum_n coef[n] w^n with w a series without constant term
inline Series compose(const std::vector<double>& coef, const Series& w, int J) {
  Series r(J + 1, 0.0), pw(J + 1, 0.0);
  pw[0] = 1;
  for (size_t n = 0; n < coef.size(); ++n) {
    for (int i = 0; i <= J; ++i) r[i] += coef[n] * pw[i];
    pw = series_mul(pw, w, J);
  }
  return r;
}

// Taylor coefficients in s of G(s,t) = (1-s)^{-(mu+nu+2)/2} I~_{mu/2}(st/(1-s)) K~_{nu/2}(t/(1-s))
inline Series laguerre_series(double mu, double nu, double t, int J) {
  if (!(t > 0)) throw Error("laguerre_lambda needs t > 0");
  double w0 = t * t / 4;
  Series inv2 = binomial_series(2, J);  // (1-s)^{-2}
  // I~ in w = w0 s^2 (1-s)^{-2}
  Series wi(J + 1, 0.0);
  for (int i = 2; i <= J; ++i) wi[i] = w0 * inv2[i - 2];
  std::vector<double> ic(J / 2 + 1);
  double f = 1;
  for (size_t k = 0; k < ic.size(); ++k) {
    if (k > 0) f /= static_cast<double>(k);
    ic[k] = f * rgamma(k + mu / 2 + 1);
  }
  // K~ about w0: d/dw K~_b = -K~_{b+1}, shift w0((1-s)^{-2} - 1)
  Series wk = inv2;
  wk[0] = 0;
  for (auto& v : wk) v *= w0;
  std::vector<double> kc(J + 1);
  double b = nu / 2;
  double km = ktilde(b, t).value, kn = ktilde(b + 1, t).value;
  kc[0] = km;
  if (J >= 1) kc[1] = -kn;
  double fact = 1;
  for (int n = 2; n <= J; ++n) {
    // K~_{v+1} = (4/t^2)(K~_{v-1} + v K~_v) with v = b+n-1
    double v = b + n - 1;
    double next = (km + v * kn) / w0;
    km = kn;
    kn = next;
    fact *= n;
    kc[n] = ((n % 2) ? -1 : 1) * kn / fact;
  }
  Series r = series_mul(binomial_series((mu + nu + 2) / 2, J), compose(ic, wi, J), J);
  return series_mul(r, compose(kc, wk, J), J);
}

inline double laguerre_lambda(int j, double mu, double nu, double t, int order = 40) {
  if (j < 0 || j > order) throw Error("laguerre_lambda: j beyond truncation");
  return laguerre_series(mu, nu, t, order)[j];
}

inline double g2(double mu, double nu, double s, double t) {
  return std::pow(1 - s, -(mu + nu + 2) / 2) * itilde(mu / 2, s * t / (1 - s)).value *
         ktilde(nu / 2, t / (1 - s)).value;
}

}  // namespace osp::specfun
