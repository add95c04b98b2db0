#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace osp {

using Integer = mpz_class;

// mpq_class whose fraction constructors always canonicalize.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  Rational() = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(long p, long q) : mpq_class(p, q) { canonicalize(); }
  Rational(const Integer& p, const Integer& q) : mpq_class(p, q) { canonicalize(); }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gaussian rational a + b i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(const Rational& re) : re_(re) {}
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar frac(long p, long q) {
    return Scalar(Rational(p, q));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational s = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = s;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero scalar");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational d = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational s = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = r;
    im_ = s;
    return *this;
  }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // p/q or p/q+r/s*i
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string im;
    if (im_ == 1)
      im = "i";
    else if (im_ == -1)
      im = "-i";
    else
      im = im_.get_str() + "*i";
    if (sgn(re_) == 0) return im;
    if (im[0] != '-') im = "+" + im;
    return re_.get_str() + im;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Rational factorial(long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// (a)_k
inline Rational pochhammer(const Rational& a, long k) {
  Rational r = 1;
  for (long j = 0; j < k; ++j) r *= a + j;
  return r;
}

inline Rational rpow(const Rational& a, long k) {
  Rational r = 1;
  if (k < 0) {
    for (long j = 0; j < -k; ++j) r /= a;
    return r;
  }
  for (long j = 0; j < k; ++j) r *= a;
  return r;
}

// Element of the ring of Gaussian rationals with half-integer powers of pi.
// Keys are twice the exponent of pi.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(const Scalar& s, int twice_exp = 0) { add(twice_exp, s); }

  static PiScalar pi_power(int twice_exp, const Scalar& s = Scalar(1)) {
    return PiScalar(s, twice_exp);
  }

  void add(int twice_exp, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(twice_exp);
    if (it == terms_.end()) {
      terms_.emplace(twice_exp, s);
      return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Scalar scalar() const {
    if (!is_scalar()) throw Error("PiScalar has nonzero pi-power support: " + to_string());
    return terms_.empty() ? Scalar() : terms_.begin()->second;
  }

  PiScalar& operator+=(const PiScalar& o) {
    for (const auto& [e, s] : o.terms_) add(e, s);
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) {
    for (const auto& [e, s] : o.terms_) add(e, -s);
    return *this;
  }
  PiScalar& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= s;
    return *this;
  }
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const Scalar& s) { return a *= s; }
  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    PiScalar r;
    for (const auto& [e1, s1] : a.terms_)
      for (const auto& [e2, s2] : b.terms_) r.add(e1 + e2, s1 * s2);
    return r;
  }
  friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

  // Division by a single-term value.
  PiScalar divided_by(const PiScalar& d) const {
    if (d.terms_.size() != 1) throw Error("PiScalar division needs a monomial divisor");
    auto [e, s] = *d.terms_.begin();
    PiScalar r;
    for (const auto& [e1, s1] : terms_) r.add(e1 - e, s1 / s);
    return r;
  }

  double to_double() const;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, s] : terms_) {
      if (!out.empty()) out += " + ";
      std::string c = s.is_real() ? s.to_string() : "(" + s.to_string() + ")";
      if (e == 0) {
        out += c;
      } else {
        std::string p = (e % 2 == 0) ? std::to_string(e / 2) : std::to_string(e) + "/2";
        out += c + "*pi^" + p;
      }
    }
    return out;
  }

 private:
  std::map<int, Scalar> terms_;
};

inline double PiScalar::to_double() const {
  double v = 0;
  for (const auto& [e, s] : terms_) {
    double pw = 1;
    double sp = 1.7724538509055160273;  // sqrt(pi)
    for (int k = 0; k < (e < 0 ? -e : e); ++k) pw *= sp;
    if (e < 0) pw = 1 / pw;
    v += s.re().get_d() * pw;
  }
  return v;
}

// Gamma(k/2) for positive integer k, as rational * pi^{twice_exp/2}.
inline PiScalar gamma_half(long k) {
  if (k <= 0) throw Error("gamma_half: argument must be positive");
  if (k % 2 == 0) return PiScalar(Scalar(factorial(k / 2 - 1)));
  // Gamma(j + 1/2) = (2j)! / (4^j j!) sqrt(pi)
  long j = (k - 1) / 2;
  Rational v = factorial(2 * j) / (rpow(Rational(4), j) * factorial(j));
  return PiScalar(Scalar(v), 1);
}

inline std::ostream& operator<<(std::ostream& os, const PiScalar& p) { return os << p.to_string(); }

}  // namespace osp
