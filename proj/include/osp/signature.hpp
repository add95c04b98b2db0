#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "osp/scalar.hpp"

namespace osp {

enum class VarSet { X, Z, W };

inline const char* even_prefix(VarSet v) {
  switch (v) {
    case VarSet::X: return "x";
    case VarSet::Z: return "z";
    default: return "w";
  }
}
inline const char* odd_prefix(VarSet v) {
  switch (v) {
    case VarSet::X: return "t";
    case VarSet::Z: return "u";
    default: return "v";
  }
}

constexpr int kMaxEven = 12;
constexpr int kMaxOdd = 16;

struct SparseEntry {
  int a;
  int b;
  Rational c;
};

class Signature {
 public:
  static std::shared_ptr<const Signature> standard(int m, int n, VarSet vs = VarSet::X) {
    int N = m + 2 * n;
    std::vector<std::vector<Rational>> beta(N, std::vector<Rational>(N, Rational(0)));
    if (m >= 1) beta[0][0] = -1;
    for (int i = 1; i < m; ++i) beta[i][i] = 1;
    for (int a = m; a < m + n; ++a) {
      beta[a][a + n] = -1;
      beta[a + n][a] = 1;
    }
    return std::shared_ptr<const Signature>(new Signature(m, n, vs, std::move(beta), true));
  }

  static std::shared_ptr<const Signature> with_metric(int m, int n, std::vector<std::vector<Rational>> beta,
                                                      VarSet vs = VarSet::X) {
    return std::shared_ptr<const Signature>(new Signature(m, n, vs, std::move(beta), false));
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ + 2 * n_; }
  int M() const { return m_ - 2 * n_; }
  VarSet varset() const { return varset_; }
  bool standardized() const { return standard_; }
  int parity(int i) const { return i >= m_ ? 1 : 0; }
  bool odd(int i) const { return i >= m_; }

  const Rational& beta(int i, int j) const { return beta_[i][j]; }
  const Rational& beta_inv(int i, int j) const { return inv_[i][j]; }

  // d_j = sum_a beta_{ja} d^a
  const std::vector<SparseEntry>& lower_rows(int j) const { return lower_[j]; }
  // Delta = sum c_{ab} d^a d^b
  const std::vector<SparseEntry>& laplacian_terms() const { return lap_; }
  // R^2 = sum c_{ab} x_a x_b
  const std::vector<SparseEntry>& r2_terms() const { return r2_; }

  std::string var_name(int i) const {
    if (i < m_) return std::string(even_prefix(varset_)) + std::to_string(i);
    return std::string(odd_prefix(varset_)) + std::to_string(i - m_ + 1);
  }

  std::shared_ptr<const Signature> relabel(VarSet vs) const {
    return std::shared_ptr<const Signature>(new Signature(m_, n_, vs, beta_, standard_));
  }

  bool same_space(const Signature& o) const {
    return m_ == o.m_ && n_ == o.n_ && varset_ == o.varset_ && beta_ == o.beta_;
  }

 private:
  Signature(int m, int n, VarSet vs, std::vector<std::vector<Rational>> beta, bool standard)
      : m_(m), n_(n), varset_(vs), standard_(standard), beta_(std::move(beta)) {
    if (m < 1 || n < 0) throw Error("invalid signature");
    if (m > kMaxEven || 2 * n > kMaxOdd) throw Error("signature too large");
    int N = dim();
    if (static_cast<int>(beta_.size()) != N) throw Error("metric has wrong size");
    for (const auto& r : beta_)
      if (static_cast<int>(r.size()) != N) throw Error("metric has wrong size");
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (parity(i) != parity(j) && sgn(beta_[i][j]) != 0) throw Error("metric is not even");
        Rational s = (parity(i) && parity(j)) ? Rational(-beta_[j][i]) : beta_[j][i];
        if (beta_[i][j] != s) throw Error("metric is not supersymmetric");
      }
    invert();
    for (int j = 0; j < N; ++j) {
      std::vector<SparseEntry> row;
      for (int a = 0; a < N; ++a)
        if (sgn(beta_[j][a]) != 0) row.push_back({j, a, beta_[j][a]});
      lower_.push_back(std::move(row));
    }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        Rational c = 0;
        Rational r = 0;
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) {
            if (sgn(inv_[i][j]) == 0) continue;
            c += inv_[i][j] * beta_[i][a] * beta_[j][b];
          }
        if (sgn(c) != 0) lap_.push_back({a, b, c});
        r = inv_[a][b];
        if (sgn(r) != 0) r2_.push_back({a, b, r});
      }
  }

  void invert() {
    int N = dim();
    std::vector<std::vector<Rational>> a = beta_;
    inv_.assign(N, std::vector<Rational>(N, Rational(0)));
    for (int i = 0; i < N; ++i) inv_[i][i] = 1;
    for (int col = 0; col < N; ++col) {
      int piv = -1;
      for (int r = col; r < N; ++r)
        if (sgn(a[r][col]) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw Error("metric is degenerate");
      std::swap(a[piv], a[col]);
      std::swap(inv_[piv], inv_[col]);
      Rational p = a[col][col];
      for (int k = 0; k < N; ++k) {
        a[col][k] /= p;
        inv_[col][k] /= p;
      }
      for (int r = 0; r < N; ++r) {
        if (r == col || sgn(a[r][col]) == 0) continue;
        Rational f = a[r][col];
        for (int k = 0; k < N; ++k) {
          a[r][k] -= f * a[col][k];
          inv_[r][k] -= f * inv_[col][k];
        }
      }
    }
  }

  int m_, n_;
  VarSet varset_;
  bool standard_;
  std::vector<std::vector<Rational>> beta_;
  std::vector<std::vector<Rational>> inv_;
  std::vector<std::vector<SparseEntry>> lower_;
  std::vector<SparseEntry> lap_;
  std::vector<SparseEntry> r2_;
};

using SigPtr = std::shared_ptr<const Signature>;

}  // namespace osp
