#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osp/linalg.hpp"
#include "osp/operators.hpp"

namespace osp {

using JordanElement = std::vector<Scalar>;

// Spin factor Jordan superalgebra on K e_0 + V with V = C^{m-1|2n}; e_i has the parity of x_i.
class JordanAlgebra {
 public:
  explicit JordanAlgebra(SigPtr sig) : sig_(std::move(sig)) {}
  const Signature& sig() const { return *sig_; }
  const SigPtr& sig_ptr() const { return sig_; }
  int dim() const { return sig_->dim(); }
  int parity(int i) const { return sig_->parity(i); }

  JordanElement basis(int i) const {
    JordanElement e(dim());
    e[i] = 1;
    return e;
  }

  // (l e0 + u)(m e0 + v) = (l m + <u,v>) e0 + l v + m u
  JordanElement multiply(const JordanElement& a, const JordanElement& b) const {
    int N = dim();
    JordanElement r(N);
    r[0] = a[0] * b[0];
    for (int i = 1; i < N; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 1; j < N; ++j)
        if (!b[j].is_zero() && sgn(sig_->beta(i, j)) != 0) r[0] += a[i] * b[j] * Scalar(sig_->beta(i, j));
    }
    for (int i = 1; i < N; ++i) r[i] = a[0] * b[i] + b[0] * a[i];
    return r;
  }

  // Matrix of L_a acting on J (column j = a e_j).
  CMatrix left_mult(const JordanElement& a) const {
    int N = dim();
    CMatrix m(N, N);
    for (int j = 0; j < N; ++j) {
      JordanElement c = multiply(a, basis(j));
      for (int r = 0; r < N; ++r) m(r, j) = c[r];
    }
    return m;
  }

 private:
  SigPtr sig_;
};

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}
inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}
inline CMatrix scaled(const CMatrix& a, const Scalar& s) {
  CMatrix r = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  return r;
}
inline bool is_zero_matrix(const CMatrix& a) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}
inline JordanElement apply_matrix(const CMatrix& a, const JordanElement& v) { return a.apply(v); }

// Supercommutator of homogeneous matrices.
inline CMatrix super_commutator(const CMatrix& a, int pa, const CMatrix& b, int pb) {
  CMatrix ab = a * b;
  CMatrix ba = b * a;
  return (pa && pb) ? ab + ba : ab - ba;
}

struct TkkTriple {
  JordanElement minus;
  CMatrix istr;
  JordanElement plus;
};

using TkkVector = std::vector<Scalar>;
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct LTerm {
  Scalar c;
  int a;
  int b;
};

// TKK(J) = J^- + istr(J) + J^+ with basis {e_l^-, L_{e_l}, [L_{e_i},L_{e_j}], e_l^+}.
class TkkAlgebra {
 public:
  enum class Kind { Minus, L, Inn, Plus };

  explicit TkkAlgebra(SigPtr sig) : J_(std::move(sig)) {
    N_ = J_.dim();
    for (int l = 0; l < N_; ++l) Lmat_.push_back(J_.left_mult(J_.basis(l)));
    build_inn();
    dim_ = 3 * N_ + static_cast<int>(inn_.size());
    for (int a = 0; a < dim_; ++a) {
      parity_.push_back(compute_parity(a));
      labels_.push_back(compute_label(a));
    }
    build_structure_constants();
  }

  const JordanAlgebra& jordan() const { return J_; }
  const Signature& sig() const { return J_.sig(); }
  int N() const { return N_; }
  int dim() const { return dim_; }
  int inn_count() const { return static_cast<int>(inn_.size()); }
  const std::pair<int, int>& inn_pair(int k) const { return inn_[k]; }
  int parity(int a) const { return parity_[a]; }
  const std::string& label(int a) const { return labels_[a]; }

  int minus(int l) const { return l; }
  int L(int l) const { return N_ + l; }
  int inn(int k) const { return 2 * N_ + k; }
  int plus(int l) const { return 2 * N_ + inn_count() + l; }
  int inn_index(int i, int j) const {
    for (int k = 0; k < inn_count(); ++k)
      if (inn_[k] == std::pair{i, j}) return k;
    throw Error("no such Inn basis element");
  }

  Kind kind(int a) const {
    if (a < N_) return Kind::Minus;
    if (a < 2 * N_) return Kind::L;
    if (a < 2 * N_ + inn_count()) return Kind::Inn;
    return Kind::Plus;
  }
  int jordan_index(int a) const {
    switch (kind(a)) {
      case Kind::Minus: return a;
      case Kind::L: return a - N_;
      case Kind::Plus: return a - 2 * N_ - inn_count();
      default: throw Error("not a Jordan-indexed basis element");
    }
  }

  TkkVector basis(int a) const {
    TkkVector v(dim_);
    v[a] = 1;
    return v;
  }
  TkkVector zero() const { return TkkVector(dim_); }

  // Parity of a homogeneous vector (-1 for mixed, 0 for zero).
  int vector_parity(const TkkVector& v) const {
    int p = -2;
    for (int a = 0; a < dim_; ++a) {
      if (v[a].is_zero()) continue;
      if (p == -2)
        p = parity_[a];
      else if (p != parity_[a])
        return -1;
    }
    return p == -2 ? 0 : p;
  }

  const SparseVec& structure(int a, int b) const { return sc_[a * dim_ + b]; }

  TkkVector bracket(const TkkVector& x, const TkkVector& y) const {
    TkkVector r(dim_);
    for (int a = 0; a < dim_; ++a) {
      if (x[a].is_zero()) continue;
      for (int b = 0; b < dim_; ++b) {
        if (y[b].is_zero()) continue;
        const SparseVec& s = sc_[a * dim_ + b];
        if (s.empty()) continue;
        Scalar f = x[a] * y[b];
        for (const auto& [c, v] : s) r[c] += f * v;
      }
    }
    return r;
  }

  // Matrix of L_a + I for the istr part of v.
  CMatrix istr_matrix(const TkkVector& v) const {
    CMatrix m(N_, N_);
    for (int l = 0; l < N_; ++l)
      if (!v[L(l)].is_zero()) m = m + scaled(Lmat_[l], v[L(l)]);
    for (int k = 0; k < inn_count(); ++k)
      if (!v[inn(k)].is_zero()) m = m + scaled(inn_mat_[k], v[inn(k)]);
    return m;
  }

  TkkTriple to_triple(const TkkVector& v) const {
    TkkTriple t{JordanElement(N_), istr_matrix(v), JordanElement(N_)};
    for (int l = 0; l < N_; ++l) {
      t.minus[l] = v[minus(l)];
      t.plus[l] = v[plus(l)];
    }
    return t;
  }

  TkkVector from_triple(const TkkTriple& t) const {
    TkkVector v(dim_);
    for (int l = 0; l < N_; ++l) {
      v[minus(l)] = t.minus[l];
      v[plus(l)] = t.plus[l];
    }
    auto c = istr_coords(t.istr);
    for (int a = L(0); a < plus(0); ++a) v[a] = c[a];
    return v;
  }

  // Coordinates of an istr matrix D = L_a + I; throws if D is not in istr(J).
  TkkVector istr_coords(const CMatrix& D) const {
    TkkVector v(dim_);
    JordanElement a(N_);
    for (int r = 0; r < N_; ++r) a[r] = D(r, 0);
    CMatrix rest = D;
    for (int l = 0; l < N_; ++l) {
      v[L(l)] = a[l];
      if (!a[l].is_zero()) rest = rest - scaled(Lmat_[l], a[l]);
    }
    int I = inn_count();
    std::vector<Scalar> rhs(I);
    for (int k = 0; k < I; ++k) rhs[k] = rest(pivot_pos_[k].first, pivot_pos_[k].second);
    std::vector<Scalar> c = pivot_inv_.apply(rhs);
    CMatrix check = rest;
    for (int k = 0; k < I; ++k) {
      v[inn(k)] = c[k];
      if (!c[k].is_zero()) check = check - scaled(inn_mat_[k], c[k]);
    }
    if (!is_zero_matrix(check)) throw Error("matrix is not in istr(J)");
    return v;
  }

  // Image in the differential realization on P(K^{m+2|2n}) as a combination of L_{ab}.
  std::vector<LTerm> realization_terms(int a) const {
    int m = sig().m();
    auto tl = [&](int i) { return sig().odd(i) ? i + 2 : i; };
    std::vector<LTerm> out;
    switch (kind(a)) {
      case Kind::Minus: {
        int l = jordan_index(a);
        if (l == 0) return {{Scalar(1), m, m + 1}, {Scalar(1), m, 0}};
        return {{Scalar(1), tl(l), m + 1}, {Scalar(1), tl(l), 0}};
      }
      case Kind::Plus: {
        int l = jordan_index(a);
        if (l == 0) return {{Scalar(-1), m, m + 1}, {Scalar(1), m, 0}};
        return {{Scalar(1), tl(l), m + 1}, {Scalar(-1), tl(l), 0}};
      }
      case Kind::L: {
        int l = jordan_index(a);
        if (l == 0) return {{Scalar(1), 0, m + 1}};
        return {{Scalar(1), tl(l), m}};
      }
      case Kind::Inn: {
        auto [i, j] = inn_[a - 2 * N_];
        return {{Scalar(1), tl(i), tl(j)}};
      }
    }
    return out;
  }

  // Signature of K^{m+2|2n} with the metric used by the realization.
  SigPtr realization_signature() const {
    int m = sig().m(), n = sig().n();
    int D = m + 2 + 2 * n;
    std::vector<std::vector<Rational>> b(D, std::vector<Rational>(D, Rational(0)));
    b[0][0] = 1;
    for (int i = 1; i < m; ++i) b[i][i] = sig().beta(i, i);
    b[m][m] = sig().beta(0, 0);
    b[m + 1][m + 1] = -1;
    for (int i = m; i < m + 2 * n; ++i)
      for (int j = m; j < m + 2 * n; ++j) b[i + 2][j + 2] = sig().beta(i, j);
    return Signature::with_metric(m + 2, n, std::move(b));
  }

  SuperPolynomial realize(const TkkVector& v, const SuperPolynomial& p) const {
    SuperPolynomial r(p.sig());
    for (int a = 0; a < dim_; ++a) {
      if (v[a].is_zero()) continue;
      for (const auto& t : realization_terms(a)) r += angular(t.a, t.b, p) * (t.c * v[a]);
    }
    return r;
  }

  // Matrix of the realization acting on degree-one polynomials; column a = image of x_a.
  CMatrix osp_matrix(const TkkVector& v, const SigPtr& rs) const {
    int D = rs->dim();
    CMatrix m(D, D);
    for (int a = 0; a < D; ++a) {
      SuperPolynomial img = realize(v, poly_var(rs, a));
      for (const auto& [mo, c] : img.terms()) {
        int b = -1;
        for (int i = 0; i < rs->m(); ++i)
          if (mo.e[i]) b = i;
        if (mo.odd) b = rs->m() + std::countr_zero(mo.odd);
        m(b, a) = c;
      }
    }
    return m;
  }

  CMatrix ad_matrix(const TkkVector& x) const {
    CMatrix m(dim_, dim_);
    for (int b = 0; b < dim_; ++b) {
      TkkVector r = bracket(x, basis(b));
      for (int c = 0; c < dim_; ++c) m(c, b) = r[c];
    }
    return m;
  }

 private:
  void build_inn() {
    int N = N_;
    std::vector<std::pair<int, int>> cand;
    for (int i = 1; i < N; ++i)
      for (int j = i; j < N; ++j)
        if (i < j || J_.parity(i)) cand.emplace_back(i, j);
    // keep candidates that raise the rank
    std::vector<std::vector<Scalar>> kept;
    for (auto [i, j] : cand) {
      CMatrix c = super_commutator(Lmat_[i], J_.parity(i), Lmat_[j], J_.parity(j));
      CMatrix test(N * N, kept.size() + 1);
      for (size_t k = 0; k < kept.size(); ++k)
        for (int e = 0; e < N * N; ++e) test(e, k) = kept[k][e];
      std::vector<Scalar> flat(N * N);
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) flat[r * N + s] = c(r, s);
      for (int e = 0; e < N * N; ++e) test(e, kept.size()) = flat[e];
      if (test.rank() == kept.size() + 1) {
        kept.push_back(flat);
        inn_.emplace_back(i, j);
        inn_mat_.push_back(c);
      }
    }
    int I = static_cast<int>(inn_.size());
    CMatrix flat(N * N, I);
    for (int k = 0; k < I; ++k)
      for (int e = 0; e < N * N; ++e) flat(e, k) = kept[k][e];
    // pivot rows of the flattened basis give an invertible square block
    auto piv = flat.transpose().rref();
    CMatrix sub(I, I);
    for (int k = 0; k < I; ++k) {
      pivot_pos_.emplace_back(static_cast<int>(piv[k]) / N, static_cast<int>(piv[k]) % N);
      for (int c = 0; c < I; ++c) sub(k, c) = flat(piv[k], c);
    }
    pivot_inv_ = CMatrix(I, I);
    for (int c = 0; c < I; ++c) {
      std::vector<Scalar> e(I);
      e[c] = 1;
      auto x = sub.solve(e);
      if (!x) throw Error("Inn pivot block is singular");
      for (int r = 0; r < I; ++r) pivot_inv_(r, c) = (*x)[r];
    }
  }

  int compute_parity(int a) const {
    switch (kind(a)) {
      case Kind::Inn: {
        auto [i, j] = inn_[a - 2 * N_];
        return (J_.parity(i) + J_.parity(j)) % 2;
      }
      default: return J_.parity(jordan_index(a));
    }
  }

  std::string compute_label(int a) const {
    switch (kind(a)) {
      case Kind::Minus: return "e" + std::to_string(jordan_index(a)) + "-";
      case Kind::Plus: return "e" + std::to_string(jordan_index(a)) + "+";
      case Kind::L: return "L(e" + std::to_string(jordan_index(a)) + ")";
      case Kind::Inn: {
        auto [i, j] = inn_[a - 2 * N_];
        return "[L(e" + std::to_string(i) + "),L(e" + std::to_string(j) + ")]";
      }
    }
    return {};
  }

  CMatrix basis_istr(int a) const {
    if (kind(a) == Kind::L) return Lmat_[jordan_index(a)];
    return inn_mat_[a - 2 * N_];
  }

  // D^natural = -L_{D e0} + (D - L_{D e0})
  CMatrix natural(const CMatrix& D) const {
    CMatrix La(N_, N_);
    for (int l = 0; l < N_; ++l)
      if (!D(l, 0).is_zero()) La = La + scaled(Lmat_[l], D(l, 0));
    return D - scaled(La, Scalar(2));
  }

  TkkVector basic_bracket(int a, int b) const {
    Kind ka = kind(a), kb = kind(b);
    int pa = parity_[a], pb = parity_[b];
    Scalar swap_sign = (pa && pb) ? Scalar(1) : Scalar(-1);
    auto is_istr = [](Kind k) { return k == Kind::L || k == Kind::Inn; };
    TkkVector r(dim_);
    if ((ka == Kind::Minus && kb == Kind::Minus) || (ka == Kind::Plus && kb == Kind::Plus)) return r;
    if (ka == Kind::Plus && kb == Kind::Minus) {
      int x = jordan_index(a), u = jordan_index(b);
      JordanElement xu = J_.multiply(J_.basis(x), J_.basis(u));
      CMatrix D = scaled(J_.left_mult(xu), Scalar(2)) +
                  scaled(super_commutator(Lmat_[x], pa, Lmat_[u], pb), Scalar(2));
      return istr_coords(D);
    }
    if (ka == Kind::Minus && kb == Kind::Plus) {
      TkkVector t = basic_bracket(b, a);
      for (auto& c : t) c *= swap_sign;
      return t;
    }
    if (is_istr(ka) && kb == Kind::Plus) {
      JordanElement y = basis_istr(a).apply(J_.basis(jordan_index(b)));
      for (int l = 0; l < N_; ++l) r[plus(l)] = y[l];
      return r;
    }
    if (is_istr(ka) && kb == Kind::Minus) {
      JordanElement y = natural(basis_istr(a)).apply(J_.basis(jordan_index(b)));
      for (int l = 0; l < N_; ++l) r[minus(l)] = y[l];
      return r;
    }
    if ((ka == Kind::Plus || ka == Kind::Minus) && is_istr(kb)) {
      TkkVector t = basic_bracket(b, a);
      for (auto& c : t) c *= swap_sign;
      return t;
    }
    return istr_coords(super_commutator(basis_istr(a), pa, basis_istr(b), pb));
  }

  void build_structure_constants() {
    sc_.resize(static_cast<size_t>(dim_) * dim_);
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) {
        TkkVector v = basic_bracket(a, b);
        SparseVec s;
        for (int c = 0; c < dim_; ++c)
          if (!v[c].is_zero()) s.emplace_back(c, v[c]);
        sc_[a * dim_ + b] = std::move(s);
      }
  }

  JordanAlgebra J_;
  int N_ = 0;
  int dim_ = 0;
  std::vector<CMatrix> Lmat_;
  std::vector<std::pair<int, int>> inn_;
  std::vector<CMatrix> inn_mat_;
  std::vector<std::pair<int, int>> pivot_pos_;
  CMatrix pivot_inv_;
  std::vector<int> parity_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> sc_;
};

// exp(t A) for nilpotent A.
inline CMatrix nilpotent_exp(const CMatrix& A, const Scalar& t) {
  size_t n = A.rows();
  CMatrix r(n, n), term(n, n);
  for (size_t i = 0; i < n; ++i) {
    r(i, i) = 1;
    term(i, i) = 1;
  }
  for (size_t k = 1; k <= n + 1; ++k) {
    term = scaled(term * A, t / Scalar(static_cast<long>(k)));
    if (is_zero_matrix(term)) return r;
    r = r + term;
  }
  throw Error("matrix is not nilpotent");
}

// c = exp((i/2) ad e0^-) exp(i ad e0^+) and its inverse.
class Cayley {
 public:
  explicit Cayley(const TkkAlgebra& g) : g_(g) {
    CMatrix am = g.ad_matrix(g.basis(g.minus(0)));
    CMatrix ap = g.ad_matrix(g.basis(g.plus(0)));
    Scalar i = Scalar::i();
    fwd_ = nilpotent_exp(am, i / Scalar(2)) * nilpotent_exp(ap, i);
    inv_ = nilpotent_exp(ap, -i) * nilpotent_exp(am, -i / Scalar(2));
  }
  TkkVector apply(const TkkVector& v) const { return fwd_.apply(v); }
  TkkVector inverse(const TkkVector& v) const { return inv_.apply(v); }
  const CMatrix& matrix() const { return fwd_; }

 private:
  const TkkAlgebra& g_;
  CMatrix fwd_, inv_;
};

}  // namespace osp
