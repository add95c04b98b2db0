#pragma once

#include <map>
#include <utility>
#include <vector>

#include "osp/linalg.hpp"
#include "osp/quotient.hpp"

namespace osp {

class MonomialBasis {
 public:
  MonomialBasis() = default;
  explicit MonomialBasis(std::vector<Monomial> list) : list_(std::move(list)) {
    for (size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
  }
  size_t size() const { return list_.size(); }
  const Monomial& operator[](size_t i) const { return list_[i]; }
  const std::vector<Monomial>& list() const { return list_; }
  std::optional<size_t> find(const Monomial& mo) const {
    auto it = index_.find(mo);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Scalar> coords(const SuperPolynomial& p) const {
    std::vector<Scalar> v(list_.size());
    for (const auto& [mo, c] : p.terms()) {
      auto i = find(mo);
      if (!i) throw Error("polynomial has a term outside the basis: " + p.monomial_string(mo));
      v[*i] = c;
    }
    return v;
  }
  template <class T>
  SuperPolynomial poly(const SigPtr& s, const std::vector<T>& v) const {
    SuperPolynomial p(s);
    for (size_t i = 0; i < v.size(); ++i)
      if (!is_zero_entry(v[i])) p.add_term(list_[i], Scalar(v[i]));
    return p;
  }

 private:
  std::vector<Monomial> list_;
  std::map<Monomial, size_t> index_;
};

template <class Op>
QMatrix real_operator_matrix(const SigPtr& s, const MonomialBasis& dom, const MonomialBasis& cod, Op&& op) {
  QMatrix a(cod.size(), dom.size());
  for (size_t c = 0; c < dom.size(); ++c) {
    SuperPolynomial img = op(SuperPolynomial::monomial(s, dom[c]));
    for (const auto& [mo, v] : img.terms()) {
      auto r = cod.find(mo);
      if (!r) throw Error("operator image leaves the codomain");
      if (!v.is_real()) throw Error("operator is not real");
      a(*r, c) = v.re();
    }
  }
  return a;
}

struct HarmonicBasis {
  int k;
  std::vector<SuperPolynomial> basis;
};

inline HarmonicBasis nullspace_basis(const SigPtr& s, int k, const QMatrix& a, const MonomialBasis& dom) {
  HarmonicBasis h{k, {}};
  for (const auto& v : a.nullspace()) h.basis.push_back(dom.poly(s, v));
  return h;
}

inline HarmonicBasis harmonic_basis(const SigPtr& s, int k) {
  MonomialBasis dom(monomials_of_degree(*s, k));
  MonomialBasis cod(monomials_of_degree(*s, k - 2));
  if (k < 2) {
    HarmonicBasis h{k, {}};
    for (const auto& mo : dom.list()) h.basis.push_back(SuperPolynomial::monomial(s, mo));
    return h;
  }
  QMatrix a = real_operator_matrix(s, dom, cod, [](const SuperPolynomial& p) { return laplacian(p); });
  return nullspace_basis(s, k, a, dom);
}

inline size_t harmonic_nullity(const SigPtr& s, int k) {
  MonomialBasis dom(monomials_of_degree(*s, k));
  if (k < 2) return dom.size();
  MonomialBasis cod(monomials_of_degree(*s, k - 2));
  QMatrix a = real_operator_matrix(s, dom, cod, [](const SuperPolynomial& p) { return laplacian(p); });
  return dom.size() - a.rank();
}

// ker(Delta R^2 Delta) on P_k
inline HarmonicBasis generalized_basis(const SigPtr& s, int k) {
  MonomialBasis dom(monomials_of_degree(*s, k));
  if (k < 2) {
    HarmonicBasis h{k, {}};
    for (const auto& mo : dom.list()) h.basis.push_back(SuperPolynomial::monomial(s, mo));
    return h;
  }
  MonomialBasis cod(monomials_of_degree(*s, k - 2));
  QMatrix a = real_operator_matrix(s, dom, cod,
                                   [](const SuperPolynomial& p) { return laplacian(r2_mul(laplacian(p))); });
  return nullspace_basis(s, k, a, dom);
}

inline bool in_minus_2N(int v) { return v <= 0 && v % 2 == 0; }

// dim P_k - dim P_{k-2}, cross-checked against dim P_k(m-1|2n) + dim P_{k-1}(m-1|2n).
inline Integer dim_harmonic(int m, int n, int k) {
  if (m < 2) throw Error("dim_harmonic needs m >= 2");
  Integer a = dim_poly(m, n, k) - dim_poly(m, n, k - 2);
  Integer b = dim_poly(m - 1, n, k) + dim_poly(m - 1, n, k - 1);
  if (a != b) throw Error("dim_harmonic: closed forms disagree");
  return a;
}

struct FischerComponent {
  int j;
  SuperPolynomial h;
};

// p = sum_j R^{2j} h_{k-2j}
inline std::vector<FischerComponent> fischer_decompose(const SuperPolynomial& p) {
  const SigPtr& s = p.sig();
  if (in_minus_2N(s->M())) throw Error("Fischer decomposition needs M not in -2N; use generalized_basis");
  int k = p.degree();
  if (k < 0) return {};
  if (p.min_degree() != k) throw Error("fischer_decompose needs a homogeneous polynomial");
  MonomialBasis dom(monomials_of_degree(*s, k));
  std::vector<std::pair<int, SuperPolynomial>> cols;
  std::vector<HarmonicBasis> hb;
  for (int j = 0; 2 * j <= k; ++j) {
    hb.push_back(harmonic_basis(s, k - 2 * j));
    for (const auto& b : hb.back().basis) {
      SuperPolynomial v = b;
      for (int t = 0; t < j; ++t) v = r2_mul(v);
      cols.emplace_back(j, v);
    }
  }
  CMatrix a(dom.size(), cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    auto v = dom.coords(cols[c].second);
    for (size_t r = 0; r < v.size(); ++r) a(r, c) = v[r];
  }
  auto x = a.solve(dom.coords(p));
  if (!x) throw Error("Fischer decomposition has no solution");
  std::map<int, SuperPolynomial> comp;
  size_t c = 0;
  for (int j = 0; 2 * j <= k; ++j) {
    SuperPolynomial hj(s);
    for (const auto& b : hb[j].basis) hj += b * (*x)[c++];
    if (!hj.is_zero()) comp.emplace(j, hj);
  }
  std::vector<FischerComponent> out;
  for (auto& [j, h] : comp) out.push_back({j, h});
  return out;
}

}  // namespace osp
