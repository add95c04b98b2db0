#pragma once

#include <optional>
#include <vector>

#include "osp/scalar.hpp"

namespace osp {

inline bool is_zero_entry(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero_entry(const Scalar& s) { return s.is_zero(); }

// Dense exact matrix. Elimination is exact; no pivot tolerance exists.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  std::vector<T> column(size_t c) const {
    std::vector<T> v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          if (!is_zero_entry(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t piv = rows_;
      for (size_t r = row; r < rows_; ++r)
        if (!is_zero_entry((*this)(r, col))) {
          piv = r;
          break;
        }
      if (piv == rows_) continue;
      if (piv != row)
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
      T p = (*this)(row, col);
      if (!(p == T(1)))
        for (size_t c = col; c < cols_; ++c)
          if (!is_zero_entry((*this)(row, c))) (*this)(row, c) /= p;
      std::vector<size_t> nz;
      for (size_t c = col; c < cols_; ++c)
        if (!is_zero_entry((*this)(row, c))) nz.push_back(c);
      for (size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        T f = (*this)(r, col);
        if (is_zero_entry(f)) continue;
        for (size_t c : nz) (*this)(r, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix t = rows_ > cols_ ? transpose() : *this;
    return t.rref().size();
  }

  // Basis of the right nullspace, one vector per free column (echelon-normalized).
  std::vector<std::vector<T>> nullspace() const {
    Matrix t = *this;
    auto piv = t.rref();
    std::vector<bool> is_piv(cols_, false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> out;
    for (size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<T> v(cols_, T(0));
      v[f] = T(1);
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, f);
      out.push_back(std::move(v));
    }
    return out;
  }

  // Some solution of A x = b, if one exists.
  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    Matrix aug(rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
      for (size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
      aug(r, cols_) = b[r];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<T> x(cols_, T(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, cols_);
    return x;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c)
        if (!is_zero_entry((*this)(r, c)) && !is_zero_entry(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<Scalar>;

}  // namespace osp
