// Copyright 2026 The Staircase Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/rational.hpp"
#include "staircase/ratfunc.hpp"

namespace staircase {

namespace detail {

inline bool entry_is_zero(const Rational& v) { return is_zero(v); }
template <class P>
bool entry_is_zero(const RatFunc<P>& v) {
  return v.is_zero();
}

inline std::string entry_string(const Rational& v) { return to_string(v); }
template <class P>
std::string entry_string(const RatFunc<P>& v) {
  return v.to_string();
}

}  // namespace detail

/// Dense matrix over an exact field. Indices are 0-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix filled(std::size_t rows, std::size_t cols, const T& v) {
    Matrix m(rows, cols);
    for (auto& e : m.data_) e = v;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not chain");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (detail::entry_is_zero(a(i, l))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, l) * b(l, j);
      }
    }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.data_) e = s * e;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  /// Sum of all entries, i.e. 1^T M 1.
  T total() const {
    T s(0);
    for (const auto& e : data_) s = s + e;
    return s;
  }

  /// Row sums, i.e. M 1.
  std::vector<T> row_sums() const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j);
    }
    return out;
  }

  /// Rows as "[a, b; c, d]".
  std::string to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out << "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out << ", ";
        out << detail::entry_string((*this)(i, j));
      }
    }
    out << ']';
    return out.str();
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Exact inverse by Gauss-Jordan elimination; any nonzero pivot will do
/// since arithmetic is exact. Throws Singular when no pivot exists.
template <class T>
Matrix<T> invert(Matrix<T> m) {
  if (!m.is_square()) throw InvalidArgument("only square matrices invert");
  const std::size_t n = m.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && detail::entry_is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) throw Singular();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const T scale = T(1) / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || detail::entry_is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace staircase
