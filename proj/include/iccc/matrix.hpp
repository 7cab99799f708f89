// Copyright 2026 The iccc-potts Authors.
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
#include <span>
#include <vector>

#include "iccc/error.hpp"
#include "iccc/ff.hpp"

namespace iccc {

/// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix() : field_(2) {}
  Matrix(std::size_t rows, std::size_t cols, u64 q) : field_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  /// Entries may be any integers; they are reduced mod q.
  static Matrix from_rows(u64 q, const std::vector<std::vector<long long>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols, q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail(Errc::InvalidArgument, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.reduce(rows[r][c]);
    }
    return m;
  }

  static Matrix identity(std::size_t n, u64 q) {
    Matrix m(n, n, q);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64 q() const { return field_.q(); }
  const PrimeField& field() const { return field_; }

  u32& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u32 operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<u32> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const u32> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  std::vector<u32> column(std::size_t c) const {
    std::vector<u32> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, q());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size(), q());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_, q());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  /// Rows of `below` appended under this matrix.
  Matrix stacked(const Matrix& below) const {
    if (below.cols_ != cols_ || below.q() != q()) fail(Errc::InvalidArgument, "stack shape mismatch");
    Matrix m(rows_ + below.rows_, cols_, q());
    std::copy(a_.begin(), a_.end(), m.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return m;
  }

  std::vector<std::vector<u32>> to_rows() const {
    std::vector<std::vector<u32>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.q() == b.q() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u32> a_;
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.q() != b.q()) fail(Errc::InvalidArgument, "multiply shape mismatch");
  const u64 q = a.q();
  Matrix c(a.rows(), b.cols(), q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      u64 s = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) s = (s + u64{a(i, t)} * b(t, j)) % q;
      c(i, j) = static_cast<u32>(s);
    }
  return c;
}

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination; pivots are taken in column order.
inline Echelon row_reduce(Matrix m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    const u32 inv = f.inv(m(rank, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const u32 factor = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::size_t> keep(rank);
  for (std::size_t i = 0; i < rank; ++i) keep[i] = i;
  return {m.select_rows(keep), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

}  // namespace iccc
