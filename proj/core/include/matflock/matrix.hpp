// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matflock/exact.hpp"
#include "matflock/subset.hpp"

namespace matflock {

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);

  /// The submatrix formed by the columns in `columns` (bit field over column
  /// indices), in increasing column order.
  Matrix select_columns(Subset columns) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using ModMatrix = Matrix<std::uint32_t>;

/// The field a linear matroid is represented over: Q, or GF(p).
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless p is prime.
  static FieldSpec prime_field(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

IntMatrix to_int_matrix(const RatMatrix& a);  // throws InputError on fractions
RatMatrix to_rat_matrix(const IntMatrix& a);

/// Multiplies each row by the lcm of its denominators; row spaces and
/// nonvanishing of maximal minors are preserved.
IntMatrix clear_denominators(const RatMatrix& a);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(IntMatrix a);

/// Exact rational determinant via row-wise denominator clearing and Bareiss.
Rational determinant(const RatMatrix& a);

/// Rank over Q by fraction-free elimination.
int rank(const IntMatrix& a);
int rank(const RatMatrix& a);

// GF(p) arithmetic on machine words.
namespace modp {

std::uint32_t reduce(const BigInt& x, std::uint32_t p);
/// Throws DomainError when p divides the denominator.
std::uint32_t reduce(const Rational& x, std::uint32_t p);
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

ModMatrix reduce(const RatMatrix& a, std::uint32_t p);
ModMatrix reduce(const IntMatrix& a, std::uint32_t p);

int rank(ModMatrix a, std::uint32_t p);

/// Reduced row echelon form with zero rows dropped; a canonical basis of the
/// row space.
ModMatrix rref(ModMatrix a, std::uint32_t p);

}  // namespace modp

/// Row reduction over Q with zero rows dropped.
RatMatrix rref(RatMatrix a);

/// A basis of {x : a x = 0}.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

// ---------------------------------------------------------------------------

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <typename T>
Matrix<T> Matrix<T>::select_columns(Subset columns) const {
  std::vector<std::size_t> picked;
  for (std::size_t c = 0; c < cols_; ++c)
    if (contains(columns, static_cast<int>(c))) picked.push_back(c);
  Matrix out(rows_, picked.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < picked.size(); ++k) out(r, k) = (*this)(r, picked[k]);
  return out;
}

}  // namespace matflock
