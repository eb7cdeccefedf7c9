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

#include "matflock/frobenius_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "matflock/matrix.hpp"

namespace matflock {

FrobeniusPolynomial::FrobeniusPolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FrobeniusPolynomial FrobeniusPolynomial::constant(std::uint32_t p, std::uint32_t c) { return {p, {c}}; }

FrobeniusPolynomial FrobeniusPolynomial::monomial(std::uint32_t p, std::uint32_t c, int k) {
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs[k] = c;
  return {p, std::move(coeffs)};
}

std::uint32_t FrobeniusPolynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
}

int FrobeniusPolynomial::order_at_zero() const {
  if (is_zero()) throw std::domain_error("order of the zero polynomial");
  int k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

void FrobeniusPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FrobeniusPolynomial FrobeniusPolynomial::operator+(const FrobeniusPolynomial& o) const {
  const std::uint32_t p = p_ ? p_ : o.p_;
  std::vector<std::uint32_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (coefficient(static_cast<int>(k)) + o.coefficient(static_cast<int>(k))) % p;
  return {p, std::move(out)};
}

FrobeniusPolynomial FrobeniusPolynomial::operator-(const FrobeniusPolynomial& o) const {
  const std::uint32_t p = p_ ? p_ : o.p_;
  std::vector<std::uint32_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (coefficient(static_cast<int>(k)) + p - o.coefficient(static_cast<int>(k))) % p;
  return {p, std::move(out)};
}

FrobeniusPolynomial FrobeniusPolynomial::operator*(const FrobeniusPolynomial& o) const {
  const std::uint32_t p = p_ ? p_ : o.p_;
  if (is_zero() || o.is_zero()) return {p, {}};
  std::vector<std::uint64_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) acc[a + b] = (acc[a + b] + std::uint64_t{coeffs_[a]} * o.coeffs_[b]) % p;
  return {p, std::vector<std::uint32_t>(acc.begin(), acc.end())};
}

std::pair<FrobeniusPolynomial, FrobeniusPolynomial> FrobeniusPolynomial::divide(const FrobeniusPolynomial& o) const {
  if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::uint32_t p = o.p_;
  std::vector<std::uint64_t> rem(coeffs_.begin(), coeffs_.end());
  if (rem.size() < o.coeffs_.size()) return {FrobeniusPolynomial(p, {}), FrobeniusPolynomial(p, coeffs_)};
  std::vector<std::uint32_t> q(rem.size() - o.coeffs_.size() + 1, 0);
  const std::uint64_t lead_inv = modp::inverse(o.coeffs_.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = rem[k + o.coeffs_.size() - 1] * lead_inv % p;
    q[k] = static_cast<std::uint32_t>(c);
    if (c == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      rem[k + j] = (rem[k + j] + (p - c) * o.coeffs_[j]) % p;
  }
  return {FrobeniusPolynomial(p, std::move(q)), FrobeniusPolynomial(p, std::vector<std::uint32_t>(rem.begin(), rem.end()))};
}

FrobeniusPolynomial FrobeniusPolynomial::divide_exact(const FrobeniusPolynomial& o) const {
  auto [q, r] = divide(o);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

// Bareiss elimination in place; returns the rank and tracks row swaps.
int bareiss(FrobeniusMatrix& a, bool* odd_swaps) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (rows == 0 || cols == 0) return 0;
  const std::uint32_t p = a[0][0].characteristic();
  FrobeniusPolynomial prev = FrobeniusPolynomial::constant(p, 1);
  std::size_t r = 0;
  bool odd = false;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      odd = !odd;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divide_exact(prev);
      a[i][c] = FrobeniusPolynomial(p, {});
    }
    prev = a[r][c];
    ++r;
  }
  if (odd_swaps) *odd_swaps = odd;
  return static_cast<int>(r);
}

std::uint32_t matrix_characteristic(const FrobeniusMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.characteristic() != 0) return e.characteristic();
  throw std::invalid_argument("matrix entries carry no characteristic");
}

}  // namespace

int rank(const FrobeniusMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  FrobeniusMatrix a = m;
  const std::uint32_t p = matrix_characteristic(m);
  for (auto& row : a)
    for (auto& e : row)
      if (e.characteristic() == 0) e = FrobeniusPolynomial(p, {});
  return bareiss(a, nullptr);
}

FrobeniusPolynomial determinant(const FrobeniusMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix needs a characteristic");
  const std::uint32_t p = matrix_characteristic(m);
  FrobeniusMatrix a = m;
  for (auto& row : a)
    for (auto& e : row)
      if (e.characteristic() == 0) e = FrobeniusPolynomial(p, {});
  bool odd = false;
  if (bareiss(a, &odd) < static_cast<int>(n)) return FrobeniusPolynomial(p, {});
  FrobeniusPolynomial d = a[n - 1][n - 1];
  return odd ? FrobeniusPolynomial(p, {}) - d : d;
}

}  // namespace matflock
