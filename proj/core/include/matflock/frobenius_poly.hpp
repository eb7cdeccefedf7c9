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

#include <cstdint>
#include <utility>
#include <vector>

namespace matflock {

/// A polynomial Σ c_k F^k over GF(p) in a formal Frobenius symbol F.
///
/// With prime-field coefficients, additive polynomials Σ c x^{p^k} compose
/// like these polynomials multiply, so a linearized parametrization is a
/// matrix over the commutative domain GF(p)[F].
class FrobeniusPolynomial {
 public:
  FrobeniusPolynomial() = default;
  FrobeniusPolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FrobeniusPolynomial constant(std::uint32_t p, std::uint32_t c);
  /// c·F^k.
  static FrobeniusPolynomial monomial(std::uint32_t p, std::uint32_t c, int k);

  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  std::uint32_t coefficient(int k) const;

  /// Largest k with F^k dividing the polynomial. Requires nonzero.
  int order_at_zero() const;

  FrobeniusPolynomial operator+(const FrobeniusPolynomial& o) const;
  FrobeniusPolynomial operator-(const FrobeniusPolynomial& o) const;
  FrobeniusPolynomial operator*(const FrobeniusPolynomial& o) const;
  /// Quotient and remainder with deg(remainder) < deg(o). Throws
  /// std::domain_error for o = 0.
  std::pair<FrobeniusPolynomial, FrobeniusPolynomial> divide(const FrobeniusPolynomial& o) const;
  /// Exact quotient; throws std::domain_error when o does not divide *this.
  FrobeniusPolynomial divide_exact(const FrobeniusPolynomial& o) const;

  friend bool operator==(const FrobeniusPolynomial&, const FrobeniusPolynomial&) = default;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

using FrobeniusMatrix = std::vector<std::vector<FrobeniusPolynomial>>;

/// Rank over the fraction field GF(p)(F), by fraction-free elimination.
int rank(const FrobeniusMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
FrobeniusPolynomial determinant(const FrobeniusMatrix& m);

}  // namespace matflock
