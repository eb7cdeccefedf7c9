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

#include "matflock/matrix.hpp"

#include <numeric>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

// Fraction-free forward elimination in place; returns the rank. When the
// matrix is square and full rank, the last pivot is ±det (sign tracked).
int bareiss_eliminate(IntMatrix& a, int* sign = nullptr) {
  const std::size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  int s = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.swap_rows(pivot, r);
      s = -s;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (sign) *sign = s;
  return static_cast<int>(r);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

IntMatrix to_int_matrix(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (denominator(a(r, c)) != 1) throw InputError("expected an integer matrix, got " + to_string(a(r, c)));
      out(r, c) = numerator(a(r, c));
    }
  return out;
}

RatMatrix to_rat_matrix(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Rational(a(r, c));
  return out;
}

IntMatrix clear_denominators(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) l = boost::multiprecision::lcm(l, BigInt(denominator(a(r, c))));
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = BigInt(numerator(a(r, c))) * (l / BigInt(denominator(a(r, c))));
  }
  return out;
}

BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  int sign = 1;
  int r = bareiss_eliminate(a, &sign);
  if (r < static_cast<int>(a.rows())) return 0;
  BigInt d = a(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? BigInt(-d) : d;
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Rational scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) l = boost::multiprecision::lcm(l, BigInt(denominator(a(r, c))));
    scale *= Rational(l);
  }
  return Rational(determinant(clear_denominators(a))) / scale;
}

int rank(const IntMatrix& a) {
  IntMatrix copy = a;
  return bareiss_eliminate(copy);
}

int rank(const RatMatrix& a) { return rank(clear_denominators(a)); }

namespace modp {

std::uint32_t reduce(const BigInt& x, std::uint32_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const Rational& x, std::uint32_t p) {
  std::uint32_t den = reduce(BigInt(denominator(x)), p);
  if (den == 0) throw DomainError("denominator of " + to_string(x) + " is divisible by " + std::to_string(p));
  return static_cast<std::uint32_t>(std::uint64_t{reduce(BigInt(numerator(x)), p)} * inverse(den, p) % p);
}

ModMatrix reduce(const RatMatrix& a, std::uint32_t p) {
  ModMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = reduce(a(r, c), p);
  return out;
}

ModMatrix reduce(const IntMatrix& a, std::uint32_t p) {
  ModMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = reduce(a(r, c), p);
  return out;
}

ModMatrix rref(ModMatrix a, std::uint32_t p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    std::uint64_t inv = inverse(a(r, c), p);
    for (std::size_t j = c; j < cols; ++j) a(r, j) = static_cast<std::uint32_t>(a(r, j) * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      std::uint64_t f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) = static_cast<std::uint32_t>((a(i, j) + (p - f) * a(r, j)) % p);
    }
    ++r;
  }
  ModMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

int rank(ModMatrix a, std::uint32_t p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    std::uint64_t inv = inverse(a(r, c), p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      std::uint64_t f = a(i, c) * inv % p;
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) = static_cast<std::uint32_t>((a(i, j) + (p - f) * a(r, j)) % p);
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace modp

RatMatrix rref(RatMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  RatMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
  RatMatrix red = rref(a);
  const std::size_t cols = a.cols();
  std::vector<int> pivot_col(red.rows(), -1);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < red.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (red(r, c) != 0) {
        pivot_col[r] = static_cast<int>(c);
        is_pivot[c] = true;
        break;
      }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < red.rows(); ++r) v[pivot_col[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RatMatrix red = rref(std::move(aug));
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t c = 0;
    while (c < a.cols() && red(r, c) == 0) ++c;
    if (c == a.cols()) return std::nullopt;  // 0 = nonzero
    x[c] = red(r, a.cols());
  }
  return x;
}

}  // namespace matflock
