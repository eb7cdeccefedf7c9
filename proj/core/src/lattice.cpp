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

#include "matflock/lattice.hpp"

#include <algorithm>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Truncated division; the remainder is smaller than the divisor in absolute
// value, which is all the Euclidean steps need.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix vinv(cols, cols);
  for (std::size_t k = 0; k < cols; ++k) vinv(k, k) = 1;

  // Column operations on `a` are mirrored as inverse row operations on V⁻¹.
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    vinv.swap_rows(i, j);
  };
  auto add_col = [&](std::size_t target, std::size_t source, const BigInt& k) {  // col_t += k col_s
    for (std::size_t r = 0; r < rows; ++r) a(r, target) += k * a(r, source);
    for (std::size_t c = 0; c < cols; ++c) vinv(source, c) -= k * vinv(target, c);
  };
  auto negate_col = [&](std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) a(r, j) = -a(r, j);
    for (std::size_t c = 0; c < cols; ++c) vinv(j, c) = -vinv(j, c);
  };
  auto add_row = [&](std::size_t target, std::size_t source, const BigInt& k) {
    for (std::size_t c = 0; c < cols; ++c) a(target, c) += k * a(source, c);
  };

  SmithForm out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs_value(a(i, j)) < abs_value(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      a.swap_rows(pi, t);
      swap_cols(pj, t);
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, -quotient(a(i, t), a(t, t)));
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, -quotient(a(t, j), a(t, t)));
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, 1);
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) negate_col(t);
    out.divisors.push_back(a(t, t));
  }
  out.v_inverse = std::move(vinv);
  return out;
}

IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until one nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs_value(a(i, c)) < abs_value(a(best, c)))) best = i;
      if (best == rows) break;
      a.swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        const BigInt q = quotient(a(i, c), a(r, c));
        for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
        done = done && a(i, c) == 0;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = a(i, c) / a(r, c);
      if (a(i, c) - q * a(r, c) < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

bool is_saturated(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  return std::all_of(snf.divisors.begin(), snf.divisors.end(), [](const BigInt& s) { return s == 1; });
}

IntMatrix saturate_lattice(const RatMatrix& b) {
  const int r = rank(b);
  if (r != static_cast<int>(b.rows()))
    throw DomainError("matrix has rank " + std::to_string(r) + " but " + std::to_string(b.rows()) + " rows");
  const SmithForm snf = smith_normal_form(clear_denominators(b));
  IntMatrix basis(r, b.cols());
  for (int i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) basis(i, j) = snf.v_inverse(i, j);
  return hermite_normal_form(std::move(basis));
}

}  // namespace matflock
