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

#include "matflock/valuation.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "matflock/cells.hpp"
#include "matflock/errors.hpp"
#include "matflock/matrix.hpp"

namespace matflock {
namespace {

void require_same_length(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("integer vectors of different lengths");
}

void require_length(const Valuation& nu, const IntegerVector& alpha) {
  if (static_cast<int>(alpha.size()) != nu.size())
    throw InputError("vector has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(nu.size()));
}

// Solves e_B^T α = rhs(B) over the listed bases.
std::optional<std::vector<Rational>> solve_on_bases(int n, const std::vector<std::pair<Subset, std::int64_t>>& rows) {
  RatMatrix a(rows.size(), n);
  std::vector<Rational> b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int e : elements(rows[r].first)) a(r, e) = 1;
    b[r] = rows[r].second;
  }
  return solve(a, b);
}

}  // namespace

IntegerVector unit_vector(int n, int i) {
  IntegerVector v(n, 0);
  v.at(i) = 1;
  return v;
}

IntegerVector indicator_vector(int n, Subset s) {
  IntegerVector v(n, 0);
  for (int e : elements(s)) v.at(e) = 1;
  return v;
}

IntegerVector ones_vector(int n) { return IntegerVector(n, 1); }

IntegerVector operator+(IntegerVector a, const IntegerVector& b) {
  require_same_length(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

IntegerVector operator-(IntegerVector a, const IntegerVector& b) {
  require_same_length(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

IntegerVector operator*(std::int64_t k, IntegerVector a) {
  for (auto& x : a) x *= k;
  return a;
}

IntegerVector join(const IntegerVector& a, const IntegerVector& b) {
  require_same_length(a, b);
  IntegerVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

IntegerVector meet(const IntegerVector& a, const IntegerVector& b) {
  require_same_length(a, b);
  IntegerVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::min(a[k], b[k]);
  return out;
}

Subset positive_support(const IntegerVector& a) {
  Subset s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) s |= singleton(static_cast<int>(k));
  return s;
}

Subset negative_support(const IntegerVector& a) {
  Subset s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < 0) s |= singleton(static_cast<int>(k));
  return s;
}

std::int64_t subset_sum(const IntegerVector& alpha, Subset s) {
  std::int64_t total = 0;
  while (s) {
    total += alpha[std::countr_zero(s)];
    s &= s - 1;
  }
  return total;
}

Valuation::Valuation(GroundSet ground, int rank, const std::map<Subset, std::int64_t>& finite_values)
    : ground_(std::move(ground)), rank_(rank) {
  if (rank_ < 0 || rank_ > ground_.size()) throw InputError("rank " + std::to_string(rank_) + " out of range");
  values_.reserve(finite_values.size());
  for (const auto& [b, v] : finite_values) {
    if (!is_subset(b, ground_.full()) || cardinality(b) != rank_)
      throw InputError("valuation key " + ground_.format(b) + " is not a " + std::to_string(rank_) + "-subset of E");
    values_.emplace_back(b, v);
  }
}

ExtInt Valuation::operator()(Subset b) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), b,
                             [](const auto& entry, Subset key) { return entry.first < key; });
  if (it == values_.end() || it->first != b) return ExtInt::infinity();
  return it->second;
}

std::int64_t Valuation::spread() const {
  if (values_.empty()) return 0;
  auto [lo, hi] = std::minmax_element(values_.begin(), values_.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
  return hi->second - lo->second;
}

std::int64_t Valuation::min_value() const {
  if (values_.empty()) throw DomainError("valuation has no finite value");
  return std::min_element(values_.begin(), values_.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; })
      ->second;
}

ValuationCheck check_valuation_axioms(const Valuation& nu) {
  ValuationCheck result;
  if (nu.finite_values().empty()) {
    result.kind = ValuationCheck::Kind::kNoFiniteValue;
    return result;
  }
  // Pairs with an infinite side satisfy (V2) trivially.
  std::vector<Subset> finite;
  for (const auto& [b, v] : nu.finite_values()) finite.push_back(b);
  std::sort(finite.begin(), finite.end(), lex_less);
  for (Subset b : finite) {
    const std::int64_t vb = nu(b).value();
    for (Subset bp : finite) {
      const ExtInt lhs = vb + nu(bp).value();
      for (int i : elements(b & ~bp)) {
        bool found = false;
        for (int j : elements(bp & ~b)) {
          ExtInt rhs = nu((b & ~singleton(i)) | singleton(j)) + nu((bp & ~singleton(j)) | singleton(i));
          if (rhs.is_finite() && lhs >= rhs) {
            found = true;
            break;
          }
        }
        if (!found) {
          result.kind = ValuationCheck::Kind::kNoExchange;
          result.b = b;
          result.b_prime = bp;
          result.i = i;
          return result;
        }
      }
    }
  }
  return result;
}

Matroid support_matroid(const Valuation& nu) {
  std::vector<Subset> bases;
  for (const auto& [b, v] : nu.finite_values()) bases.push_back(b);
  return Matroid(nu.ground(), nu.rank(), std::move(bases));
}

std::int64_t g_value(const Valuation& nu, const IntegerVector& alpha) {
  require_length(nu, alpha);
  if (nu.finite_values().empty()) throw DomainError("g is undefined for a valuation without finite values");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [b, v] : nu.finite_values()) best = std::max(best, subset_sum(alpha, b) - v);
  return best;
}

std::vector<Subset> bases_at(const Valuation& nu, const IntegerVector& alpha) {
  const std::int64_t g = g_value(nu, alpha);
  std::vector<Subset> out;
  for (const auto& [b, v] : nu.finite_values())
    if (subset_sum(alpha, b) - v == g) out.push_back(b);
  return out;
}

Matroid matroid_at(const Valuation& nu, const IntegerVector& alpha) {
  return Matroid(nu.ground(), nu.rank(), bases_at(nu, alpha));
}

Valuation valuation_minor(const Valuation& nu, MinorOp op) {
  std::map<Subset, std::int64_t> values;
  switch (op.kind) {
    case MinorOp::Kind::kDual: {
      for (const auto& [b, v] : nu.finite_values()) values[nu.ground().full() & ~b] = v;
      return Valuation(nu.ground(), nu.size() - nu.rank(), values);
    }
    case MinorOp::Kind::kDelete: {
      const int i = op.element;
      if (i < 0 || i >= nu.size()) throw InputError("element index out of range");
      for (const auto& [b, v] : nu.finite_values())
        if (!contains(b, i)) values[drop_index(b, i)] = v;
      if (values.empty())
        throw DomainError("cannot delete " + nu.ground().label(i) + ": it is a coloop of the support matroid");
      return Valuation(nu.ground().without(singleton(i)), nu.rank(), values);
    }
    case MinorOp::Kind::kContract: {
      const int i = op.element;
      if (i < 0 || i >= nu.size()) throw InputError("element index out of range");
      for (const auto& [b, v] : nu.finite_values())
        if (contains(b, i)) values[drop_index(b & ~singleton(i), i)] = v;
      if (values.empty())
        throw DomainError("cannot contract " + nu.ground().label(i) + ": it is a loop of the support matroid");
      return Valuation(nu.ground().without(singleton(i)), nu.rank() - 1, values);
    }
  }
  throw std::logic_error("unreachable");
}

Valuation shift_valuation(const Valuation& nu, const IntegerVector& alpha) {
  require_length(nu, alpha);
  std::map<Subset, std::int64_t> values;
  for (const auto& [b, v] : nu.finite_values()) values[b] = v + subset_sum(alpha, b);
  return Valuation(nu.ground(), nu.rank(), values);
}

Valuation normalize_valuation(const Valuation& nu) {
  const std::int64_t lo = nu.min_value();
  std::map<Subset, std::int64_t> values;
  for (const auto& [b, v] : nu.finite_values()) values[b] = v - lo;
  return Valuation(nu.ground(), nu.rank(), values);
}

TrivialityResult is_trivial(const Valuation& nu) {
  TrivialityResult result;
  auto solution = solve_on_bases(nu.size(), nu.finite_values());
  if (!solution) return result;
  // The cell of the support is a difference system; an integer point exists
  // once a rational one does.
  const Matroid support = support_matroid(nu);
  auto point = cell_system_for(nu, support).integer_point(0);
  if (!point || bases_at(nu, *point) != support.bases())
    throw std::logic_error("no integral witness for a consistent triviality system");
  result.trivial = true;
  result.witness = std::move(*point);
  result.rational_solution = std::move(*solution);
  return result;
}

std::optional<std::vector<Rational>> equivalence_shift(const Valuation& nu, const Valuation& nu_prime) {
  if (nu.ground() != nu_prime.ground() || nu.rank() != nu_prime.rank()) return std::nullopt;
  const auto& a = nu.finite_values();
  const auto& b = nu_prime.finite_values();
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::pair<Subset, std::int64_t>> rows;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].first != b[k].first) return std::nullopt;
    rows.emplace_back(a[k].first, a[k].second - b[k].second);
  }
  return solve_on_bases(nu.size(), rows);
}

Valuation circuit_hyperplane_valuation(const Matroid& m, Subset b0, std::int64_t v) {
  if (v < 0) throw InputError("relaxation value must be nonnegative");
  if (!m.is_basis(b0)) throw DomainError(m.ground().format(b0) + " is not a basis");
  for (int i : elements(b0))
    for (int j : elements(m.ground().full() & ~b0))
      if (!m.is_basis((b0 & ~singleton(i)) | singleton(j)))
        throw DomainError("exchange condition fails at (i, j) = (" + m.ground().label(i) + ", " +
                          m.ground().label(j) + "): " + m.ground().format((b0 & ~singleton(i)) | singleton(j)) +
                          " is not a basis");
  std::map<Subset, std::int64_t> values;
  for (Subset b : m.bases()) values[b] = b == b0 ? v : 0;
  return Valuation(m.ground(), m.rank(), values);
}

}  // namespace matflock
