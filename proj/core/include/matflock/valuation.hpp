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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matflock/exact.hpp"
#include "matflock/ground_set.hpp"
#include "matflock/matroid.hpp"
#include "matflock/subset.hpp"

namespace matflock {

/// A point α ∈ Z^E, indexed by ground-set position.
using IntegerVector = std::vector<std::int64_t>;

IntegerVector unit_vector(int n, int i);
IntegerVector indicator_vector(int n, Subset s);   // e_S
IntegerVector ones_vector(int n);                  // 𝟏
IntegerVector operator+(IntegerVector a, const IntegerVector& b);
IntegerVector operator-(IntegerVector a, const IntegerVector& b);
IntegerVector operator*(std::int64_t k, IntegerVector a);
IntegerVector join(const IntegerVector& a, const IntegerVector& b);  // componentwise max
IntegerVector meet(const IntegerVector& a, const IntegerVector& b);  // componentwise min
Subset positive_support(const IntegerVector& a);
Subset negative_support(const IntegerVector& a);
/// e_S^T α.
std::int64_t subset_sum(const IntegerVector& alpha, Subset s);

/// A map ν from the d-subsets of E to Z ∪ {∞}. Only finite values are stored.
class Valuation {
 public:
  Valuation() = default;
  /// Throws InputError if a key is not a d-subset of E.
  Valuation(GroundSet ground, int rank, const std::map<Subset, std::int64_t>& finite_values);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }

  ExtInt operator()(Subset b) const;

  /// (B, ν(B)) for every finite B, sorted by bit-field value.
  const std::vector<std::pair<Subset, std::int64_t>>& finite_values() const { return values_; }

  /// max ν - min ν over finite values (0 if at most one).
  std::int64_t spread() const;
  std::int64_t min_value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  GroundSet ground_;
  int rank_ = 0;
  std::vector<std::pair<Subset, std::int64_t>> values_;
};

struct ValuationCheck {
  enum class Kind { kValid, kNoFiniteValue, kNoExchange };
  Kind kind = Kind::kValid;
  Subset b = 0;
  Subset b_prime = 0;
  int i = -1;

  bool valid() const { return kind == Kind::kValid; }
};

/// Exhaustive check of (V1) and (V2).
ValuationCheck check_valuation_axioms(const Valuation& nu);

/// The matroid of finite-valued d-subsets.
Matroid support_matroid(const Valuation& nu);

/// g^ν(α) = max { e_B^T α - ν(B) }. Requires a finite value.
std::int64_t g_value(const Valuation& nu, const IntegerVector& alpha);

/// M^ν_α: the d-subsets attaining g^ν(α).
Matroid matroid_at(const Valuation& nu, const IntegerVector& alpha);
/// Same, as a raw sorted basis list (no ground-set copy).
std::vector<Subset> bases_at(const Valuation& nu, const IntegerVector& alpha);

struct MinorOp {
  enum class Kind { kDelete, kContract, kDual };
  Kind kind = Kind::kDual;
  int element = -1;  // ignored for kDual

  static MinorOp remove(int i) { return {Kind::kDelete, i}; }
  static MinorOp contract(int i) { return {Kind::kContract, i}; }
  static MinorOp dual() { return {Kind::kDual, -1}; }
};

/// ν \ i, ν / i or ν*. Deleting a coloop or contracting a loop of the support
/// matroid throws DomainError.
Valuation valuation_minor(const Valuation& nu, MinorOp op);

/// Adds e_B^T α to every finite value.
Valuation shift_valuation(const Valuation& nu, const IntegerVector& alpha);

/// Subtracts the minimum finite value, so that min ν = 0.
Valuation normalize_valuation(const Valuation& nu);

struct TrivialityResult {
  bool trivial = false;
  /// An integral α with M^ν_α = M^ν (only when trivial).
  IntegerVector witness;
  /// A rational α with ν(B) = e_B^T α on the support (only when trivial).
  std::vector<Rational> rational_solution;
};

TrivialityResult is_trivial(const Valuation& nu);

/// An α ∈ Q^E with ν(B) = ν'(B) + e_B^T α for all B, or nullopt.
std::optional<std::vector<Rational>> equivalence_shift(const Valuation& nu,
                                                       const Valuation& nu_prime);

/// ν(B0) = v, ν(B) = 0 on the other bases of M, ∞ elsewhere. Requires every
/// B0 - i + j to be a basis; otherwise throws DomainError naming (i, j).
Valuation circuit_hyperplane_valuation(const Matroid& m, Subset b0, std::int64_t v);

}  // namespace matflock
