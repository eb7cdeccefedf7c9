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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock {

/// A map α ↦ M_α from Z^E to rank-d matroids on E, evaluated lazily and
/// memoized. The memo is internally synchronized, so a flock may be queried
/// from several threads.
class MatroidFlock {
 public:
  enum class Source { kValuation, kToric, kLinearized, kExplicit };

  /// Returns the basis list of M_α; throws std::out_of_range where the
  /// flock is undefined (explicit tables).
  using Evaluator = std::function<std::vector<Subset>(const IntegerVector&)>;

  MatroidFlock(GroundSet ground, int rank, Source source, Evaluator evaluate,
               int suggested_cutoff = 16);
  MatroidFlock(MatroidFlock&&) noexcept;
  MatroidFlock& operator=(MatroidFlock&&) noexcept;
  ~MatroidFlock();

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  Source source() const { return source_; }
  int suggested_cutoff() const { return suggested_cutoff_; }

  /// Sorted basis list of M_α.
  const std::vector<Subset>& bases(const IntegerVector& alpha) const;
  /// nullptr where the flock is undefined.
  const std::vector<Subset>* try_bases(const IntegerVector& alpha) const;
  /// Unmemoized evaluation, for callers that tabulate a window themselves.
  std::optional<std::vector<Subset>> evaluate(const IntegerVector& alpha) const;

  Matroid at(const IntegerVector& alpha) const;

  /// r_α(I).
  int rank_at(const IntegerVector& alpha, Subset i) const;

 private:
  struct Memo;

  GroundSet ground_;
  int rank_ = 0;
  Source source_ = Source::kExplicit;
  Evaluator evaluate_;
  int suggested_cutoff_ = 16;
  std::unique_ptr<Memo> memo_;
};

std::string to_string(MatroidFlock::Source source);

struct FlockViolation {
  std::string axiom;  // "MF1", "MF2" or "MF1-set"
  IntegerVector alpha;
  Subset elements = 0;  // i (or I) for MF1; E for MF2
  Matroid left;         // M_α / I, or M_α
  Matroid right;        // M_{α+e_I} \ I, or M_{α+𝟏}
};

struct FlockWindowReport {
  int radius = 0;
  std::uint64_t mf1_checked = 0;
  std::uint64_t mf1_passed = 0;
  std::uint64_t mf2_checked = 0;
  std::uint64_t mf2_passed = 0;
  std::uint64_t set_checked = 0;
  std::uint64_t set_passed = 0;
  std::uint64_t skipped = 0;  // a neighbour outside an explicit table
  std::optional<FlockViolation> first_violation;

  bool ok() const { return !first_violation.has_value(); }
};

/// Verifies (MF1) for every α in [-radius, radius]^E and every i, and (MF2)
/// at the same points. With `set_version`, also M_α / I = M_{α+e_I} \ I for
/// every nonempty I.
FlockWindowReport check_flock_axioms(const MatroidFlock& flock, int radius,
                                     bool set_version = false);

/// The potential g^M with g(0) = 0 and g(α + e_I) = g(α) + r_α(I), summed
/// along the threshold staircase of α - (min α)𝟏. With `verify_path`, also
/// sums the reversed staircase and throws DomainError if the two disagree
/// (which only happens when the axioms fail on the path).
std::int64_t g_M(const MatroidFlock& flock, const IntegerVector& alpha,
                 bool verify_path = false);

struct ExtractOptions {
  int cutoff = 16;
  /// Radius of the window on which M^ν_α = M_α is re-verified; 0 skips.
  int verify_radius = 2;
};

struct Extraction {
  Valuation valuation;
  /// d-subsets that never became bases up to the cutoff (reported as ∞).
  std::vector<Subset> cutoff_hits;
  /// Whether matroid_at(ν, α) = M_α held on the verification window.
  bool round_trip_ok = true;
  int verified_radius = 0;
};

/// ν^M(B) = k·d - g(k·e_B) for the first k with B a basis of M_{k·e_B}.
Extraction extract_valuation(const MatroidFlock& flock, const ExtractOptions& options);

/// The flock α ↦ M^ν_α. Suggested cutoff is spread(ν) + 1.
MatroidFlock flock_from_valuation(const Valuation& nu);

/// A flock tabulated on a finite window. Lookups outside the table are
/// translated along 𝟏 (MF2) before failing.
MatroidFlock flock_from_table(GroundSet ground, int rank,
                              std::map<IntegerVector, std::vector<Subset>> table);

}  // namespace matflock
