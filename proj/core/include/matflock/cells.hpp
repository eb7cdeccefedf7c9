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
#include <optional>
#include <vector>

#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock {

/// α_i - α_j >= bound.
struct DifferenceConstraint {
  int i = 0;
  int j = 0;
  std::int64_t bound = 0;

  friend bool operator==(const DifferenceConstraint&, const DifferenceConstraint&) = default;
};

/// The cell C^ν_β = {α : B^ν_α ⊇ B^ν_β} as a system of difference
/// constraints. Only the strongest bound per ordered pair is kept.
class CellSystem {
 public:
  CellSystem(Matroid reference, std::vector<DifferenceConstraint> constraints);

  const Matroid& reference() const { return reference_; }
  const std::vector<DifferenceConstraint>& constraints() const { return constraints_; }

  bool contains(const IntegerVector& alpha) const;

  /// Dimension of the cell modulo the lineality direction 𝟏, from the
  /// implicit equalities of the system (longest-path closure).
  int dimension() const;

  /// Some integer point with α_anchor = 0, or nullopt if the system is
  /// infeasible. Bellman-Ford on the constraint graph.
  std::optional<IntegerVector> integer_point(int anchor = 0) const;

 private:
  Matroid reference_;
  std::vector<DifferenceConstraint> constraints_;
};

/// The cell of β: constraints ν(B) - ν(B') for B ∈ B^ν_β, B' = B - i + j ∈ B^ν.
CellSystem cell_inequalities(const Valuation& nu, const IntegerVector& beta);

/// The same construction for an arbitrary reference family of finite-valued
/// bases (used when the reference point is rational).
CellSystem cell_system_for(const Valuation& nu, const Matroid& reference);

struct Leader {
  Matroid matroid;
  IntegerVector representative;  // lexicographically smallest in the window
};

struct LeaderScan {
  int radius = 0;
  int anchor = 0;
  std::vector<Leader> leaders;  // sorted by representative
  /// Every finite-valued d-subset occurs in some leader.
  bool complete = false;
};

/// (n-1)·S + 1 where S is the value spread of ν.
int default_leader_radius(const Valuation& nu);

/// Scans {α : α_anchor = 0, |α_i| <= radius} and collects the distinct
/// M^ν_α. Throws DomainError when the window exceeds `max_points`.
LeaderScan enumerate_leaders(const Valuation& nu, std::optional<int> radius = std::nullopt,
                             int anchor = 0, std::uint64_t max_points = 20'000'000);

struct CellSummary {
  Leader leader;
  int dimension = 0;
};

/// Leaders with the dimension of their cells, zero-dimensional ones first.
std::vector<CellSummary> cell_complex(const LeaderScan& scan, const Valuation& nu);

}  // namespace matflock
