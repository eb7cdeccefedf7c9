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
#include <optional>
#include <vector>

#include "matflock/exact.hpp"
#include "matflock/valuation.hpp"

namespace matflock {

/// A function Z^n -> Z ∪ {∞} tabulated on the box [lo, hi]; +∞ outside.
class WindowFunction {
 public:
  /// All values start at +∞. Throws InputError if the box is empty.
  WindowFunction(IntegerVector lo, IntegerVector hi);

  static WindowFunction tabulate(IntegerVector lo, IntegerVector hi,
                                 const std::function<ExtInt(const IntegerVector&)>& fn);

  int dimension() const { return static_cast<int>(lo_.size()); }
  const IntegerVector& lo() const { return lo_; }
  const IntegerVector& hi() const { return hi_; }
  std::size_t point_count() const { return values_.size(); }

  bool in_box(const IntegerVector& x) const;
  ExtInt operator()(const IntegerVector& x) const;
  void set(const IntegerVector& x, ExtInt value);

  IntegerVector point(std::size_t index) const;
  ExtInt value_at_index(std::size_t index) const { return values_[index]; }

  /// Points with a finite value.
  std::vector<IntegerVector> domain() const;

 private:
  std::size_t index_of(const IntegerVector& x) const;

  IntegerVector lo_;
  IntegerVector hi_;
  std::vector<ExtInt> values_;
};

/// f(e_B) = ν(B) on the box [0, 1]^E; ∞ at every other point.
WindowFunction point_function(const Valuation& nu);

struct LConvexReport {
  bool valid = false;
  std::optional<std::int64_t> slope;  // r in g(x + 𝟏) = g(x) + r
  // First violation: submodularity at (x, y), or the shift law at x (y empty).
  IntegerVector x;
  IntegerVector y;
  std::uint64_t pairs_checked = 0;
  std::uint64_t shifts_checked = 0;
  std::uint64_t shifts_skipped = 0;  // x + 𝟏 outside the box
};

/// Submodularity on all in-box pairs and a constant 𝟏-slope. Throws
/// InputError if g has empty domain.
LConvexReport check_lconvex(const WindowFunction& g);

struct MConvexReport {
  bool valid = false;
  IntegerVector x;
  IntegerVector y;
  int i = -1;
  std::uint64_t pairs_checked = 0;
};

/// Exhaustive exchange check over dom(f). Throws InputError on empty domain.
MConvexReport check_mconvex(const WindowFunction& f);

/// h•(x) = max { x^T y - h(y) : y ∈ dom h } for every x in [lo, hi].
WindowFunction fenchel_dual(const WindowFunction& h, IntegerVector lo, IntegerVector hi);

using IntegerOracle = std::function<std::int64_t(const IntegerVector&)>;

/// Local optimality for L-convex G: G(x) <= G(x + e_I) for every I and
/// G(x) = G(x + 𝟏). 2^n + 1 oracle calls. L-convexity of G is the caller's
/// responsibility.
bool lconvex_is_minimizer(const IntegerOracle& g, const IntegerVector& x);

}  // namespace matflock
