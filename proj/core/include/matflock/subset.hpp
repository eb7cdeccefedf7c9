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

#include <bit>
#include <cstdint>
#include <vector>

namespace matflock {

/// A subset of a ground set of at most 64 elements, as a bit field over the
/// element indices.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

constexpr Subset singleton(int i) { return Subset{1} << i; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1U; }
constexpr int cardinality(Subset s) { return std::popcount(s); }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr Subset full_set(int n) {
  return n >= kMaxGroundSize ? ~Subset{0} : (Subset{1} << n) - 1;
}

/// Lexicographic order on the sorted element lists of two subsets of equal
/// size: the set holding the lowest differing element comes first.
constexpr bool lex_less(Subset a, Subset b) {
  Subset diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

std::vector<int> elements(Subset s);

Subset subset_of(const std::vector<int>& indices);

/// All k-subsets of {0..n-1}, in increasing numeric (colex) order.
std::vector<Subset> k_subsets(int n, int k);

/// Removes bit `i` and shifts the higher bits down by one, re-indexing a
/// subset of E onto E - i.
constexpr Subset drop_index(Subset s, int i) {
  Subset low = s & ((Subset{1} << i) - 1);
  Subset high = (s >> (i + 1)) << i;
  return low | high;
}

}  // namespace matflock
