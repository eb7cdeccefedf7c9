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

#include <algorithm>
#include <initializer_list>
#include <map>
#include <vector>

#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock::testing {

/// Subset from 1-based element numbers, matching ground sets {1..n}.
inline Subset S(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= singleton(e - 1);
  return s;
}

inline std::vector<Subset> family(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> out;
  for (const auto& s : sets) out.push_back(S(s));
  std::sort(out.begin(), out.end());
  return out;
}

/// ν on the d-subsets of {1..n}: the listed values, `rest` on all others.
inline Valuation valuation_on(int n, int d, const std::map<Subset, std::int64_t>& values, std::int64_t rest = 0) {
  std::map<Subset, std::int64_t> all;
  for (Subset b : k_subsets(n, d)) {
    auto it = values.find(b);
    all[b] = it == values.end() ? rest : it->second;
  }
  return Valuation(GroundSet::range(n), d, all);
}

/// ν({1,2}) = ν({3,4}) = 1, 0 on the other pairs of {1..4}.
inline Valuation u24_valuation() { return valuation_on(4, 2, {{S({1, 2}), 1}, {S({3, 4}), 1}}); }

/// ν ≡ 0 on all d-subsets of {1..n}.
inline Valuation zero_valuation(int n, int d) { return valuation_on(n, d, {}); }

}  // namespace matflock::testing
