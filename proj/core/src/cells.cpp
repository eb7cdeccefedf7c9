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

#include "matflock/cells.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

}  // namespace

CellSystem::CellSystem(Matroid reference, std::vector<DifferenceConstraint> constraints)
    : reference_(std::move(reference)) {
  std::map<std::pair<int, int>, std::int64_t> strongest;
  for (const auto& c : constraints) {
    if (c.i == c.j) throw std::invalid_argument("difference constraint on a single element");
    auto [it, inserted] = strongest.emplace(std::make_pair(c.i, c.j), c.bound);
    if (!inserted) it->second = std::max(it->second, c.bound);
  }
  for (const auto& [key, bound] : strongest) constraints_.push_back({key.first, key.second, bound});
}

bool CellSystem::contains(const IntegerVector& alpha) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const DifferenceConstraint& c) { return alpha.at(c.i) - alpha.at(c.j) >= c.bound; });
}

int CellSystem::dimension() const {
  const int n = reference_.size();
  // d[i][j]: best implied lower bound on α_i - α_j.
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kNone));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& c : constraints_) d[c.i][c.j] = std::max(d[c.i][c.j], c.bound);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kNone) continue;
      for (int j = 0; j < n; ++j)
        if (d[k][j] != kNone) d[i][j] = std::max(d[i][j], d[i][k] + d[k][j]);
    }
  for (int i = 0; i < n; ++i)
    if (d[i][i] > 0) return -1;  // infeasible
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && d[i][j] != kNone && d[j][i] != kNone && d[i][j] + d[j][i] == 0) cls[j] = classes;
    ++classes;
  }
  return classes - 1;
}

std::optional<IntegerVector> CellSystem::integer_point(int anchor) const {
  const int n = reference_.size();
  // α_i - α_j >= c  <=>  α_j <= α_i - c: an edge i -> j of weight -c.
  IntegerVector dist(n, 0);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& c : constraints_) {
      if (dist[c.i] - c.bound < dist[c.j]) {
        dist[c.j] = dist[c.i] - c.bound;
        changed = true;
      }
    }
    if (!changed) {
      if (n == 0) return dist;
      const std::int64_t offset = dist.at(anchor);
      for (auto& x : dist) x -= offset;
      return dist;
    }
  }
  return std::nullopt;
}

CellSystem cell_system_for(const Valuation& nu, const Matroid& reference) {
  std::vector<DifferenceConstraint> constraints;
  const Subset full = nu.ground().full();
  for (Subset b : reference.bases()) {
    const ExtInt vb = nu(b);
    if (!vb.is_finite()) throw InputError("reference basis " + nu.ground().format(b) + " has infinite value");
    for (int i : elements(b))
      for (int j : elements(full & ~b)) {
        const ExtInt vb2 = nu((b & ~singleton(i)) | singleton(j));
        if (vb2.is_finite()) constraints.push_back({i, j, vb.value() - vb2.value()});
      }
  }
  return CellSystem(reference, std::move(constraints));
}

CellSystem cell_inequalities(const Valuation& nu, const IntegerVector& beta) {
  return cell_system_for(nu, matroid_at(nu, beta));
}

int default_leader_radius(const Valuation& nu) {
  const std::int64_t r = static_cast<std::int64_t>(std::max(nu.size() - 1, 0)) * nu.spread() + 1;
  if (r > std::numeric_limits<int>::max()) throw DomainError("leader window radius overflows");
  return static_cast<int>(r);
}

LeaderScan enumerate_leaders(const Valuation& nu, std::optional<int> radius, int anchor, std::uint64_t max_points) {
  const int n = nu.size();
  if (n == 0) throw InputError("empty ground set");
  if (anchor < 0 || anchor >= n) throw InputError("anchor index out of range");
  LeaderScan scan;
  scan.radius = radius.value_or(default_leader_radius(nu));
  scan.anchor = anchor;
  if (scan.radius < 0) throw InputError("window radius must be nonnegative");
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(scan.radius) + 1;
  std::uint64_t points = 1;
  for (int k = 1; k < n; ++k) {
    if (points > max_points / side) throw DomainError("leader window has more than " + std::to_string(max_points) + " points");
    points *= side;
  }
  // Lexicographic odometer over the free coordinates; first hit wins.
  std::map<std::vector<Subset>, IntegerVector> seen;
  IntegerVector alpha(n, -scan.radius);
  alpha[anchor] = 0;
  while (true) {
    auto bases = bases_at(nu, alpha);
    seen.try_emplace(std::move(bases), alpha);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (k == anchor) continue;
      if (alpha[k] < scan.radius) {
        ++alpha[k];
        break;
      }
      alpha[k] = -scan.radius;
    }
    if (k < 0) break;
  }
  std::vector<Subset> covered;
  for (auto& [bases, rep] : seen) {
    covered.insert(covered.end(), bases.begin(), bases.end());
    scan.leaders.push_back({Matroid(nu.ground(), nu.rank(), bases), rep});
  }
  std::sort(scan.leaders.begin(), scan.leaders.end(),
            [](const Leader& a, const Leader& b) { return a.representative < b.representative; });
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  scan.complete = covered.size() == nu.finite_values().size();
  return scan;
}

std::vector<CellSummary> cell_complex(const LeaderScan& scan, const Valuation& nu) {
  std::vector<CellSummary> out;
  for (const auto& leader : scan.leaders) out.push_back({leader, cell_system_for(nu, leader.matroid).dimension()});
  std::stable_sort(out.begin(), out.end(),
                   [](const CellSummary& a, const CellSummary& b) { return a.dimension < b.dimension; });
  return out;
}

}  // namespace matflock
