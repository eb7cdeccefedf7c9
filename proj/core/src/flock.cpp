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

#include "matflock/flock.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "matflock/errors.hpp"

namespace matflock {

struct MatroidFlock::Memo {
  std::mutex mutex;
  // std::map nodes are stable, so references handed out stay valid.
  std::map<IntegerVector, std::optional<std::vector<Subset>>> cache;
};

MatroidFlock::MatroidFlock(GroundSet ground, int rank, Source source, Evaluator evaluate, int suggested_cutoff)
    : ground_(std::move(ground)),
      rank_(rank),
      source_(source),
      evaluate_(std::move(evaluate)),
      suggested_cutoff_(suggested_cutoff),
      memo_(std::make_unique<Memo>()) {
  if (rank_ < 0 || rank_ > ground_.size()) throw InputError("flock rank out of range");
}

MatroidFlock::MatroidFlock(MatroidFlock&&) noexcept = default;
MatroidFlock& MatroidFlock::operator=(MatroidFlock&&) noexcept = default;
MatroidFlock::~MatroidFlock() = default;

std::optional<std::vector<Subset>> MatroidFlock::evaluate(const IntegerVector& alpha) const {
  if (static_cast<int>(alpha.size()) != size())
    throw InputError("vector has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(size()));
  std::vector<Subset> bases;
  try {
    bases = evaluate_(alpha);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw DomainError("flock produced a matroid without bases");
  for (Subset b : bases)
    if (cardinality(b) != rank_ || !is_subset(b, ground_.full()))
      throw DomainError("flock produced " + ground_.format(b) + ", not a " + std::to_string(rank_) + "-subset of E");
  return bases;
}

const std::vector<Subset>* MatroidFlock::try_bases(const IntegerVector& alpha) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->cache.find(alpha);
    if (it != memo_->cache.end()) return it->second ? &*it->second : nullptr;
  }
  auto value = evaluate(alpha);
  std::lock_guard lock(memo_->mutex);
  auto [it, inserted] = memo_->cache.emplace(alpha, std::move(value));
  return it->second ? &*it->second : nullptr;
}

const std::vector<Subset>& MatroidFlock::bases(const IntegerVector& alpha) const {
  const auto* b = try_bases(alpha);
  if (!b) {
    std::string text;
    for (auto x : alpha) text += (text.empty() ? "" : ",") + std::to_string(x);
    throw DomainError("flock is undefined at α = (" + text + ")");
  }
  return *b;
}

Matroid MatroidFlock::at(const IntegerVector& alpha) const { return Matroid(ground_, rank_, bases(alpha)); }

int MatroidFlock::rank_at(const IntegerVector& alpha, Subset i) const {
  int best = 0;
  for (Subset b : bases(alpha)) best = std::max(best, cardinality(b & i));
  return best;
}

std::string to_string(MatroidFlock::Source source) {
  switch (source) {
    case MatroidFlock::Source::kValuation: return "valuation";
    case MatroidFlock::Source::kToric: return "toric";
    case MatroidFlock::Source::kLinearized: return "linearized";
    case MatroidFlock::Source::kExplicit: return "explicit";
  }
  return "unknown";
}

namespace {

// The flock tabulated on the box [lo, lo + side - 1]^E, first coordinate
// slowest.
class BoxTable {
 public:
  BoxTable(const MatroidFlock& flock, std::int64_t lo, std::int64_t side) : n_(flock.size()), lo_(lo), side_(side) {
    std::size_t count = 1;
    for (int k = 0; k < n_; ++k) {
      if (count > 50'000'000 / static_cast<std::size_t>(side)) throw DomainError("flock window is too large");
      count *= static_cast<std::size_t>(side);
    }
    entries_.reserve(count);
    IntegerVector alpha(n_, lo);
    for (std::size_t idx = 0; idx < count; ++idx) {
      entries_.push_back(flock.evaluate(alpha));
      for (int k = n_ - 1; k >= 0; --k) {
        if (alpha[k] < lo + side - 1) {
          ++alpha[k];
          break;
        }
        alpha[k] = lo;
      }
    }
  }

  const std::optional<std::vector<Subset>>& at(const IntegerVector& alpha) const {
    std::size_t idx = 0;
    for (int k = 0; k < n_; ++k) idx = idx * side_ + static_cast<std::size_t>(alpha[k] - lo_);
    return entries_[idx];
  }

 private:
  int n_;
  std::int64_t lo_;
  std::int64_t side_;
  std::vector<std::optional<std::vector<Subset>>> entries_;
};

Matroid minor_matroid(const GroundSet& ground, const std::vector<Subset>& bases, Subset removed) {
  std::vector<Subset> compressed;
  for (Subset b : bases) compressed.push_back(compress_subset(b, removed));
  const int r = compressed.empty() ? 0 : cardinality(compressed.front());
  return Matroid(ground.without(removed), r, std::move(compressed));
}

}  // namespace

FlockWindowReport check_flock_axioms(const MatroidFlock& flock, int radius, bool set_version) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  FlockWindowReport report;
  report.radius = radius;
  const int n = flock.size();
  const BoxTable table(flock, -radius, 2 * static_cast<std::int64_t>(radius) + 2);
  const GroundSet& ground = flock.ground();

  IntegerVector alpha(n, -radius);
  IntegerVector shifted;
  const Subset full = ground.full();
  while (true) {
    const auto& here = table.at(alpha);
    if (!here) {
      report.skipped += n + 1;
    } else {
      for (int i = 0; i < n && !report.first_violation; ++i) {
        ++alpha[i];
        const auto& up = table.at(alpha);
        --alpha[i];
        if (!up) {
          ++report.skipped;
          continue;
        }
        ++report.mf1_checked;
        auto left = contraction_bases(*here, i);
        auto right = deletion_bases(*up, i);
        if (left == right) {
          ++report.mf1_passed;
        } else {
          report.first_violation = FlockViolation{"MF1", alpha, singleton(i), minor_matroid(ground, left, singleton(i)),
                                                  minor_matroid(ground, right, singleton(i))};
        }
      }
      if (!report.first_violation) {
        shifted = alpha + ones_vector(n);
        const auto& up = table.at(shifted);
        if (!up) {
          ++report.skipped;
        } else {
          ++report.mf2_checked;
          if (*up == *here) {
            ++report.mf2_passed;
          } else {
            report.first_violation = FlockViolation{"MF2", alpha, full, Matroid(ground, flock.rank(), *here),
                                                    Matroid(ground, flock.rank(), *up)};
          }
        }
      }
      if (set_version) {
        for (Subset s = 1; s <= full && !report.first_violation; ++s) {
          const auto& up = table.at(alpha + indicator_vector(n, s));
          if (up) {
            ++report.set_checked;
            auto left = *here;
            auto right = *up;
            for (int i : elements(s)) {
              left = contraction_bases(left, i);
              right = deletion_bases(right, i);
            }
            if (left == right) {
              ++report.set_passed;
            } else {
              report.first_violation =
                  FlockViolation{"MF1-set", alpha, s, minor_matroid(ground, left, s), minor_matroid(ground, right, s)};
            }
          } else {
            ++report.skipped;
          }
          if (s == full) break;
        }
      }
    }
    if (report.first_violation) break;
    int k = n - 1;
    for (; k >= 0; --k) {
      if (alpha[k] < radius) {
        ++alpha[k];
        break;
      }
      alpha[k] = -radius;
    }
    if (k < 0) break;
  }
  return report;
}

std::int64_t g_M(const MatroidFlock& flock, const IntegerVector& alpha, bool verify_path) {
  const int n = flock.size();
  if (static_cast<int>(alpha.size()) != n) throw InputError("vector has the wrong length");
  if (n == 0) return 0;
  const std::int64_t m = *std::min_element(alpha.begin(), alpha.end());
  const std::int64_t top = *std::max_element(alpha.begin(), alpha.end()) - m;
  // Threshold sets I_t = {i : α_i - m > t}, t = 0 .. top-1, nested decreasing.
  std::vector<Subset> steps;
  for (std::int64_t t = 0; t < top; ++t) {
    Subset s = 0;
    for (int i = 0; i < n; ++i)
      if (alpha[i] - m > t) s |= singleton(i);
    steps.push_back(s);
  }
  auto walk = [&](auto begin, auto end) {
    IntegerVector at(n, 0);
    std::int64_t g = 0;
    for (auto it = begin; it != end; ++it) {
      g += flock.rank_at(at, *it);
      at = at + indicator_vector(n, *it);
    }
    return g;
  };
  const std::int64_t g = walk(steps.begin(), steps.end());
  if (verify_path) {
    const std::int64_t reverse = walk(steps.rbegin(), steps.rend());
    if (reverse != g)
      throw DomainError("g is path dependent (" + std::to_string(g) + " vs " + std::to_string(reverse) +
                        "); the flock axioms fail on the staircase");
  }
  return g + m * flock.rank();
}

Extraction extract_valuation(const MatroidFlock& flock, const ExtractOptions& options) {
  if (options.cutoff < 0) throw InputError("cutoff must be nonnegative");
  const int n = flock.size(), d = flock.rank();
  Extraction out;
  std::map<Subset, std::int64_t> values;
  for (Subset b : k_subsets(n, d)) {
    const IntegerVector eb = indicator_vector(n, b);
    IntegerVector at(n, 0);
    std::int64_t g = 0;  // g(k e_B), grown one step at a time
    bool found = false;
    for (int k = 0; k <= options.cutoff; ++k) {
      const auto* bases = flock.try_bases(at);
      if (!bases) break;
      if (std::binary_search(bases->begin(), bases->end(), b)) {
        values[b] = static_cast<std::int64_t>(k) * d - g;
        found = true;
        break;
      }
      int r = 0;
      for (Subset c : *bases) r = std::max(r, cardinality(c & b));
      g += r;
      at = at + eb;
    }
    if (!found) out.cutoff_hits.push_back(b);
  }
  if (values.empty()) throw DomainError("no d-subset became a basis within the cutoff");
  out.valuation = Valuation(flock.ground(), d, values);
  out.verified_radius = options.verify_radius;
  if (options.verify_radius > 0) {
    const int r = options.verify_radius;
    IntegerVector alpha(n, -r);
    while (true) {
      if (const auto* bases = flock.try_bases(alpha)) {
        if (bases_at(out.valuation, alpha) != *bases) {
          out.round_trip_ok = false;
          break;
        }
      }
      int k = n - 1;
      for (; k >= 0; --k) {
        if (alpha[k] < r) {
          ++alpha[k];
          break;
        }
        alpha[k] = -r;
      }
      if (k < 0) break;
    }
  }
  return out;
}

MatroidFlock flock_from_valuation(const Valuation& nu) {
  if (nu.finite_values().empty()) throw DomainError("valuation has no finite value");
  return MatroidFlock(
      nu.ground(), nu.rank(), MatroidFlock::Source::kValuation,
      [nu](const IntegerVector& alpha) { return bases_at(nu, alpha); },
      static_cast<int>(std::min<std::int64_t>(nu.spread() + 1, 1 << 20)));
}

MatroidFlock flock_from_table(GroundSet ground, int rank, std::map<IntegerVector, std::vector<Subset>> table) {
  const int n = ground.size();
  // Second index keyed by α - α_0·𝟏, first entry wins.
  std::map<IntegerVector, std::vector<Subset>> normalized;
  std::int64_t radius = 0;
  for (const auto& [alpha, bases] : table) {
    if (static_cast<int>(alpha.size()) != n) throw InputError("table entry has the wrong length");
    for (auto x : alpha) radius = std::max(radius, x < 0 ? -x : x);
    if (n > 0) normalized.try_emplace(alpha - alpha[0] * ones_vector(n), bases);
  }
  auto lookup = [table = std::move(table), normalized = std::move(normalized), n](const IntegerVector& alpha) {
    auto it = table.find(alpha);
    if (it != table.end()) return it->second;
    if (n > 0) {
      auto jt = normalized.find(alpha - alpha[0] * ones_vector(n));
      if (jt != normalized.end()) return jt->second;
    }
    throw std::out_of_range("α outside the flock table");
  };
  return MatroidFlock(std::move(ground), rank, MatroidFlock::Source::kExplicit, std::move(lookup),
                      static_cast<int>(std::min<std::int64_t>(2 * radius, 1 << 20)));
}

}  // namespace matflock
