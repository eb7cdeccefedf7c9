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

#include "matflock/matroid.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

void validate_family(const GroundSet& ground, int rank, const std::vector<Subset>& bases) {
  if (rank < 0 || rank > ground.size())
    throw InputError("rank " + std::to_string(rank) + " out of range for a ground set of size " +
                     std::to_string(ground.size()));
  for (Subset b : bases) {
    if (!is_subset(b, ground.full())) throw InputError("basis has elements outside the ground set");
    if (cardinality(b) != rank)
      throw InputError("set " + ground.format(b) + " does not have size " + std::to_string(rank));
  }
}

// Removes element `i` (already dropped from every set) from the indexing.
std::vector<Subset> reindex(const std::vector<Subset>& bases, int i) {
  std::vector<Subset> out;
  out.reserve(bases.size());
  for (Subset b : bases) out.push_back(drop_index(b, i));
  return out;
}

Matroid from_column_test(const std::vector<std::string>& column_labels, int n, int r,
                         const auto& spans_all) {
  std::vector<std::string> labels = column_labels;
  if (labels.empty())
    for (int c = 1; c <= n; ++c) labels.push_back(std::to_string(c));
  if (static_cast<int>(labels.size()) != n)
    throw InputError("expected " + std::to_string(n) + " column labels, got " + std::to_string(labels.size()));
  GroundSet ground(labels);
  std::vector<int> position(n);
  for (int c = 0; c < n; ++c) position[c] = ground.index_of(labels[c]);
  std::vector<Subset> bases;
  for (Subset cols : k_subsets(n, r)) {
    if (!spans_all(cols)) continue;
    Subset b = 0;
    for (int c : elements(cols)) b |= singleton(position[c]);
    bases.push_back(b);
  }
  return Matroid(std::move(ground), r, std::move(bases));
}

}  // namespace

Matroid::Matroid(GroundSet ground, int rank, std::vector<Subset> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {
  validate_family(ground_, rank_, bases_);
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Matroid::is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

std::vector<Subset> Matroid::bases_lex() const {
  std::vector<Subset> out = bases_;
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

BasisCheck check_basis_axioms(const GroundSet& ground, int rank, const std::vector<Subset>& bases) {
  validate_family(ground, rank, bases);
  BasisCheck result;
  if (bases.empty()) {
    result.kind = BasisCheck::Kind::kEmpty;
    return result;
  }
  std::vector<Subset> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto member = [&](Subset s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  std::vector<Subset> lex = sorted;
  std::sort(lex.begin(), lex.end(), lex_less);
  for (Subset b : lex) {
    for (Subset bp : lex) {
      for (int i : elements(b & ~bp)) {
        bool found = false;
        for (int j : elements(bp & ~b)) {
          if (member((b & ~singleton(i)) | singleton(j)) && member((bp & ~singleton(j)) | singleton(i))) {
            found = true;
            break;
          }
        }
        if (!found) {
          result.kind = BasisCheck::Kind::kNoExchange;
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

int rank(const Matroid& m, Subset j) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, cardinality(b & j));
  return best;
}

int connectivity(const Matroid& m, Subset j) {
  return rank(m, j) + rank(m, m.ground().full() & ~j) - m.rank();
}

std::vector<Subset> contraction_bases(const std::vector<Subset>& bases, int i) {
  std::vector<Subset> out;
  for (Subset b : bases)
    if (contains(b, i)) out.push_back(b & ~singleton(i));
  if (out.empty()) return bases;  // loop
  return out;
}

std::vector<Subset> deletion_bases(const std::vector<Subset>& bases, int i) {
  std::vector<Subset> out;
  for (Subset b : bases)
    if (!contains(b, i)) out.push_back(b);
  if (out.empty()) {  // coloop
    for (Subset b : bases) out.push_back(b & ~singleton(i));
  }
  return out;
}

Matroid minor(const Matroid& m, Subset remove, Subset contract) {
  if (remove & contract) throw InputError("deleted and contracted sets overlap: " + m.ground().format(remove & contract));
  if (!is_subset(remove | contract, m.ground().full())) throw InputError("minor set outside the ground set");
  std::vector<Subset> bases = m.bases();
  int r = m.rank();
  // Highest index first, so lower indices stay valid after each re-indexing.
  for (int i = m.size() - 1; i >= 0; --i) {
    if (contains(contract, i)) {
      bool loop = std::none_of(bases.begin(), bases.end(), [i](Subset b) { return contains(b, i); });
      bases = contraction_bases(bases, i);
      if (!loop) --r;
    } else if (contains(remove, i)) {
      bool coloop = std::all_of(bases.begin(), bases.end(), [i](Subset b) { return contains(b, i); });
      bases = deletion_bases(bases, i);
      if (coloop) --r;
    } else {
      continue;
    }
    bases = reindex(bases, i);
  }
  return Matroid(m.ground().without(remove | contract), r, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground().full() & ~b);
  return Matroid(m.ground(), m.size() - m.rank(), std::move(bases));
}

Matroid matroid_from_matrix(const RatMatrix& a, FieldSpec field, const std::vector<std::string>& column_labels) {
  if (!field.is_rational()) return matroid_from_matrix(modp::reduce(a, field.characteristic), field.characteristic, column_labels);
  const int n = static_cast<int>(a.cols());
  if (n > kMaxGroundSize) throw InputError("at most 64 columns are supported");
  RatMatrix reduced = rref(a);
  IntMatrix ints = clear_denominators(reduced);
  const int r = static_cast<int>(reduced.rows());
  return from_column_test(column_labels, n, r, [&](Subset cols) { return determinant(ints.select_columns(cols)) != 0; });
}

Matroid matroid_from_matrix(const ModMatrix& a, std::uint32_t p, const std::vector<std::string>& column_labels) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  const int n = static_cast<int>(a.cols());
  if (n > kMaxGroundSize) throw InputError("at most 64 columns are supported");
  ModMatrix reduced = modp::rref(a, p);
  const int r = static_cast<int>(reduced.rows());
  return from_column_test(column_labels, n, r, [&](Subset cols) { return modp::rank(reduced.select_columns(cols), p) == r; });
}

Matroid uniform_matroid(int rank, int n) {
  if (n < 0 || n > kMaxGroundSize || rank < 0 || rank > n)
    throw InputError("invalid uniform matroid U(" + std::to_string(rank) + "," + std::to_string(n) + ")");
  return Matroid(GroundSet::range(n), rank, k_subsets(n, rank));
}

namespace {

const std::vector<std::vector<int>> kFanoLines = {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {1, 6, 7},
                                                  {2, 5, 7}, {3, 4, 7}, {4, 5, 6}};

Matroid rank3_from_lines(const std::vector<std::vector<int>>& lines) {
  std::vector<Subset> dependent;
  for (const auto& line : lines) {
    Subset s = 0;
    for (int e : line) s |= singleton(e - 1);
    dependent.push_back(s);
  }
  std::vector<Subset> bases;
  for (Subset s : k_subsets(7, 3))
    if (std::find(dependent.begin(), dependent.end(), s) == dependent.end()) bases.push_back(s);
  return Matroid(GroundSet::range(7), 3, std::move(bases));
}

}  // namespace

Matroid fano_matroid() { return rank3_from_lines(kFanoLines); }

Matroid non_fano_matroid() {
  std::vector<std::vector<int>> lines(kFanoLines.begin(), kFanoLines.end() - 1);
  return rank3_from_lines(lines);
}

Matroid named_matroid(std::string_view name) {
  if (name == "fano") return fano_matroid();
  if (name == "nonfano") return non_fano_matroid();
  int d = 0, n = 0;
  std::string s(name);
  char tail = 0;
  if (std::sscanf(s.c_str(), "uniform(%d,%d)%c", &d, &n, &tail) == 2) return uniform_matroid(d, n);
  throw InputError("unknown matroid name '" + s + "' (expected uniform(d,n), fano or nonfano)");
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  const int n = a.size();
  if (n != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return std::nullopt;
  auto degrees = [n](const Matroid& m) {
    std::vector<std::size_t> deg(n, 0);
    for (Subset s : m.bases())
      for (int e : elements(s)) ++deg[e];
    return deg;
  };
  const auto deg_a = degrees(a), deg_b = degrees(b);
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  auto image = [&](Subset s) {
    Subset out = 0;
    for (int e : elements(s)) out |= singleton(pi[e]);
    return out;
  };
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == n) {
      for (Subset s : a.bases())
        if (!b.is_basis(image(s))) return false;
      return true;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || deg_a[i] != deg_b[j]) continue;
      used[j] = true;
      pi[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (extend(extend, 0)) return pi;
  return std::nullopt;
}

bool is_loop(const Matroid& m, int i) {
  return std::none_of(m.bases().begin(), m.bases().end(), [i](Subset b) { return contains(b, i); });
}

bool is_coloop(const Matroid& m, int i) {
  return std::all_of(m.bases().begin(), m.bases().end(), [i](Subset b) { return contains(b, i); });
}

int component_count(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // i and j share a circuit exactly when some basis exchange swaps them.
  for (Subset b : m.bases())
    for (int i : elements(b))
      for (int j : elements(m.ground().full() & ~b))
        if (find(i) != find(j) && m.is_basis((b & ~singleton(i)) | singleton(j))) parent[find(i)] = find(j);
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

}  // namespace matflock
