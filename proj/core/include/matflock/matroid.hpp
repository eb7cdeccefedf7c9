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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matflock/ground_set.hpp"
#include "matflock/matrix.hpp"
#include "matflock/subset.hpp"

namespace matflock {

/// A finite matroid given by its explicit basis family.
///
/// Bases are stored sorted by numeric bit-field value and deduplicated, so two
/// matroids on the same ground set are equal exactly when their basis sets
/// are. Construction validates shape (every basis a rank-subset of E) but not
/// the exchange axioms; use check_basis_axioms for that.
class Matroid {
 public:
  Matroid() = default;
  Matroid(GroundSet ground, int rank, std::vector<Subset> bases);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }

  bool is_basis(Subset s) const;

  /// Bases in lexicographic order of their element lists.
  std::vector<Subset> bases_lex() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  GroundSet ground_;
  int rank_ = 0;
  std::vector<Subset> bases_;
};

struct BasisCheck {
  enum class Kind { kValid, kEmpty, kNoExchange };
  Kind kind = Kind::kValid;
  // For kNoExchange: no j in B' - B makes both B - i + j and B' - j + i bases.
  Subset b = 0;
  Subset b_prime = 0;
  int i = -1;

  bool valid() const { return kind == Kind::kValid; }
};

/// Checks (B1) nonemptiness and (B2) symmetric exchange. Throws InputError if
/// a listed set has the wrong size or elements outside E.
BasisCheck check_basis_axioms(const GroundSet& ground, int rank,
                              const std::vector<Subset>& bases);

/// max |J ∩ B| over bases B.
int rank(const Matroid& m, Subset j);

/// r(J) + r(E - J) - r(E).
int connectivity(const Matroid& m, Subset j);

/// M \ remove / contract, on E - (remove ∪ contract). Throws InputError when
/// the two sets overlap.
Matroid minor(const Matroid& m, Subset remove, Subset contract);

Matroid dual(const Matroid& m);

/// Basis families of single-element minors, kept on the original indexing of
/// E (element i simply never appears). Used on hot paths where re-indexing
/// the ground set would dominate.
std::vector<Subset> contraction_bases(const std::vector<Subset>& bases, int i);
std::vector<Subset> deletion_bases(const std::vector<Subset>& bases, int i);

/// The linear matroid of the columns of `a` over `field`. Column c carries
/// `column_labels[c]` (default "1".."n"); the ground set is re-sorted into
/// canonical order.
Matroid matroid_from_matrix(const RatMatrix& a, FieldSpec field,
                            const std::vector<std::string>& column_labels = {});
Matroid matroid_from_matrix(const ModMatrix& a, std::uint32_t p,
                            const std::vector<std::string>& column_labels = {});

Matroid uniform_matroid(int rank, int n);
Matroid fano_matroid();
Matroid non_fano_matroid();

/// "uniform(d,n)", "fano" or "nonfano". Throws InputError otherwise.
Matroid named_matroid(std::string_view name);

/// A bijection pi on positions with {pi(B) : B basis of a} = bases of b, or
/// nullopt. Exhaustive over permutations; intended for n <= 10.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

/// Is element i a loop (in no basis) / coloop (in every basis)?
bool is_loop(const Matroid& m, int i);
bool is_coloop(const Matroid& m, int i);

/// Number of connected components (coloops and loops count as their own).
int component_count(const Matroid& m);

}  // namespace matflock
