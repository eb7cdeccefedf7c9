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
#include <string>
#include <vector>

#include "matflock/exact.hpp"
#include "matflock/matrix.hpp"
#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock {

/// ν(lhs[0]) + ν(lhs[1]) = ν(rhs[0]) + ν(rhs[1]), i.e.
/// ν(F+a+c) + ν(F+b+d) = ν(F+a+d) + ν(F+b+c) for a non-basis F+a+b.
struct ExchangeEquation {
  Subset lhs[2] = {0, 0};
  Subset rhs[2] = {0, 0};

  friend bool operator==(const ExchangeEquation&, const ExchangeEquation&) = default;
};

struct ConstraintSystem {
  std::vector<Subset> variables;  // bases of M, sorted
  std::vector<ExchangeEquation> equations;

  /// Row per equation, column per variable, entries in {-1, 0, 1}.
  RatMatrix coefficient_matrix() const;

  /// Whether `nu` (finite on every variable) satisfies every equation.
  bool satisfied_by(const Valuation& nu) const;
};

/// Every equation forced on valuations with support M, deduplicated up to the
/// symmetries a<->b, c<->d and swapping sides. Empty when rank < 2.
ConstraintSystem dw_constraints(const Matroid& m);

struct RigidityVerdict {
  enum class Kind { kRigid, kNotRigid, kInconclusive };
  Kind kind = Kind::kInconclusive;
  int solution_dimension = 0;  // dim of the constraint solution space
  int trivial_dimension = 0;   // dim of {B ↦ e_B^T α}
  std::optional<Valuation> witness;  // kNotRigid
  std::vector<Rational> direction;   // kNotRigid / kInconclusive, per basis
};

std::string to_string(RigidityVerdict::Kind kind);

/// Rigid when the solutions of dw_constraints are exactly the trivial
/// valuations. Otherwise tries a bounded set of integral directions outside
/// the trivial space as valuations with support M.
RigidityVerdict rigidity_certificate(const Matroid& m);

// --- Lazarson matroids -------------------------------------------------------

enum class LazarsonVariant { kMinus, kFull };

/// The (n+1) × (2n+3) integer matrix [I | 𝟏 | J - I] with columns
/// x_0..x_n, z, y_0..y_n.
IntMatrix lazarson_matrix(int n);
std::vector<std::string> lazarson_labels(int n);

/// M_n^- (the linear matroid over Q) or M_n (M_n^- without {y_0..y_n}).
/// Throws InputError for n < 2.
Matroid lazarson(int n, LazarsonVariant variant);

/// Bases {x_i : i ∉ I} ∪ {y_i : i ∈ I} of M_n with |I| > 2.
std::vector<Subset> central_bases(int n);

struct LazarsonCharReport {
  int n = 0;
  std::uint32_t p = 0;
  BigInt determinant;  // det of the y-columns
  BigInt expected;     // n·(-1)^n
  bool formula_holds = false;
  bool divisible = false;  // p | det
  bool p_divides_n = false;
};

LazarsonCharReport lazarson_char_check(int n, std::uint32_t p);

}  // namespace matflock
