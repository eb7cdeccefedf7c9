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
#include <map>
#include <string>
#include <vector>

#include "matflock/exact.hpp"
#include "matflock/flock.hpp"
#include "matflock/frobenius_poly.hpp"
#include "matflock/matrix.hpp"
#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock {

// --- Toric varieties from rational linear spaces -----------------------------

/// The closure of the torus parametrized by the columns of A, over an
/// algebraically closed field of characteristic p. Rows of A must be a basis
/// of the saturated lattice rowspace_Q(A) ∩ Z^E.
struct ToricRep {
  IntMatrix a;
  std::uint32_t p = 2;
  std::vector<std::string> column_labels;  // default "1".."n"
};

/// Throws InputError for non-prime p, DomainError for rank-deficient or
/// unsaturated A.
void validate(const ToricRep& rep);

/// val_p(det A_B), or ∞ when the minor vanishes. Throws InputError if p is
/// not prime or B does not select d columns.
ExtInt padic_minor_valuation(const RatMatrix& a, Subset b, std::uint32_t p);

/// ν(B) = val_p(det A_B) over all d-subsets.
Valuation lindstrom_toric(const ToricRep& rep);

/// Bases of the tangent matroid of αX: the B minimizing val_p of the maximal
/// minors of A·diag(p^{-α}), computed directly from that rational matrix.
Matroid toric_matroid_at(const ToricRep& rep, const IntegerVector& alpha);

MatroidFlock flock_from_toric(const ToricRep& rep);

// --- Additive (linearized) parametrizations over GF(p) -----------------------

/// c · x_var^(p^level).
struct FrobeniusTerm {
  int var = 0;
  int level = 0;
  std::uint32_t coeff = 1;

  friend auto operator<=>(const FrobeniusTerm&, const FrobeniusTerm&) = default;
};

/// φ: K^m -> K^E, φ_i = Σ c·x_v^(p^k) with c ∈ GF(p)*. Stored normalized: for
/// every parameter the least Frobenius level among its terms is 0
/// (reparametrizing x_v ↦ x_v^p does not change the image).
class LinearizedParam {
 public:
  /// Throws InputError for a non-prime p, coefficients outside 1..p-1,
  /// unknown parameters, negative levels, duplicate (var, level) pairs, or an
  /// empty coordinate.
  LinearizedParam(std::uint32_t p, std::vector<std::string> params,
                  std::vector<std::vector<FrobeniusTerm>> coords,
                  std::vector<std::string> coord_labels = {});

  std::uint32_t p() const { return p_; }
  int parameter_count() const { return static_cast<int>(params_.size()); }
  int size() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::vector<FrobeniusTerm>>& coords() const { return coords_; }
  const std::vector<std::string>& coord_labels() const { return labels_; }

  /// The E × m matrix of Frobenius polynomials (row i = coordinate i).
  FrobeniusMatrix frobenius_matrix() const;

  friend bool operator==(const LinearizedParam&, const LinearizedParam&) = default;

 private:
  std::uint32_t p_ = 2;
  std::vector<std::string> params_;
  std::vector<std::vector<FrobeniusTerm>> coords_;  // each sorted
  std::vector<std::string> labels_;
};

/// The parametrization of αX: F^{-α_i} applied to coordinate i.
LinearizedParam linearized_shift(const LinearizedParam& param, const IntegerVector& alpha);

/// The m × E Jacobian at 0: entry (v, i) is the coefficient of the level-0
/// term of coordinate i in x_v.
ModMatrix linearized_tangent(const LinearizedParam& param);

/// dim X: the rank of the Frobenius matrix over GF(p)(F).
int generic_rank(const LinearizedParam& param);

/// T_0 X as an RREF basis: the common zeros of the level-0 parts of the
/// GF(p)[F]-linear relations among the coordinates. X is a vector group, so
/// every point is general. Coincides with the row space of
/// linearized_tangent whenever that has rank dim X; it differs when the
/// parametrization is inseparable at 0.
ModMatrix tangent_space(const LinearizedParam& param);

/// α ↦ M(T_0 αX).
MatroidFlock flock_from_linearized(const LinearizedParam& param);

/// V_α as a canonical (RREF) basis of T_0 αX, for α in a box.
struct FrobeniusFlockWindow {
  std::uint32_t p = 2;
  int size = 0;
  std::map<IntegerVector, ModMatrix> spaces;
};

/// Tabulates V_α for α ∈ [-radius, radius + 1]^E.
FrobeniusFlockWindow frobenius_window(const LinearizedParam& param, int radius);

struct FrobeniusReport {
  std::uint64_t ff1_checked = 0;
  std::uint64_t ff1_passed = 0;
  std::uint64_t ff2_checked = 0;
  std::uint64_t ff2_passed = 0;
  std::uint64_t rank_checked = 0;
  std::uint64_t rank_passed = 0;
  bool has_violation = false;
  std::string axiom;  // "FF1", "FF2" or "rank"
  IntegerVector alpha;
  int element = -1;

  bool ok() const { return !has_violation; }
};

/// (FF1) V_α / i = V_{α+e_i} \ i as row spaces over GF(p), and (FF2)
/// V_{α+𝟏} = 𝟏·V_α (entrywise F^{-1}, the identity on GF(p)), wherever both
/// sides are tabulated. Every V_α must also have the same dimension.
FrobeniusReport check_frobenius_axioms(const FrobeniusFlockWindow& window);
FrobeniusReport check_frobenius_axioms(const LinearizedParam& param, int radius);

/// Subspace minors on row-space bases: W \ i projects away coordinate i,
/// W / i keeps the vectors with w_i = 0 and then projects.
ModMatrix subspace_deletion(const ModMatrix& w, int i, std::uint32_t p);
ModMatrix subspace_contraction(const ModMatrix& w, int i, std::uint32_t p);

}  // namespace matflock
