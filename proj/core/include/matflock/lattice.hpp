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

#include <vector>

#include "matflock/exact.hpp"
#include "matflock/matrix.hpp"

namespace matflock {

/// Smith normal form of an integer matrix A: unimodular U, V with
/// U·A·V = diag(s_1, ..., s_r, 0, ...) and s_1 | s_2 | ... | s_r, s_i > 0.
/// Only V⁻¹ is tracked, since row spaces are what callers need.
struct SmithForm {
  std::vector<BigInt> divisors;  // s_1..s_r (nonzero elementary divisors)
  IntMatrix v_inverse;           // cols × cols, unimodular
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of a full-row-rank integer matrix: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix a);

/// True when the rows of `a` span rowspace_Q(a) ∩ Z^n, i.e. every elementary
/// divisor is 1.
bool is_saturated(const IntMatrix& a);

/// An integer basis (in Hermite normal form) of rowspace_Q(b) ∩ Z^n. Throws
/// DomainError if b is not of full row rank.
IntMatrix saturate_lattice(const RatMatrix& b);

}  // namespace matflock
