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

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "generators.hpp"
#include "helpers.hpp"
#include "matflock/algebraic.hpp"
#include "matflock/errors.hpp"
#include "matflock/frobenius_poly.hpp"
#include "matflock/lattice.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace matflock;
using matflock::testing::family;
using matflock::testing::S;

namespace {

ToricRep example_toric(std::uint32_t p) {
  ToricRep rep;
  rep.a = IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
  rep.p = p;
  return rep;
}

ModMatrix mod_rows(const std::vector<std::vector<std::uint32_t>>& rows) { return ModMatrix::from_rows(rows); }

/// i and j are parallel: neither is a loop and {i, j} is dependent.
bool parallel(const Matroid& m, int i, int j) {
  return !is_loop(m, i - 1) && !is_loop(m, j - 1) && rank(m, S({i, j})) == 1;
}

std::vector<std::pair<int, int>> parallel_pairs(const Matroid& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i + 1; j <= m.size(); ++j)
      if (parallel(m, i, j)) out.emplace_back(i, j);
  return out;
}

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("Frobenius polynomials") {
  const FrobeniusPolynomial a(2, {1, 1});  // 1 + F
  const FrobeniusPolynomial b(2, {1, 0, 1});
  CHECK(a * a == b);  // (1 + F)^2 = 1 + F^2 in characteristic 2
  CHECK((a + a).is_zero());
  CHECK(b.divide_exact(a) == a);
  CHECK_THROWS_AS(b.divide_exact(FrobeniusPolynomial(2, {0, 0, 0, 1})), std::domain_error);
  CHECK(FrobeniusPolynomial::monomial(3, 2, 4).order_at_zero() == 4);
  CHECK(FrobeniusPolynomial(3, {0, 0, 0}).is_zero());
  const FrobeniusMatrix m = {{a, FrobeniusPolynomial::constant(2, 1)}, {b, a}};
  CHECK(rank(m) == 1);
  CHECK(determinant(m).is_zero());
  const FrobeniusMatrix id = {{FrobeniusPolynomial::constant(3, 1), FrobeniusPolynomial(3, {})},
                              {FrobeniusPolynomial(3, {}), FrobeniusPolynomial::monomial(3, 2, 1)}};
  CHECK(determinant(id) == FrobeniusPolynomial::monomial(3, 2, 1));
  CHECK(rank(id) == 2);
}

TEST_CASE("padic_minor_valuation") {
  RatMatrix id(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  CHECK(padic_minor_valuation(id, 0b11, 5) == ExtInt(0));
  const RatMatrix a = to_rat_matrix(example_toric(2).a);
  CHECK(padic_minor_valuation(a, S({1, 4}), 2) == ExtInt(1));
  CHECK(padic_minor_valuation(RatMatrix::from_rows({{1, 2}, {2, 4}}), 0b11, 2).is_infinite());
  CHECK_THROWS_AS(padic_minor_valuation(a, S({1}), 2), InputError);
  CHECK_THROWS_AS(padic_minor_valuation(a, S({1, 2}), 6), InputError);
}

TEST_CASE("lindstrom_toric") {
  const Valuation two = lindstrom_toric(example_toric(2));
  CHECK(two == testing::valuation_on(4, 2, {{S({1, 4}), 1}}));
  CHECK(lindstrom_toric(example_toric(3)) == testing::zero_valuation(4, 2));
  ToricRep id;
  id.a = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(lindstrom_toric(id) == testing::zero_valuation(3, 3));
  CHECK(support_matroid(two) == uniform_matroid(2, 4));
  ToricRep unsat;
  unsat.a = IntMatrix::from_rows({{2, 0}, {0, 2}});
  CHECK_THROWS_AS(lindstrom_toric(unsat), DomainError);
  ToricRep deficient;
  deficient.a = IntMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(lindstrom_toric(deficient), DomainError);
  ToricRep composite = example_toric(4);
  CHECK_THROWS_AS(lindstrom_toric(composite), InputError);
}

TEST_CASE("scaling a row by a p-free integer keeps the toric valuation") {
  ToricRep rep;
  rep.a = IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
  rep.p = 2;
  ToricRep scaled = rep;
  for (std::size_t c = 0; c < 4; ++c) scaled.a(1, c) *= 3;
  // The scaled rows span an unsaturated lattice, so compare minor by minor.
  const RatMatrix a = to_rat_matrix(rep.a);
  const RatMatrix s = to_rat_matrix(scaled.a);
  for (Subset b : k_subsets(4, 2)) CHECK(padic_minor_valuation(a, b, 2) == padic_minor_valuation(s, b, 2));
}

TEST_CASE("toric_matroid_at") {
  const ToricRep rep = example_toric(2);
  CHECK(toric_matroid_at(rep, {0, 0, 0, 0}).bases() == family({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(toric_matroid_at(rep, {0, 0, 0, 1}).bases() == family({{2, 4}, {3, 4}}));
  CHECK(toric_matroid_at(rep, {1, 1, 1, 1}) == toric_matroid_at(rep, {0, 0, 0, 0}));
}

TEST_CASE("flock_from_toric") {
  const ToricRep rep = example_toric(2);
  const MatroidFlock flock = flock_from_toric(rep);
  ExtractOptions options;
  CHECK(extract_valuation(flock, options).valuation == lindstrom_toric(rep));
  for (const IntegerVector& a : props::window(4, 2)) CHECK(flock.at(a) == toric_matroid_at(rep, a));
  CHECK(check_flock_axioms(flock, 3).ok());
  ToricRep id;
  id.a = IntMatrix::from_rows({{1, 0}, {0, 1}});
  const MatroidFlock free = flock_from_toric(id);
  for (const IntegerVector& a : props::window(2, 2)) CHECK(free.bases(a) == family({{1, 2}}));
}

TEST_CASE("toric flocks match the determinant oracle on random matrices") {
  gen::Rng rng(61);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 3;
    const int n = d + 1 + trial % 3;
    const auto a = gen::random_saturated_matrix(rng, d, n);
    ToricRep rep;
    rep.a = gen::to_int_matrix(a);
    rep.p = primes[trial % 3];
    CHECK(is_saturated(rep.a));
    const Valuation nu = lindstrom_toric(rep);
    for (Subset b : k_subsets(n, d)) {
      const auto want = oracle::padic_minor(a, b, rep.p);
      CHECK(nu(b) == (want ? ExtInt(*want) : ExtInt::infinity()));
    }
    CHECK(support_matroid(nu) == matroid_from_matrix(to_rat_matrix(rep.a), FieldSpec::rationals()));
    const MatroidFlock flock = flock_from_toric(rep);
    for (const IntegerVector& alpha : props::window(n, 1)) CHECK(flock.at(alpha) == toric_matroid_at(rep, alpha));
  }
}

TEST_CASE("toric column labels follow the ground-set order") {
  ToricRep rep = example_toric(2);
  rep.column_labels = {"d", "c", "b", "a"};
  const Valuation nu = lindstrom_toric(rep);
  // Columns 1 and 4 of A are now "d" and "a".
  CHECK(nu(nu.ground().subset_of_labels({"a", "d"})) == ExtInt(1));
  CHECK(nu(nu.ground().subset_of_labels({"a", "b"})) == ExtInt(0));
  const IntegerVector alpha = {1, 0, 0, 0};  // on "a", i.e. column 4
  CHECK(toric_matroid_at(rep, alpha) == flock_from_toric(rep).at(alpha));
}

TEST_CASE("LinearizedParam validation") {
  CHECK_THROWS_AS(LinearizedParam(4, {"s"}, {{{0, 0, 1}}}), InputError);
  CHECK_THROWS_AS(LinearizedParam(2, {"s"}, {{{1, 0, 1}}}), InputError);
  CHECK_THROWS_AS(LinearizedParam(3, {"s"}, {{{0, 0, 3}}}), InputError);
  CHECK_THROWS_AS(LinearizedParam(2, {"s"}, {{{0, -1, 1}}}), InputError);
  CHECK_THROWS_AS(LinearizedParam(2, {"s"}, {{{0, 1, 1}, {0, 1, 1}}}), InputError);
  CHECK_THROWS_AS(LinearizedParam(2, {"s"}, {{}}), InputError);
  // Levels are normalized per parameter.
  CHECK(LinearizedParam(2, {"s"}, {{{0, 2, 1}}, {{0, 3, 1}}}) == LinearizedParam(2, {"s"}, {{{0, 0, 1}}, {{0, 1, 1}}}));
}

TEST_CASE("linearized_shift") {
  const LinearizedParam ex = gen::example_param(2, 2);
  CHECK(linearized_shift(ex, {0, -1, -1, 0}) ==
        LinearizedParam(2, {"s", "t"}, {{{0, 0, 1}}, {{1, 0, 1}}, {{0, 1, 1}, {1, 0, 1}}, {{0, 0, 1}, {1, 1, 1}}}));
  CHECK(linearized_shift(ex, {0, -2, -2, 0}) ==
        LinearizedParam(2, {"s", "t"}, {{{0, 0, 1}}, {{1, 0, 1}}, {{0, 2, 1}, {1, 0, 1}}, {{0, 0, 1}, {1, 0, 1}}}));
  CHECK(linearized_shift(linearized_shift(ex, {1, 1, 1, 1}), {-1, -1, -1, -1}) == ex);
  CHECK(linearized_shift(ex, {1, 1, 1, 1}) == ex);
}

TEST_CASE("linearized_tangent reproduces the three tangent spaces") {
  const LinearizedParam ex = gen::example_param(2, 2);
  CHECK(linearized_tangent(ex) == mod_rows({{1, 0, 1, 1}, {0, 1, 1, 0}}));
  CHECK(linearized_tangent(linearized_shift(ex, {0, -1, -1, 0})) == mod_rows({{1, 0, 0, 1}, {0, 1, 1, 0}}));
  CHECK(linearized_tangent(linearized_shift(ex, {0, -2, -2, 0})) == mod_rows({{1, 0, 0, 1}, {0, 1, 1, 1}}));
}

TEST_CASE("the linearized flock of the example") {
  const MatroidFlock flock = flock_from_linearized(gen::example_param(2, 2));
  CHECK(parallel_pairs(flock.at({0, 0, 0, 0})) == Pairs{{1, 4}});
  CHECK(parallel_pairs(flock.at({0, -1, -1, 0})) == Pairs{{1, 4}, {2, 3}});
  CHECK(parallel_pairs(flock.at({0, -2, -2, 0})) == Pairs{{2, 3}});
  CHECK(generic_rank(gen::example_param(2, 2)) == 2);
  CHECK(check_flock_axioms(flock, 2).ok());
}

TEST_CASE("the example's extracted valuation is g on {1,4}") {
  for (std::uint32_t p : {2u, 3u})
    for (int g = 1; g <= 3; ++g) {
      const Extraction e = extract_valuation(flock_from_linearized(gen::example_param(p, g)), ExtractOptions{});
      CHECK(e.valuation == testing::valuation_on(4, 2, {{S({1, 4}), g}}));
      CHECK(e.round_trip_ok);
      if (g == 1) {
        ToricRep rep;
        rep.a = IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, static_cast<int>(p)}});
        rep.p = p;
        CHECK(lindstrom_toric(rep) == e.valuation);
      }
    }
}

TEST_CASE("Frobenius flock axioms") {
  const LinearizedParam ex = gen::example_param(2, 2);
  const FrobeniusReport r = check_frobenius_axioms(ex, 3);
  CHECK(r.ok());
  CHECK(r.ff1_checked > 0);
  CHECK(r.ff1_passed == r.ff1_checked);
  CHECK(r.ff2_passed == r.ff2_checked);
  const LinearizedParam id(3, {"s", "t"}, {{{0, 0, 1}}, {{1, 0, 1}}});
  CHECK(check_frobenius_axioms(id, 2).ok());
  FrobeniusFlockWindow w = frobenius_window(ex, 1);
  w.spaces.at({0, 0, 0, 0}) = mod_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
  const FrobeniusReport bad = check_frobenius_axioms(w);
  CHECK_FALSE(bad.ok());
  FrobeniusFlockWindow thin = frobenius_window(ex, 1);
  thin.spaces.at({0, 0, 0, 0}) = mod_rows({{1, 0, 0, 1}});
  CHECK_FALSE(check_frobenius_axioms(thin).ok());
}

TEST_CASE("subspace minors") {
  const ModMatrix w = mod_rows({{1, 0, 1}, {0, 1, 1}});
  CHECK(subspace_deletion(w, 2, 2) == mod_rows({{1, 0}, {0, 1}}));
  CHECK(subspace_contraction(w, 2, 2) == mod_rows({{1, 1}}));
}

TEST_CASE("tangent_space at an inseparable base point") {
  // (s + t, s + t + t^2) is onto K^2, but its Jacobian at 0 has rank 1.
  const LinearizedParam p(2, {"s", "t"}, {{{0, 0, 1}, {1, 0, 1}}, {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}});
  CHECK(generic_rank(p) == 2);
  CHECK(modp::rank(linearized_tangent(p), 2) == 1);
  CHECK(tangent_space(p) == mod_rows({{1, 0}, {0, 1}}));
  CHECK(flock_from_linearized(p).at({0, 0}).bases() == std::vector<Subset>{S({1, 2})});

  // The twisted example (u^8, w^2, u^8 + w^2, u + w) is cut out by
  // x_3 = x_1 + x_2 and x_4^8 = x_1 + x_2^4, so its tangent is x_1 = 0, x_3 = x_2.
  const LinearizedParam twisted = linearized_shift(gen::example_param(2, 2), {-2, -2, -2, 1});
  CHECK(modp::rank(linearized_tangent(twisted), 2) == 1);
  CHECK(tangent_space(twisted) == mod_rows({{0, 1, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("tangent_space agrees with the Jacobian when it has full rank") {
  const LinearizedParam ex = gen::example_param(2, 2);
  for (const IntegerVector& alpha : {IntegerVector{0, 0, 0, 0}, IntegerVector{0, -1, -1, 0}, IntegerVector{0, -2, -2, 0}}) {
    const LinearizedParam shifted = linearized_shift(ex, alpha);
    CHECK(tangent_space(shifted) == modp::rref(linearized_tangent(shifted), 2));
  }
}

TEST_CASE("random linearized flocks match the Frobenius determinant oracle") {
  gen::Rng rng(67);
  int used = 0;
  for (int trial = 0; trial < 200 && used < 30; ++trial) {
    const std::uint32_t p = trial % 2 == 0 ? 2 : 3;
    const int m = 2 + trial % 2;
    const int n = m + 1 + static_cast<int>(rng() % 2);
    const LinearizedParam param = gen::random_linearized(rng, p, m, n);
    if (generic_rank(param) != m) continue;
    const MatroidFlock flock = flock_from_linearized(param);
    const Extraction e = extract_valuation(flock, ExtractOptions{});
    ++used;
    // Extracted valuations are normalized to minimum 0.
    const auto phi = gen::phi_of(param);
    std::map<Subset, std::optional<std::int64_t>> want;
    std::int64_t least = std::numeric_limits<std::int64_t>::max();
    for (Subset b : k_subsets(n, m)) {
      want[b] = oracle::frobenius_minor_order(phi, b, p);
      if (want[b]) least = std::min(least, *want[b]);
    }
    for (const auto& [b, order] : want) CHECK(e.valuation(b) == (order ? ExtInt(*order - least) : ExtInt::infinity()));
    CHECK(e.round_trip_ok);
    CHECK(check_flock_axioms(flock, 2).ok());
    CHECK(check_frobenius_axioms(param, 1).ok());
    // The support matroid does not move under twisting.
    const Matroid support = support_matroid(e.valuation);
    const IntegerVector shift = {1, -1, 2, 0, 0};
    IntegerVector s(shift.begin(), shift.begin() + n);
    const Extraction shifted = extract_valuation(flock_from_linearized(linearized_shift(param, s)), ExtractOptions{});
    CHECK(support_matroid(shifted.valuation) == support);
  }
  CHECK(used >= 10);
}
