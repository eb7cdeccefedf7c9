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

#include "generators.hpp"
#include "helpers.hpp"
#include "matflock/discrete_convex.hpp"
#include "matflock/errors.hpp"

using namespace matflock;
using matflock::testing::u24_valuation;

namespace {

WindowFunction from(IntegerVector lo, IntegerVector hi, const std::function<std::int64_t(const IntegerVector&)>& f) {
  return WindowFunction::tabulate(std::move(lo), std::move(hi), [&](const IntegerVector& x) { return ExtInt(f(x)); });
}

}  // namespace

TEST_CASE("window functions") {
  WindowFunction f({-1, 0}, {1, 2});
  CHECK(f.point_count() == 9);
  CHECK(f({0, 0}).is_infinite());
  f.set({1, 2}, 5);
  CHECK(f({1, 2}) == ExtInt(5));
  CHECK(f({2, 2}).is_infinite());
  CHECK(f.domain() == std::vector<IntegerVector>{{1, 2}});
  CHECK_THROWS_AS(WindowFunction({1}, {0}), InputError);
  CHECK_THROWS_AS(f.set({3, 3}, 1), InputError);
}

TEST_CASE("check_lconvex") {
  const LConvexReport max2 = check_lconvex(from({-2, -2}, {2, 2}, [](const IntegerVector& x) {
    return std::max(x[0], x[1]);
  }));
  CHECK(max2.valid);
  CHECK(max2.slope == 1);
  const LConvexReport prod = check_lconvex(from({0, 0}, {2, 2}, [](const IntegerVector& x) { return x[0] * x[1]; }));
  CHECK_FALSE(prod.valid);
  CHECK(((prod.x == IntegerVector{1, 0} && prod.y == IntegerVector{0, 1}) ||
         (prod.x == IntegerVector{0, 1} && prod.y == IntegerVector{1, 0})));
  const LConvexReport c = check_lconvex(from({-1, -1, -1}, {1, 1, 1}, [](const IntegerVector&) { return 7; }));
  CHECK(c.valid);
  CHECK(c.slope == 0);
  CHECK_THROWS_AS(check_lconvex(WindowFunction({0}, {1})), InputError);
}

TEST_CASE("check_mconvex") {
  CHECK(check_mconvex(point_function(testing::zero_valuation(4, 2))).valid);
  CHECK(check_mconvex(point_function(u24_valuation())).valid);
  WindowFunction f({0, 0}, {2, 2});
  f.set({2, 0}, 0);
  f.set({0, 2}, 0);
  CHECK_FALSE(check_mconvex(f).valid);
}

TEST_CASE("fenchel_dual") {
  WindowFunction h({0, 0}, {1, 1});
  h.set({1, 0}, 0);
  h.set({0, 1}, 0);
  const WindowFunction dual = fenchel_dual(h, {-3, -3}, {3, 3});
  for (std::size_t k = 0; k < dual.point_count(); ++k) {
    const IntegerVector a = dual.point(k);
    CHECK(dual.value_at_index(k) == ExtInt(std::max(a[0], a[1])));
  }
}

TEST_CASE("the dual of a point function is g") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Valuation nu = gen::random_valuation(rng, 4, 2);
    const WindowFunction dual = fenchel_dual(point_function(nu), IntegerVector(4, -3), IntegerVector(4, 3));
    for (std::size_t k = 0; k < dual.point_count(); ++k)
      CHECK(dual.value_at_index(k) == ExtInt(g_value(nu, dual.point(k))));
  }
}

TEST_CASE("double dual restores an M-convex function on its domain") {
  const WindowFunction f = point_function(u24_valuation());
  const WindowFunction g = fenchel_dual(f, IntegerVector(4, -3), IntegerVector(4, 3));
  CHECK(check_lconvex(g).valid);
  const WindowFunction ff = fenchel_dual(g, IntegerVector(4, 0), IntegerVector(4, 1));
  for (const IntegerVector& x : f.domain()) CHECK(ff(x) == f(x));
}

TEST_CASE("lconvex_is_minimizer") {
  CHECK(lconvex_is_minimizer([](const IntegerVector& a) { return std::max(a[0], a[1]) - a[0]; }, {0, 0}));
  CHECK_FALSE(lconvex_is_minimizer([](const IntegerVector& a) { return std::max(a[0], a[1]); }, {0, 0}));
  CHECK(lconvex_is_minimizer([](const IntegerVector&) { return 3; }, {4, -1, 2}));
}
