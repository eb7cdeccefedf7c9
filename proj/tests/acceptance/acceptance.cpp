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

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "helpers.hpp"
#include "matflock/algebraic.hpp"
#include "matflock/cells.hpp"
#include "matflock/discrete_convex.hpp"
#include "matflock/errors.hpp"
#include "matflock/flock.hpp"
#include "matflock/rigidity.hpp"
#include "matflock/valuation.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace matflock;
using matflock::testing::S;

namespace {

// Collects the first failure of a criterion.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void require_empty(const std::string& problem, const std::string& where) {
    if (!problem.empty()) require(false, where + ": " + problem);
  }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

std::string show(const IntegerVector& v) { return props::show(v); }

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

// Draws (n, d) with d <= 3 and d < n <= 6.
std::pair<int, int> random_shape(gen::Rng& rng, int max_n = 6) {
  const int n = gen::uniform_int(rng, 2, max_n);
  const int d = gen::uniform_int(rng, 1, std::min(3, n - 1));
  return {n, d};
}

void criterion1(Outcome& o) {
  const Valuation nu = testing::zero_valuation(2, 1);
  const MatroidFlock flock = flock_from_valuation(nu);
  for (int k = -5; k <= 5; ++k)
    for (int l = -5; l <= 5; ++l) {
      const std::vector<Subset>& b = flock.bases({k, l});
      const std::vector<Subset> want = k == l ? std::vector<Subset>{S({1}), S({2})}
                                     : k > l  ? std::vector<Subset>{S({1})}
                                              : std::vector<Subset>{S({2})};
      o.require(b == want, "wrong matroid at " + show({k, l}));
    }
  o.require(extract_valuation(flock, ExtractOptions{}).valuation == nu, "extracted valuation differs");
}

void criterion2(Outcome& o) {
  gen::Rng rng(20260101);
  int count = 0;
  for (; count < 200; ++count) {
    const auto [n, d] = random_shape(rng);
    const Valuation nu = gen::random_valuation(rng, n, d);
    if (!oracle::is_valuation(oracle::table_of(nu))) {
      o.require(false, "generator produced an invalid valuation");
      return;
    }
    const MatroidFlock flock = flock_from_valuation(nu);
    const Extraction e = extract_valuation(flock, ExtractOptions{});
    o.require(e.valuation == nu, "round trip differs for valuation #" + std::to_string(count));
    const FlockWindowReport r = check_flock_axioms(flock, 3);
    o.require(r.ok(), "flock axioms fail at radius 3 for valuation #" + std::to_string(count));
  }
  o.require(count >= 200, "too few valuations");
}

void criterion3(Outcome& o) {
  const LinearizedParam param = gen::example_param(2, 2);
  const MatroidFlock flock = flock_from_linearized(param);
  using Pairs = std::vector<std::pair<int, int>>;
  o.require(parallel_pairs(flock.at({0, 0, 0, 0})) == Pairs{{1, 4}}, "alpha = 0 should have only 1 || 4");
  o.require(parallel_pairs(flock.at({0, -1, -1, 0})) == Pairs{{1, 4}, {2, 3}}, "alpha = -e2-e3 should have 1||4, 2||3");
  o.require(parallel_pairs(flock.at({0, -2, -2, 0})) == Pairs{{2, 3}}, "alpha = -2e2-2e3 should have only 2 || 3");
  const std::vector<std::pair<IntegerVector, std::vector<std::vector<std::uint32_t>>>> tangents = {
      {{0, 0, 0, 0}, {{1, 0, 1, 1}, {0, 1, 1, 0}}},
      {{0, -1, -1, 0}, {{1, 0, 0, 1}, {0, 1, 1, 0}}},
      {{0, -2, -2, 0}, {{1, 0, 0, 1}, {0, 1, 1, 1}}}};
  for (const auto& [alpha, rows] : tangents)
    o.require(linearized_tangent(linearized_shift(param, alpha)) == ModMatrix::from_rows(rows),
              "tangent matrix differs at " + show(alpha));
  const Extraction e = extract_valuation(flock, ExtractOptions{});
  const Valuation want = testing::valuation_on(4, 2, {{S({1, 4}), 2}});
  o.require(e.valuation == want, "extracted valuation should be 2 on {1,4} and 0 elsewhere");
  std::vector<IntegerVector> vertices;
  for (const CellSummary& c : cell_complex(enumerate_leaders(e.valuation, std::nullopt, 0), e.valuation))
    if (c.dimension == 0) vertices.push_back(c.leader.representative);
  o.require(vertices == std::vector<IntegerVector>{{0, -2, -2, 0}, {0, 0, 0, 0}},
            "zero-dimensional cells should be 0 and -2e2-2e3");
}

void criterion4(Outcome& o) {
  gen::Rng rng(4242);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int count = 0; count < 100; ++count) {
    const int d = gen::uniform_int(rng, 1, 3);
    const int n = gen::uniform_int(rng, d + 1, 6);
    const auto a = gen::random_saturated_matrix(rng, d, n);
    ToricRep rep;
    rep.a = gen::to_int_matrix(a);
    rep.p = primes[count % 3];
    const Valuation lindstrom = lindstrom_toric(rep);
    for (Subset b : k_subsets(n, d)) {
      const auto want = oracle::padic_minor(a, b, rep.p);
      o.require(lindstrom(b) == (want ? ExtInt(*want) : ExtInt::infinity()),
                "lindstrom_toric disagrees with the determinant oracle");
    }
    const Extraction e = extract_valuation(flock_from_toric(rep), ExtractOptions{});
    o.require(e.valuation == lindstrom, "extracted toric valuation differs for matrix #" + std::to_string(count));
  }
}

bool trivial_by_solve(const Valuation& nu) {
  const auto& values = nu.finite_values();
  RatMatrix a(values.size(), nu.size());
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (int i : elements(values[r].first)) a(r, i) = 1;
    rhs.push_back(values[r].second);
  }
  return solve(a, rhs).has_value();
}

void criterion5(Outcome& o) {
  using Kind = RigidityVerdict::Kind;
  o.require(rigidity_certificate(fano_matroid()).kind == Kind::kRigid, "Fano should be rigid");
  for (int n = 2; n <= 6; ++n) {
    o.require(rigidity_certificate(uniform_matroid(1, n)).kind == Kind::kRigid,
              "U(1," + std::to_string(n) + ") should be rigid");
    o.require(rigidity_certificate(uniform_matroid(n - 1, n)).kind == Kind::kRigid,
              "U(" + std::to_string(n - 1) + "," + std::to_string(n) + ") should be rigid");
  }
  const RigidityVerdict u24 = rigidity_certificate(uniform_matroid(2, 4));
  o.require(u24.kind == Kind::kNotRigid && u24.witness.has_value(), "U(2,4) should be not rigid with a witness");
  if (!u24.witness) return;
  const Valuation& w = *u24.witness;
  o.require(oracle::is_valuation(oracle::table_of(w)), "witness violates the valuation axioms");
  o.require(support_matroid(w) == uniform_matroid(2, 4), "witness support should be U(2,4)");
  o.require(!trivial_by_solve(w), "witness is trivial");
}

void criterion6(Outcome& o) {
  o.require(find_isomorphism(lazarson(2, LazarsonVariant::kFull), fano_matroid()).has_value(),
            "M_2 should be the Fano matroid");
  o.require(find_isomorphism(lazarson(2, LazarsonVariant::kMinus), non_fano_matroid()).has_value(),
            "M_2^- should be the non-Fano matroid");
  for (int n = 2; n <= 6; ++n) {
    // Independent check of the y-column determinant.
    const IntMatrix a = lazarson_matrix(n);
    std::vector<std::vector<std::int64_t>> y(n + 1, std::vector<std::int64_t>(n + 1));
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) y[r][c] = static_cast<std::int64_t>(a(r, n + 2 + c));
    const std::int64_t expected = n % 2 == 0 ? n : -n;
    o.require(oracle::laplace_det(y) == expected, "det of the y-columns differs for n = " + std::to_string(n));
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const LazarsonCharReport r = lazarson_char_check(n, p);
      o.require(r.determinant == BigInt(expected) && r.formula_holds, "determinant report differs");
      o.require(r.divisible == (n % static_cast<int>(p) == 0), "divisibility report differs");
    }
  }
}

void criterion7(Outcome& o) {
  gen::Rng rng(777);
  std::vector<Valuation> tests = {testing::u24_valuation(), testing::zero_valuation(4, 2),
                                  testing::zero_valuation(2, 1), testing::valuation_on(4, 2, {{S({1, 4}), 2}})};
  for (int k = 0; k < 30; ++k) {
    const auto [n, d] = random_shape(rng, 4);
    tests.push_back(gen::random_valuation(rng, n, d));
  }
  for (const Valuation& nu : tests) {
    const int n = nu.size();
    const IntegerVector lo(n, -3), hi(n, 3);
    const WindowFunction dual = fenchel_dual(point_function(nu), lo, hi);
    for (std::size_t k = 0; k < dual.point_count(); ++k)
      o.require(dual.value_at_index(k) == ExtInt(g_value(nu, dual.point(k))), "fenchel dual differs from g");
    const MatroidFlock flock = flock_from_valuation(nu);
    const WindowFunction gm =
        WindowFunction::tabulate(lo, hi, [&](const IntegerVector& a) { return ExtInt(g_M(flock, a)); });
    const LConvexReport r = check_lconvex(gm);
    o.require(r.valid, "g_M is not submodular");
    o.require(r.slope == nu.rank(), "g_M does not have slope d");
  }
  // Local optimality against exhaustive minimization.
  for (int k = 0; k < 50; ++k) {
    const auto [n, d] = random_shape(rng, 4);
    const Valuation nu1 = gen::random_valuation(rng, n, d);
    const Valuation nu2 = gen::random_valuation(rng, n, d);
    const Subset b1 = nu1.finite_values()[rng() % nu1.finite_values().size()].first;
    const Subset b2 = nu2.finite_values()[rng() % nu2.finite_values().size()].first;
    const IntegerOracle g = [&](const IntegerVector& a) {
      return g_value(nu1, a) - subset_sum(a, b1) + g_value(nu2, a) - subset_sum(a, b2);
    };
    for (int trial = 0; trial < 10; ++trial) {
      IntegerVector x(n);
      for (auto& v : x) v = gen::uniform_int(rng, -2, 2);
      std::int64_t best = g(x);
      for (const IntegerVector& off : props::window(n, 3)) best = std::min(best, g(x + off));
      o.require(lconvex_is_minimizer(g, x) == (g(x) == best),
                "local optimality disagrees with exhaustive minimization at " + show(x));
    }
  }
}

void criterion8(Outcome& o) {
  gen::Rng rng(888);
  std::vector<std::pair<std::string, MatroidFlock>> flocks;
  std::vector<std::pair<std::size_t, Valuation>> with_valuation;
  for (int k = 0; k < 12; ++k) {
    const auto [n, d] = random_shape(rng, 5);
    const Valuation nu = gen::random_valuation(rng, n, d);
    with_valuation.emplace_back(flocks.size(), nu);
    flocks.emplace_back("valuation #" + std::to_string(k), flock_from_valuation(nu));
  }
  const std::uint32_t primes[] = {2, 3, 5};
  for (int k = 0; k < 6; ++k) {
    const int d = 1 + k % 2;
    const auto a = gen::random_saturated_matrix(rng, d, d + 2);
    ToricRep rep;
    rep.a = gen::to_int_matrix(a);
    rep.p = primes[k % 3];
    with_valuation.emplace_back(flocks.size(), lindstrom_toric(rep));
    flocks.emplace_back("toric #" + std::to_string(k), flock_from_toric(rep));
  }
  for (std::uint32_t p : {2u, 3u}) {
    const LinearizedParam param = gen::example_param(p, 2);
    with_valuation.emplace_back(flocks.size(), extract_valuation(flock_from_linearized(param), {}).valuation);
    flocks.emplace_back("linearized p=" + std::to_string(p), flock_from_linearized(param));
  }
  for (const auto& [name, flock] : flocks) {
    o.require(check_flock_axioms(flock, 3).ok(), name + ": flock axioms fail at radius 3");
    o.require_empty(props::check_set_minor(flock, 2), name);
    o.require_empty(props::check_triangle(flock, 3, 300, rng), name);
    o.require_empty(props::check_rank_monotone(flock, 3, 300, rng), name);
    o.require_empty(props::check_step(flock, 2), name);
    o.require_empty(props::check_walk(flock, 2), name);
  }
  for (const auto& [index, nu] : with_valuation)
    o.require_empty(props::check_support(flocks[index].second, nu, 2), flocks[index].first);
  const LinearizedParam ex = gen::example_param(2, 2);
  o.require(check_frobenius_axioms(ex, 3).ok(), "Frobenius axioms fail for the example at radius 3");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-element flock reproduction", 1, criterion1},
      {2, "valuation -> flock -> valuation round trip", 60, criterion2},
      {3, "linearized example p=2, g=2", 5, criterion3},
      {4, "toric flock valuation equals val_p(det A_B)", 120, criterion4},
      {5, "rigidity certificates", 30, criterion5},
      {6, "Lazarson matroids and determinants", 10, criterion6},
      {7, "discrete convexity suite", 60, criterion7},
      {8, "flock property suites", 120, criterion8},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds)
      outcome.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    if (outcome.failure().empty()) {
      std::cout << "PASS criterion " << c.id << ": " << c.name << " (" << timing << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << c.id << ": " << c.name << " (" << timing << "): " << outcome.failure()
                << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
