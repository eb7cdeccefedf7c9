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

#include "matflock/rigidity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

std::size_t variable_index(const std::vector<Subset>& variables, Subset b) {
  return static_cast<std::size_t>(std::lower_bound(variables.begin(), variables.end(), b) - variables.begin());
}

// Integer vector proportional to q (positive multiple), divided by its content.
std::vector<BigInt> primitive_integer(const std::vector<Rational>& q) {
  BigInt l = 1;
  for (const auto& x : q) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : q) {
    out.push_back(BigInt(numerator(x)) * (l / BigInt(denominator(x))));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// w shifted so that its minimum is 0, then divided by the content.
std::vector<BigInt> normalized_direction(const std::vector<Rational>& w) {
  auto v = primitive_integer(w);
  if (v.empty()) return v;
  const BigInt lo = *std::min_element(v.begin(), v.end());
  BigInt g = 0;
  for (auto& x : v) {
    x -= lo;
    g = boost::multiprecision::gcd(g, x);
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

RatMatrix ConstraintSystem::coefficient_matrix() const {
  RatMatrix a(equations.size(), variables.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (Subset b : equations[r].lhs) a(r, variable_index(variables, b)) += 1;
    for (Subset b : equations[r].rhs) a(r, variable_index(variables, b)) -= 1;
  }
  return a;
}

bool ConstraintSystem::satisfied_by(const Valuation& nu) const {
  return std::all_of(equations.begin(), equations.end(), [&](const ExchangeEquation& e) {
    return nu(e.lhs[0]) + nu(e.lhs[1]) == nu(e.rhs[0]) + nu(e.rhs[1]);
  });
}

ConstraintSystem dw_constraints(const Matroid& m) {
  ConstraintSystem system;
  system.variables = m.bases();
  const int d = m.rank();
  if (d < 2) return system;
  const Subset full = m.ground().full();
  using Key = std::pair<std::pair<Subset, Subset>, std::pair<Subset, Subset>>;
  std::set<Key> seen;
  auto ordered = [](Subset x, Subset y) { return x < y ? std::make_pair(x, y) : std::make_pair(y, x); };
  for (Subset f : k_subsets(m.size(), d - 2)) {
    const auto rest = elements(full & ~f);
    for (std::size_t ia = 0; ia < rest.size(); ++ia)
      for (std::size_t ib = ia + 1; ib < rest.size(); ++ib) {
        const int a = rest[ia], b = rest[ib];
        if (m.is_basis(f | singleton(a) | singleton(b))) continue;
        for (std::size_t ic = 0; ic < rest.size(); ++ic)
          for (std::size_t id = ic + 1; id < rest.size(); ++id) {
            const int c = rest[ic], dd = rest[id];
            if (c == a || c == b || dd == a || dd == b) continue;
            const Subset ac = f | singleton(a) | singleton(c), bd = f | singleton(b) | singleton(dd);
            const Subset ad = f | singleton(a) | singleton(dd), bc = f | singleton(b) | singleton(c);
            if (!m.is_basis(ac) || !m.is_basis(bd) || !m.is_basis(ad) || !m.is_basis(bc)) continue;
            auto left = ordered(ac, bd), right = ordered(ad, bc);
            if (right < left) std::swap(left, right);
            if (!seen.emplace(left, right).second) continue;
            system.equations.push_back({{left.first, left.second}, {right.first, right.second}});
          }
      }
  }
  return system;
}

std::string to_string(RigidityVerdict::Kind kind) {
  switch (kind) {
    case RigidityVerdict::Kind::kRigid: return "rigid";
    case RigidityVerdict::Kind::kNotRigid: return "not-rigid";
    case RigidityVerdict::Kind::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

RigidityVerdict rigidity_certificate(const Matroid& m) {
  RigidityVerdict verdict;
  const ConstraintSystem system = dw_constraints(m);
  const std::size_t nb = system.variables.size();
  std::vector<std::vector<Rational>> solutions;
  if (system.equations.empty()) {
    for (std::size_t k = 0; k < nb; ++k) {
      std::vector<Rational> e(nb, Rational(0));
      e[k] = 1;
      solutions.push_back(std::move(e));
    }
  } else {
    solutions = nullspace(system.coefficient_matrix());
  }
  // Trivial valuations B ↦ e_B^T α: spanned by the element incidence rows.
  RatMatrix incidence(m.size(), nb);
  for (std::size_t k = 0; k < nb; ++k)
    for (int e : elements(system.variables[k])) incidence(e, k) = 1;
  const RatMatrix t = rref(incidence);
  verdict.solution_dimension = static_cast<int>(solutions.size());
  verdict.trivial_dimension = static_cast<int>(t.rows());
  if (verdict.solution_dimension == verdict.trivial_dimension) {
    verdict.kind = RigidityVerdict::Kind::kRigid;
    return verdict;
  }

  // Orthogonal projection onto T^⊥: w = s - Tᵀ (T Tᵀ)⁻¹ T s.
  const std::size_t tr = t.rows();
  RatMatrix gram(tr, tr);
  for (std::size_t i = 0; i < tr; ++i)
    for (std::size_t j = 0; j < tr; ++j)
      for (std::size_t k = 0; k < nb; ++k) gram(i, j) += t(i, k) * t(j, k);
  auto project = [&](const std::vector<Rational>& s) {
    std::vector<Rational> ts(tr, Rational(0));
    for (std::size_t i = 0; i < tr; ++i)
      for (std::size_t k = 0; k < nb; ++k) ts[i] += t(i, k) * s[k];
    const auto coef = solve(gram, ts);
    std::vector<Rational> w = s;
    for (std::size_t i = 0; i < tr; ++i)
      for (std::size_t k = 0; k < nb; ++k) w[k] -= (*coef)[i] * t(i, k);
    return w;
  };
  std::vector<std::vector<Rational>> directions;
  for (const auto& s : solutions) {
    auto w = project(s);
    if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x != 0; })) directions.push_back(std::move(w));
  }
  // Candidates: each direction, its negative, then pairwise sums and
  // differences.
  std::vector<std::vector<Rational>> candidates;
  for (const auto& w : directions) {
    candidates.push_back(w);
    std::vector<Rational> neg = w;
    for (auto& x : neg) x = -x;
    candidates.push_back(std::move(neg));
  }
  for (std::size_t i = 0; i < directions.size(); ++i)
    for (std::size_t j = i + 1; j < directions.size(); ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Rational> w(nb);
          for (std::size_t k = 0; k < nb; ++k) w[k] = si * directions[i][k] + sj * directions[j][k];
          candidates.push_back(std::move(w));
        }
  verdict.direction = directions.empty() ? std::vector<Rational>{} : directions.front();
  for (const auto& w : candidates) {
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) continue;
    const auto v = normalized_direction(w);
    std::map<Subset, std::int64_t> values;
    bool fits = true;
    for (std::size_t k = 0; k < nb && fits; ++k) {
      fits = v[k] <= std::numeric_limits<std::int64_t>::max();
      if (fits) values[system.variables[k]] = v[k].convert_to<std::int64_t>();
    }
    if (!fits) continue;
    Valuation nu(m.ground(), m.rank(), values);
    if (!check_valuation_axioms(nu).valid()) continue;
    if (is_trivial(nu).trivial) continue;
    verdict.kind = RigidityVerdict::Kind::kNotRigid;
    verdict.direction = w;
    verdict.witness = std::move(nu);
    return verdict;
  }
  verdict.kind = RigidityVerdict::Kind::kInconclusive;
  return verdict;
}

IntMatrix lazarson_matrix(int n) {
  if (n < 2) throw InputError("Lazarson matroids need n >= 2");
  const int rows = n + 1;
  IntMatrix a(rows, 2 * n + 3);
  for (int i = 0; i < rows; ++i) {
    a(i, i) = 1;
    a(i, rows) = 1;
    for (int j = 0; j < rows; ++j) a(i, rows + 1 + j) = i == j ? 0 : 1;
  }
  return a;
}

std::vector<std::string> lazarson_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("z");
  for (int i = 0; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  return labels;
}

namespace {

Subset y_set(const GroundSet& ground, int n) {
  Subset s = 0;
  for (int i = 0; i <= n; ++i) s |= singleton(ground.index_of("y" + std::to_string(i)));
  return s;
}

}  // namespace

Matroid lazarson(int n, LazarsonVariant variant) {
  if (n < 2) throw InputError("Lazarson matroids need n >= 2");
  if (2 * n + 3 > kMaxGroundSize) throw InputError("Lazarson matroid too large for a 64-element ground set");
  Matroid minus = matroid_from_matrix(to_rat_matrix(lazarson_matrix(n)), FieldSpec::rationals(), lazarson_labels(n));
  if (variant == LazarsonVariant::kMinus) return minus;
  const Subset ys = y_set(minus.ground(), n);
  std::vector<Subset> bases;
  for (Subset b : minus.bases())
    if (b != ys) bases.push_back(b);
  return Matroid(minus.ground(), minus.rank(), std::move(bases));
}

std::vector<Subset> central_bases(int n) {
  const Matroid m = lazarson(n, LazarsonVariant::kFull);
  const GroundSet& ground = m.ground();
  std::vector<int> x(n + 1), y(n + 1);
  for (int i = 0; i <= n; ++i) {
    x[i] = ground.index_of("x" + std::to_string(i));
    y[i] = ground.index_of("y" + std::to_string(i));
  }
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << (n + 1)); ++s) {
    if (cardinality(s) <= 2) continue;
    Subset b = 0;
    for (int i = 0; i <= n; ++i) b |= singleton(contains(s, i) ? y[i] : x[i]);
    if (m.is_basis(b)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LazarsonCharReport lazarson_char_check(int n, std::uint32_t p) {
  if (n < 2) throw InputError("Lazarson matroids need n >= 2");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  LazarsonCharReport report;
  report.n = n;
  report.p = p;
  const IntMatrix a = lazarson_matrix(n);
  Subset ycols = 0;
  for (int i = 0; i <= n; ++i) ycols |= singleton(n + 2 + i);
  report.determinant = determinant(a.select_columns(ycols));
  report.expected = n % 2 == 0 ? BigInt(n) : BigInt(-n);
  report.formula_holds = report.determinant == report.expected;
  report.divisible = report.determinant % p == 0;
  report.p_divides_n = n % p == 0;
  return report;
}

}  // namespace matflock
