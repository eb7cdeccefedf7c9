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

#include "matflock/algebraic.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "matflock/errors.hpp"
#include "matflock/lattice.hpp"

namespace matflock {
namespace {

std::vector<std::string> default_labels(std::size_t n, const std::vector<std::string>& given) {
  if (given.empty()) {
    std::vector<std::string> out;
    for (std::size_t c = 1; c <= n; ++c) out.push_back(std::to_string(c));
    return out;
  }
  if (given.size() != n)
    throw InputError("expected " + std::to_string(n) + " labels, got " + std::to_string(given.size()));
  return given;
}

// position[c] = index of column c in the canonical ground set.
std::vector<int> column_positions(const GroundSet& ground, const std::vector<std::string>& labels) {
  std::vector<int> position;
  for (const auto& l : labels) position.push_back(ground.index_of(l));
  return position;
}

Subset to_ground(Subset columns, const std::vector<int>& position) {
  Subset out = 0;
  for (int c : elements(columns)) out |= singleton(position[c]);
  return out;
}

void require_length(const GroundSet& ground, const IntegerVector& alpha) {
  if (static_cast<int>(alpha.size()) != ground.size())
    throw InputError("vector has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(ground.size()));
}

}  // namespace

void validate(const ToricRep& rep) {
  if (!is_prime(rep.p)) throw InputError(std::to_string(rep.p) + " is not prime");
  if (rep.a.cols() > static_cast<std::size_t>(kMaxGroundSize)) throw InputError("at most 64 columns are supported");
  default_labels(rep.a.cols(), rep.column_labels);
  if (rank(rep.a) != static_cast<int>(rep.a.rows())) throw DomainError("A does not have full row rank");
  if (!is_saturated(rep.a))
    throw DomainError("the rows of A do not generate a saturated lattice (an elementary divisor exceeds 1)");
}

ExtInt padic_minor_valuation(const RatMatrix& a, Subset b, std::uint32_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (cardinality(b) != static_cast<int>(a.rows()) || !is_subset(b, full_set(static_cast<int>(a.cols()))))
    throw InputError("minor must select " + std::to_string(a.rows()) + " columns");
  const Rational det = determinant(a.select_columns(b));
  if (det == 0) return ExtInt::infinity();
  return padic_valuation(det, p);
}

Valuation lindstrom_toric(const ToricRep& rep) {
  validate(rep);
  const auto labels = default_labels(rep.a.cols(), rep.column_labels);
  GroundSet ground(labels);
  const auto position = column_positions(ground, labels);
  const int n = static_cast<int>(rep.a.cols()), d = static_cast<int>(rep.a.rows());
  std::map<Subset, std::int64_t> values;
  for (Subset cols : k_subsets(n, d)) {
    const BigInt det = determinant(rep.a.select_columns(cols));
    if (det != 0) values[to_ground(cols, position)] = padic_valuation(det, rep.p);
  }
  return Valuation(std::move(ground), d, values);
}

Matroid toric_matroid_at(const ToricRep& rep, const IntegerVector& alpha) {
  validate(rep);
  const auto labels = default_labels(rep.a.cols(), rep.column_labels);
  GroundSet ground(labels);
  require_length(ground, alpha);
  const auto position = column_positions(ground, labels);
  const int n = static_cast<int>(rep.a.cols()), d = static_cast<int>(rep.a.rows());
  // A' = A · diag(p^{-α}), with α read through the column labels.
  RatMatrix scaled = to_rat_matrix(rep.a);
  for (int c = 0; c < n; ++c) {
    const std::int64_t e = alpha[position[c]];
    Rational factor = 1;
    const Rational base = e > 0 ? Rational(1, rep.p) : Rational(rep.p);
    for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) factor *= base;
    for (int r = 0; r < d; ++r) scaled(r, c) *= factor;
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Subset> bases;
  for (Subset cols : k_subsets(n, d)) {
    const ExtInt v = padic_minor_valuation(scaled, cols, rep.p);
    if (!v.is_finite()) continue;
    if (v.value() < best) {
      best = v.value();
      bases.clear();
    }
    if (v.value() == best) bases.push_back(to_ground(cols, position));
  }
  return Matroid(std::move(ground), d, std::move(bases));
}

MatroidFlock flock_from_toric(const ToricRep& rep) {
  validate(rep);
  const auto labels = default_labels(rep.a.cols(), rep.column_labels);
  GroundSet ground(labels);
  const auto position = column_positions(ground, labels);
  const int n = static_cast<int>(rep.a.cols()), d = static_cast<int>(rep.a.rows());
  // det(A·diag(p^{-α}))_B = det(A_B)·p^{-e_B^T α}: the minors' valuations are
  // computed once and shifted per α.
  std::vector<std::pair<Subset, std::int64_t>> minors;
  for (Subset cols : k_subsets(n, d)) {
    const BigInt det = determinant(rep.a.select_columns(cols));
    if (det != 0) minors.emplace_back(to_ground(cols, position), padic_valuation(det, rep.p));
  }
  auto evaluate = [minors](const IntegerVector& alpha) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<Subset> bases;
    for (const auto& [b, v] : minors) {
      const std::int64_t w = v - subset_sum(alpha, b);
      if (w < best) {
        best = w;
        bases.clear();
      }
      if (w == best) bases.push_back(b);
    }
    return bases;
  };
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
  for (const auto& [b, v] : minors) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const int cutoff = static_cast<int>(std::min<std::int64_t>(hi - lo + 1, 1 << 20));
  return MatroidFlock(std::move(ground), d, MatroidFlock::Source::kToric, std::move(evaluate), cutoff);
}

LinearizedParam::LinearizedParam(std::uint32_t p, std::vector<std::string> params,
                                 std::vector<std::vector<FrobeniusTerm>> coords, std::vector<std::string> coord_labels)
    : p_(p), params_(std::move(params)), coords_(std::move(coords)) {
  if (!is_prime(p_)) throw InputError(std::to_string(p_) + " is not prime");
  if (coords_.size() > static_cast<std::size_t>(kMaxGroundSize)) throw InputError("at most 64 coordinates are supported");
  labels_ = default_labels(coords_.size(), coord_labels);
  GroundSet check(labels_);  // rejects duplicate labels
  const int m = static_cast<int>(params_.size());
  std::vector<int> min_level(m, std::numeric_limits<int>::max());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    auto& terms = coords_[i];
    if (terms.empty()) throw InputError("coordinate " + labels_[i] + " has no terms");
    std::set<std::pair<int, int>> seen;
    for (const auto& t : terms) {
      if (t.var < 0 || t.var >= m) throw InputError("coordinate " + labels_[i] + " uses an unknown parameter");
      if (t.level < 0) throw InputError("coordinate " + labels_[i] + " has a negative Frobenius exponent");
      if (t.coeff == 0 || t.coeff >= p_)
        throw InputError("coefficient " + std::to_string(t.coeff) + " is not a nonzero element of GF(" +
                         std::to_string(p_) + ")");
      if (!seen.emplace(t.var, t.level).second)
        throw InputError("coordinate " + labels_[i] + " repeats the term " + params_[t.var] + "^(p^" +
                         std::to_string(t.level) + ")");
      min_level[t.var] = std::min(min_level[t.var], t.level);
    }
  }
  for (auto& terms : coords_) {
    for (auto& t : terms) t.level -= min_level[t.var];
    std::sort(terms.begin(), terms.end());
  }
}

FrobeniusMatrix LinearizedParam::frobenius_matrix() const {
  FrobeniusMatrix out(coords_.size(), std::vector<FrobeniusPolynomial>(params_.size(), FrobeniusPolynomial(p_, {})));
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (const auto& t : coords_[i])
      out[i][t.var] = out[i][t.var] + FrobeniusPolynomial::monomial(p_, t.coeff, t.level);
  return out;
}

LinearizedParam linearized_shift(const LinearizedParam& param, const IntegerVector& alpha) {
  if (static_cast<int>(alpha.size()) != param.size())
    throw InputError("vector has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(param.size()));
  // F^{-α_i} on coordinate i lowers its levels by α_i; lifting every level by
  // max α first keeps them nonnegative, and the constructor renormalizes.
  std::int64_t lift = 0;
  for (auto a : alpha) lift = std::max(lift, a);
  auto coords = param.coords();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (auto& t : coords[i]) {
      const std::int64_t level = t.level + lift - alpha[i];
      if (level > std::numeric_limits<int>::max()) throw DomainError("Frobenius level overflow");
      t.level = static_cast<int>(level);
    }
  return LinearizedParam(param.p(), param.params(), std::move(coords), param.coord_labels());
}

ModMatrix linearized_tangent(const LinearizedParam& param) {
  ModMatrix t(param.parameter_count(), param.size(), 0);
  for (int i = 0; i < param.size(); ++i)
    for (const auto& term : param.coords()[i])
      if (term.level == 0) t(term.var, i) = term.coeff;
  return t;
}

int generic_rank(const LinearizedParam& param) { return rank(param.frobenius_matrix()); }

namespace {

// Basis of {x : a x = 0} over GF(p), one row per free column of rref(a).
ModMatrix modp_nullspace(const ModMatrix& a, std::size_t cols, std::uint32_t p) {
  const ModMatrix red = modp::rref(a, p);
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t c = 0;
    while (red(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  ModMatrix out(cols - pivots.size(), cols, 0);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    out(row, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(row, pivots[r]) = (p - red(r, f)) % p;
    ++row;
  }
  return out;
}

}  // namespace

ModMatrix tangent_space(const LinearizedParam& param) {
  const std::uint32_t p = param.p();
  const std::size_t n = static_cast<std::size_t>(param.size()), m = static_cast<std::size_t>(param.parameter_count());
  const FrobeniusPolynomial zero(p, {});
  FrobeniusMatrix a = param.frobenius_matrix();
  FrobeniusMatrix w(n, std::vector<FrobeniusPolynomial>(n, zero));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = FrobeniusPolynomial::constant(p, 1);
  auto subtract = [&](std::size_t target, std::size_t source, const FrobeniusPolynomial& q) {
    for (std::size_t c = 0; c < m; ++c) a[target][c] = a[target][c] - q * a[source][c];
    for (std::size_t c = 0; c < n; ++c) w[target][c] = w[target][c] - q * w[source][c];
  };
  // Euclidean row reduction with unimodular row operations recorded in w, so
  // the rows of w against zero rows of a span the relation module and stay
  // independent at F = 0.
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (!a[i][c].is_zero() && (best == n || a[i][c].degree() < a[best][c].degree())) best = i;
      if (best == n) break;
      std::swap(a[best], a[r]);
      std::swap(w[best], w[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a[i][c].is_zero()) continue;
        subtract(i, r, a[i][c].divide(a[r][c]).first);
        if (!a[i][c].is_zero()) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  ModMatrix relations(n - r, n, 0);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) relations(i - r, c) = w[i][c].coefficient(0);
  return modp::rref(modp_nullspace(relations, n, p), p);
}

MatroidFlock flock_from_linearized(const LinearizedParam& param) {
  const int d = generic_rank(param);
  GroundSet ground(param.coord_labels());
  const auto position = column_positions(ground, param.coord_labels());
  auto evaluate = [param, position](const IntegerVector& alpha) {
    IntegerVector by_coord(alpha.size());
    for (std::size_t c = 0; c < position.size(); ++c) by_coord[c] = alpha[position[c]];
    return matroid_from_matrix(tangent_space(linearized_shift(param, by_coord)), param.p(), param.coord_labels()).bases();
  };
  return MatroidFlock(std::move(ground), d, MatroidFlock::Source::kLinearized, std::move(evaluate));
}

FrobeniusFlockWindow frobenius_window(const LinearizedParam& param, int radius) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  FrobeniusFlockWindow window;
  window.p = param.p();
  window.size = param.size();
  const int n = param.size();
  IntegerVector alpha(n, -radius);
  while (true) {
    window.spaces.emplace(alpha, tangent_space(linearized_shift(param, alpha)));
    int k = n - 1;
    for (; k >= 0; --k) {
      if (alpha[k] < radius + 1) {
        ++alpha[k];
        break;
      }
      alpha[k] = -radius;
    }
    if (k < 0) break;
  }
  return window;
}

ModMatrix subspace_deletion(const ModMatrix& w, int i, std::uint32_t p) {
  ModMatrix out(w.rows(), w.cols() - 1);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0, k = 0; c < w.cols(); ++c)
      if (static_cast<int>(c) != i) out(r, k++) = w(r, c);
  return modp::rref(std::move(out), p);
}

ModMatrix subspace_contraction(const ModMatrix& w, int i, std::uint32_t p) {
  ModMatrix a = w;
  const std::size_t ci = static_cast<std::size_t>(i);
  std::size_t pivot = a.rows();
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, ci) != 0) {
      pivot = r;
      break;
    }
  if (pivot != a.rows()) {
    const std::uint64_t inv = modp::inverse(a(pivot, ci), p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot || a(r, ci) == 0) continue;
      const std::uint64_t f = a(r, ci) * inv % p;
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = static_cast<std::uint32_t>((a(r, c) + (p - f) * a(pivot, c)) % p);
    }
  }
  ModMatrix out(a.rows() - (pivot != a.rows() ? 1 : 0), a.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
    if (r == pivot) continue;
    for (std::size_t c = 0, k = 0; c < a.cols(); ++c)
      if (c != ci) out(rr, k++) = a(r, c);
    ++rr;
  }
  return modp::rref(std::move(out), p);
}

FrobeniusReport check_frobenius_axioms(const FrobeniusFlockWindow& window) {
  FrobeniusReport report;
  if (window.spaces.empty()) return report;
  const int n = window.size;
  const IntegerVector zero(n, 0);
  auto anchor = window.spaces.find(zero);
  const std::size_t dim = (anchor != window.spaces.end() ? anchor->second : window.spaces.begin()->second).rows();
  auto fail = [&](const char* axiom, const IntegerVector& alpha, int element) {
    report.has_violation = true;
    report.axiom = axiom;
    report.alpha = alpha;
    report.element = element;
  };
  for (const auto& [alpha, v] : window.spaces) {
    ++report.rank_checked;
    if (v.rows() != dim) {
      fail("rank", alpha, -1);
      return report;
    }
    ++report.rank_passed;
    for (int i = 0; i < n; ++i) {
      IntegerVector up = alpha;
      ++up[i];
      auto it = window.spaces.find(up);
      if (it == window.spaces.end()) continue;
      ++report.ff1_checked;
      if (subspace_contraction(v, i, window.p) != subspace_deletion(it->second, i, window.p)) {
        fail("FF1", alpha, i);
        return report;
      }
      ++report.ff1_passed;
    }
    // F^{-1} fixes GF(p), so 𝟏·V_α = V_α entrywise.
    auto it = window.spaces.find(alpha + ones_vector(n));
    if (it != window.spaces.end()) {
      ++report.ff2_checked;
      if (it->second != v) {
        fail("FF2", alpha, -1);
        return report;
      }
      ++report.ff2_passed;
    }
  }
  return report;
}

FrobeniusReport check_frobenius_axioms(const LinearizedParam& param, int radius) {
  return check_frobenius_axioms(frobenius_window(param, radius));
}

}  // namespace matflock
