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

// Brute-force reference implementations used to cross-check the library.
// They deliberately avoid the library's algorithms and work straight from
// the definitions on small inputs.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "matflock/matroid.hpp"
#include "matflock/valuation.hpp"

namespace matflock::oracle {

inline std::vector<Subset> all_subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  return out;
}

/// r(J) straight from the basis list.
inline int rank_of(const std::vector<Subset>& bases, Subset j) {
  int best = 0;
  for (Subset b : bases) best = std::max(best, std::popcount(b & j));
  return best;
}

/// Bases of M \ del / con on E minus both sets, in the original indexing:
/// B is a basis iff |B| = r(E - del) - r(con) and r(B ∪ con) = r(E - del).
inline std::vector<Subset> minor_bases(const std::vector<Subset>& bases, int n, Subset del, Subset con) {
  const Subset rest = ((Subset{1} << n) - 1) & ~del & ~con;
  const int top = rank_of(bases, rest | con);
  const int k = top - rank_of(bases, con);
  std::vector<Subset> out;
  for (Subset b = 0; b < (Subset{1} << n); ++b) {
    if ((b & ~rest) != 0 || std::popcount(b) != k) continue;
    if (rank_of(bases, b | con) == top && rank_of(bases, b) == k) out.push_back(b);
  }
  return out;
}

/// Re-indexes a basis list on E - removed to positions 0..n-|removed|-1.
inline std::vector<Subset> compress(const std::vector<Subset>& bases, int n, Subset removed) {
  std::vector<Subset> out;
  for (Subset b : bases) {
    Subset c = 0;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      if ((removed >> i) & 1U) continue;
      if ((b >> i) & 1U) c |= Subset{1} << pos;
      ++pos;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Symmetric basis exchange, checked over every (B, B', i).
inline bool is_matroid(const std::vector<Subset>& bases) {
  if (bases.empty()) return false;
  auto has = [&](Subset s) { return std::find(bases.begin(), bases.end(), s) != bases.end(); };
  for (Subset b : bases)
    for (Subset bp : bases)
      for (Subset di = b & ~bp; di != 0; di &= di - 1) {
        const Subset i = di & (~di + 1);
        bool found = false;
        for (Subset dj = bp & ~b; dj != 0 && !found; dj &= dj - 1) {
          const Subset j = dj & (~dj + 1);
          found = has((b & ~i) | j) && has((bp & ~j) | i);
        }
        if (!found) return false;
      }
  return true;
}

/// ν as a dense table over all d-subsets; nullopt is ∞.
using Table = std::map<Subset, std::optional<std::int64_t>>;

inline Table table_of(const Valuation& nu) {
  Table t;
  for (Subset b : all_subsets_of_size(nu.size(), nu.rank())) {
    const ExtInt v = nu(b);
    t[b] = v.is_finite() ? std::optional<std::int64_t>(v.value()) : std::nullopt;
  }
  return t;
}

/// (V1) and (V2) from the definition, with ∞ + x = ∞.
inline bool is_valuation(const Table& t) {
  auto val = [&](Subset s) -> std::optional<std::int64_t> {
    auto it = t.find(s);
    return it == t.end() ? std::nullopt : it->second;
  };
  bool any = false;
  for (const auto& [b, v] : t) any = any || v.has_value();
  if (!any) return false;
  for (const auto& [b, vb] : t) {
    if (!vb) continue;
    for (const auto& [bp, vbp] : t) {
      if (!vbp) continue;
      for (Subset di = b & ~bp; di != 0; di &= di - 1) {
        const Subset i = di & (~di + 1);
        bool found = false;
        for (Subset dj = bp & ~b; dj != 0 && !found; dj &= dj - 1) {
          const Subset j = dj & (~dj + 1);
          const auto x = val((b & ~i) | j);
          const auto y = val((bp & ~j) | i);
          found = x && y && *vb + *vbp >= *x + *y;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// g(α) = max e_B^T α - ν(B), and its argmax, by enumeration.
inline std::int64_t g_of(const Table& t, const IntegerVector& alpha) {
  std::optional<std::int64_t> best;
  for (const auto& [b, v] : t) {
    if (!v) continue;
    std::int64_t s = -*v;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if ((b >> i) & 1U) s += alpha[i];
    if (!best || s > *best) best = s;
  }
  return *best;
}

inline std::vector<Subset> argmax_of(const Table& t, const IntegerVector& alpha) {
  const std::int64_t g = g_of(t, alpha);
  std::vector<Subset> out;
  for (const auto& [b, v] : t) {
    if (!v) continue;
    std::int64_t s = -*v;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if ((b >> i) & 1U) s += alpha[i];
    if (s == g) out.push_back(b);
  }
  return out;
}

/// Determinant of a small integer matrix by Laplace expansion.
inline std::int64_t laplace_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    const std::int64_t term = m[0][c] * laplace_det(sub);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

/// val_p(det A_B) of the columns of A in B, or nullopt when the minor is 0.
inline std::optional<std::int64_t> padic_minor(const std::vector<std::vector<std::int64_t>>& a, Subset b,
                                               std::int64_t p) {
  std::vector<std::vector<std::int64_t>> sub;
  for (const auto& row : a) {
    std::vector<std::int64_t> r;
    for (std::size_t c = 0; c < row.size(); ++c)
      if ((b >> c) & 1U) r.push_back(row[c]);
    sub.push_back(r);
  }
  std::int64_t det = laplace_det(sub);
  if (det == 0) return std::nullopt;
  std::int64_t v = 0;
  while (det % p == 0) {
    det /= p;
    ++v;
  }
  return v;
}

/// Polynomials over GF(p) in F as dense coefficient vectors (index = power).
using Poly = std::vector<std::int64_t>;

inline Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_trim(out);
}

inline Poly poly_add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (out[i] + a[i]) % p;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  return poly_trim(out);
}

inline Poly poly_neg(const Poly& a, std::int64_t p) {
  Poly out = a;
  for (auto& c : out) c = (p - c) % p;
  return poly_trim(out);
}

inline Poly poly_det(const std::vector<std::vector<Poly>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return poly_trim(m[0][0]);
  Poly total;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    Poly term = poly_mul(m[0][c], poly_det(sub, p), p);
    total = poly_add(total, c % 2 == 0 ? term : poly_neg(term, p), p);
  }
  return total;
}

/// For an additive parametrization with as many parameters as its dimension,
/// the flock valuation is ν(B) = ord_F det Φ_B, where Φ_B collects the
/// coordinates in B as polynomials in F. `phi[i][v]` is coordinate i in
/// parameter v.
inline std::optional<std::int64_t> frobenius_minor_order(const std::vector<std::vector<Poly>>& phi, Subset b,
                                                         std::int64_t p) {
  std::vector<std::vector<Poly>> sub;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if ((b >> i) & 1U) sub.push_back(phi[i]);
  const Poly det = poly_det(sub, p);
  if (det.empty()) return std::nullopt;
  std::int64_t k = 0;
  while (det[k] == 0) ++k;
  return k;
}

}  // namespace matflock::oracle
