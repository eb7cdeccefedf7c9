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

#include "matflock/discrete_convex.hpp"

#include <algorithm>
#include <limits>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

constexpr std::size_t kMaxWindowPoints = 50'000'000;

std::int64_t dot(const IntegerVector& a, const IntegerVector& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

WindowFunction::WindowFunction(IntegerVector lo, IntegerVector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw InputError("window bounds have different lengths");
  std::size_t count = 1;
  for (std::size_t k = 0; k < lo_.size(); ++k) {
    if (lo_[k] > hi_[k]) throw InputError("empty window: lo exceeds hi in coordinate " + std::to_string(k));
    const auto side = static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    if (count > kMaxWindowPoints / side) throw InputError("window has too many points");
    count *= side;
  }
  values_.assign(count, ExtInt::infinity());
}

WindowFunction WindowFunction::tabulate(IntegerVector lo, IntegerVector hi,
                                        const std::function<ExtInt(const IntegerVector&)>& fn) {
  WindowFunction w(std::move(lo), std::move(hi));
  for (std::size_t idx = 0; idx < w.values_.size(); ++idx) w.values_[idx] = fn(w.point(idx));
  return w;
}

bool WindowFunction::in_box(const IntegerVector& x) const {
  if (x.size() != lo_.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] < lo_[k] || x[k] > hi_[k]) return false;
  return true;
}

std::size_t WindowFunction::index_of(const IntegerVector& x) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    idx = idx * static_cast<std::size_t>(hi_[k] - lo_[k] + 1) + static_cast<std::size_t>(x[k] - lo_[k]);
  return idx;
}

ExtInt WindowFunction::operator()(const IntegerVector& x) const {
  if (!in_box(x)) return ExtInt::infinity();
  return values_[index_of(x)];
}

void WindowFunction::set(const IntegerVector& x, ExtInt value) {
  if (!in_box(x)) throw InputError("point outside the window");
  values_[index_of(x)] = value;
}

IntegerVector WindowFunction::point(std::size_t index) const {
  IntegerVector x(lo_.size());
  for (std::size_t k = lo_.size(); k-- > 0;) {
    const auto side = static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    x[k] = lo_[k] + static_cast<std::int64_t>(index % side);
    index /= side;
  }
  return x;
}

std::vector<IntegerVector> WindowFunction::domain() const {
  std::vector<IntegerVector> out;
  for (std::size_t idx = 0; idx < values_.size(); ++idx)
    if (values_[idx].is_finite()) out.push_back(point(idx));
  return out;
}

WindowFunction point_function(const Valuation& nu) {
  const int n = nu.size();
  WindowFunction f(IntegerVector(n, 0), IntegerVector(n, 1));
  for (const auto& [b, v] : nu.finite_values()) f.set(indicator_vector(n, b), v);
  return f;
}

LConvexReport check_lconvex(const WindowFunction& g) {
  LConvexReport report;
  const std::size_t count = g.point_count();
  bool any_finite = false;
  for (std::size_t idx = 0; idx < count && !any_finite; ++idx) any_finite = g.value_at_index(idx).is_finite();
  if (!any_finite) throw InputError("L-convexity check on a function with empty domain");

  const int n = g.dimension();
  // Comparable pairs satisfy submodularity with equality and are not counted.
  for (std::size_t a = 0; a < count; ++a) {
    const IntegerVector x = g.point(a);
    const ExtInt gx = g.value_at_index(a);
    if (gx.is_infinite()) continue;
    for (std::size_t b = a + 1; b < count; ++b) {
      const ExtInt gy = g.value_at_index(b);
      if (gy.is_infinite()) continue;
      const IntegerVector y = g.point(b);
      bool x_le = true, y_le = true;
      for (int k = 0; k < n; ++k) {
        x_le = x_le && x[k] <= y[k];
        y_le = y_le && y[k] <= x[k];
      }
      if (x_le || y_le) continue;
      ++report.pairs_checked;
      const ExtInt rhs = g(join(x, y)) + g(meet(x, y));
      if (rhs.is_infinite() || gx + gy < rhs) {
        report.x = x;
        report.y = y;
        return report;
      }
    }
  }
  const IntegerVector ones = ones_vector(n);
  for (std::size_t a = 0; a < count; ++a) {
    const IntegerVector x = g.point(a);
    const IntegerVector x1 = x + ones;
    if (!g.in_box(x1)) {
      ++report.shifts_skipped;
      continue;
    }
    ++report.shifts_checked;
    const ExtInt gx = g.value_at_index(a), gx1 = g(x1);
    if (gx.is_infinite() && gx1.is_infinite()) continue;
    bool ok = gx.is_finite() && gx1.is_finite();
    if (ok) {
      const std::int64_t r = gx1.value() - gx.value();
      if (!report.slope) report.slope = r;
      ok = *report.slope == r;
    }
    if (!ok) {
      report.slope.reset();
      report.x = x;
      report.y.clear();
      return report;
    }
  }
  report.valid = true;
  return report;
}

MConvexReport check_mconvex(const WindowFunction& f) {
  MConvexReport report;
  const std::vector<IntegerVector> dom = f.domain();
  if (dom.empty()) throw InputError("M-convexity check on a function with empty domain");
  const int n = f.dimension();
  for (const auto& x : dom) {
    const std::int64_t fx = f(x).value();
    for (const auto& y : dom) {
      if (x == y) continue;
      ++report.pairs_checked;
      const ExtInt lhs = fx + f(y).value();
      for (int i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (x[j] >= y[j]) continue;
          IntegerVector x2 = x, y2 = y;
          --x2[i];
          ++x2[j];
          ++y2[i];
          --y2[j];
          const ExtInt rhs = f(x2) + f(y2);
          found = rhs.is_finite() && lhs >= rhs;
        }
        if (!found) {
          report.x = x;
          report.y = y;
          report.i = i;
          return report;
        }
      }
    }
  }
  report.valid = true;
  return report;
}

WindowFunction fenchel_dual(const WindowFunction& h, IntegerVector lo, IntegerVector hi) {
  const std::vector<IntegerVector> dom = h.domain();
  if (dom.empty()) throw InputError("Fenchel dual of a function with empty domain");
  std::vector<std::int64_t> values;
  values.reserve(dom.size());
  for (const auto& y : dom) values.push_back(h(y).value());
  if (lo.size() != static_cast<std::size_t>(h.dimension())) throw InputError("dual box has the wrong dimension");
  return WindowFunction::tabulate(std::move(lo), std::move(hi), [&](const IntegerVector& x) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t k = 0; k < dom.size(); ++k) best = std::max(best, dot(x, dom[k]) - values[k]);
    return ExtInt(best);
  });
}

bool lconvex_is_minimizer(const IntegerOracle& g, const IntegerVector& x) {
  const int n = static_cast<int>(x.size());
  if (n >= 31) throw InputError("local optimality test is limited to 30 coordinates");
  const std::int64_t gx = g(x);
  const Subset all = full_set(n);
  for (Subset s = 1; s <= all && s != 0; ++s) {
    if (g(x + indicator_vector(n, s)) < gx) return false;
    if (s == all) break;
  }
  return g(x + ones_vector(n)) == gx;
}

}  // namespace matflock
