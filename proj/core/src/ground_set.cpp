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

#include "matflock/ground_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "matflock/errors.hpp"

namespace matflock {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_integer_label(std::string_view s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(), is_digit);
}

// Compares two digit runs by numeric value without overflow.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return s;
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b);
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  if (is_integer_label(a) && is_integer_label(b)) {
    bool na = a[0] == '-', nb = b[0] == '-';
    if (na != nb) return na;
    int c = compare_digit_runs(a.substr(na), b.substr(nb));
    return na ? c > 0 : c < 0;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      int c = compare_digit_runs(a.substr(i, ei - i), b.substr(j, ej - j));
      if (c != 0) return c < 0;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGroundSize))
    throw InputError("ground set larger than 64 elements");
  std::sort(labels_.begin(), labels_.end(),
            [](const std::string& x, const std::string& y) { return natural_less(x, y); });
  for (std::size_t k = 1; k < labels_.size(); ++k)
    if (labels_[k] == labels_[k - 1]) throw InputError("duplicate ground-set label '" + labels_[k] + "'");
}

GroundSet GroundSet::range(int n) {
  std::vector<std::string> labels;
  for (int k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& x, std::string_view y) { return natural_less(x, y); });
  if (it == labels_.end() || *it != label)
    throw InputError("unknown ground-set element '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

bool GroundSet::numeric() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const std::string& s) { return is_integer_label(s) && s.size() < 18; });
}

GroundSet GroundSet::without(Subset removed) const {
  GroundSet out;
  for (int k = 0; k < size(); ++k)
    if (!contains(removed, k)) out.labels_.push_back(labels_[k]);
  return out;
}

Subset GroundSet::subset_of_labels(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) {
    Subset bit = singleton(index_of(l));
    if (s & bit) throw InputError("repeated element '" + l + "' in subset");
    s |= bit;
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int k : elements(s)) out.push_back(labels_.at(k));
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k : elements(s)) {
    if (!first) os << ',';
    os << labels_.at(k);
    first = false;
  }
  os << '}';
  return os.str();
}

Subset compress_subset(Subset s, Subset removed) {
  Subset out = 0;
  int pos = 0;
  for (int k = 0; k < kMaxGroundSize; ++k) {
    if (contains(removed, k)) continue;
    if (contains(s, k)) out |= singleton(pos);
    ++pos;
  }
  return out;
}

}  // namespace matflock
