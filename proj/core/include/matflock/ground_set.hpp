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

#include <string>
#include <string_view>
#include <vector>

#include "matflock/subset.hpp"

namespace matflock {

/// Natural order on element labels: runs of digits compare numerically, so
/// "x2" < "x10" and "9" < "10".
bool natural_less(std::string_view a, std::string_view b);

/// The ground set E: distinct labels kept in canonical (natural) order. Every
/// subset in this library is a bit field over positions in that order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// E = {1, ..., n}.
  static GroundSet range(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  Subset full() const { return full_set(size()); }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws InputError for an unknown label.
  int index_of(std::string_view label) const;

  /// True when every label is a decimal integer (serialized as JSON numbers).
  bool numeric() const;

  /// The ground set E - removed, order preserved.
  GroundSet without(Subset removed) const;

  Subset subset_of_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  /// "{1,2,4}"-style rendering for diagnostics.
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Maps a subset of E that avoids `removed` onto positions in E - removed.
Subset compress_subset(Subset s, Subset removed);

}  // namespace matflock
