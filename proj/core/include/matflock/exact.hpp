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

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace matflock {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "12", "-3", "1/2" or "-7/4" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical decimal form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

bool is_prime(std::uint64_t n);

/// Exponent of p in x. Requires x != 0 and p prime.
int padic_valuation(const BigInt& x, std::uint32_t p);

/// Exponent of p in q (may be negative). Requires q != 0.
int padic_valuation(const Rational& q, std::uint32_t p);

/// An element of Z ∪ {+∞}. Infinity compares greater than every integer and
/// absorbs addition.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of Z ⊂ Z∪{∞}

  static constexpr ExtInt infinity() {
    ExtInt x;
    x.finite_ = false;
    return x;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  /// Throws std::logic_error on infinity.
  std::int64_t value() const;

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (!a.finite_ || !b.finite_) {
      if (a.finite_ == b.finite_) return std::strong_ordering::equal;
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool finite_ = true;
};

std::ostream& operator<<(std::ostream& os, ExtInt x);

}  // namespace matflock
