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

#include "matflock/exact.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "matflock/errors.hpp"
#include "matflock/subset.hpp"

namespace matflock {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InputError("malformed number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw InputError("malformed number '" + std::string(whole) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int padic_valuation(const BigInt& x, std::uint32_t p) {
  if (x == 0) throw std::domain_error("p-adic valuation of zero");
  BigInt y = abs(x);
  int v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

int padic_valuation(const Rational& q, std::uint32_t p) {
  return padic_valuation(BigInt(numerator(q)), p) - padic_valuation(BigInt(denominator(q)), p);
}

std::int64_t ExtInt::value() const {
  if (!finite_) throw std::logic_error("value() of infinity");
  return value_;
}

std::string ExtInt::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.to_string(); }

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<int>& indices) {
  Subset s = 0;
  for (int i : indices) s |= singleton(i);
  return s;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Subset{0}};
  Subset s = full_set(k);
  const Subset limit = full_set(n);
  while (true) {
    out.push_back(s);
    // Gosper's hack: next integer with the same popcount.
    Subset c = s & (~s + 1);
    Subset r = s + c;
    if (r == 0 || (r & ~limit) != 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if ((s & ~limit) != 0) break;
  }
  return out;
}

}  // namespace matflock
