// Copyright 2026 The goppa-orbits Authors.
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

#include "goppa/gf2poly.hpp"

#include <charconv>
#include <utility>
#include <vector>

#include "goppa/errors.hpp"

namespace goppa::gf2 {

std::uint64_t mod(u128 a, std::uint64_t f) {
  const int m = degree(f);
  if (m < 1) throw DomainError("modulus must have degree >= 1");
  const u128 wide = f;
  for (int d = degree(a); d >= m; d = degree(a)) a ^= wide << (d - m);
  return static_cast<std::uint64_t>(a);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  return mod(clmul(a, b), f);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = degree(b) == 0 ? 0 : mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

std::vector<unsigned> prime_factors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

// x^(2^k) mod f
std::uint64_t frobenius_of_x(unsigned k, std::uint64_t f) {
  std::uint64_t r = mod(u128{2}, f);
  for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, f);
  return r;
}

}  // namespace

bool is_irreducible(std::uint64_t f) {
  const int m = degree(f);
  if (m < 1) return false;
  if (m == 1) return true;
  if ((f & 1) == 0) return false;
  const std::uint64_t x = mod(u128{2}, f);
  if (frobenius_of_x(static_cast<unsigned>(m), f) != x) return false;
  for (unsigned p : prime_factors(static_cast<unsigned>(m))) {
    const std::uint64_t h = frobenius_of_x(static_cast<unsigned>(m) / p, f) ^ x;
    if (degree(gcd(f, h)) != 0) return false;
  }
  return true;
}

std::uint64_t lowest_weight_irreducible(unsigned degree) {
  if (degree < 1 || degree > kMaxPolyDegree) throw DomainError("degree out of range [1, 63]");
  const std::uint64_t top = std::uint64_t{1} << degree;
  if (degree == 1) return top;  // x itself
  for (unsigned k = 1; k < degree; ++k) {
    const std::uint64_t f = top | (std::uint64_t{1} << k) | 1;
    if (is_irreducible(f)) return f;
  }
  // Pentanomials x^m + x^a + x^b + x^c + 1 in increasing integer order.
  for (unsigned a = 3; a < degree; ++a)
    for (unsigned b = 2; b < a; ++b)
      for (unsigned c = 1; c < b; ++c) {
        const std::uint64_t f = top | (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                (std::uint64_t{1} << c) | 1;
        if (is_irreducible(f)) return f;
      }
  throw DomainError("no irreducible trinomial or pentanomial of degree " + std::to_string(degree));
}

std::string format_exponents(std::uint64_t f) {
  std::string out;
  for (int j = 63; j >= 0; --j) {
    if (((f >> j) & 1) == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

std::uint64_t parse_exponents(std::string_view text) {
  std::uint64_t f = 0;
  bool any = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned e = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || e > kMaxPolyDegree)
      throw DomainError("bad exponent list '" + std::string(text) + "'");
    const std::uint64_t bit = std::uint64_t{1} << e;
    if ((f & bit) != 0) throw DomainError("repeated exponent in '" + std::string(text) + "'");
    f |= bit;
    any = true;
    pos = end + 1;
  }
  if (!any) throw DomainError("empty exponent list");
  return f;
}

}  // namespace goppa::gf2
