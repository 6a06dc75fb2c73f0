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

// Polynomials over F_2 packed into machine words: bit j is the coefficient
// of x^j. Degrees are limited to 63 so that a modulus, including its leading
// term, fits in a uint64_t.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#if defined(__PCLMUL__)
#include <emmintrin.h>
#include <wmmintrin.h>
#endif

namespace goppa::gf2 {

__extension__ typedef unsigned __int128 u128;

inline constexpr unsigned kMaxPolyDegree = 63;

/// Carry-less product of two 64-bit polynomials.
inline u128 clmul(std::uint64_t a, std::uint64_t b) {
#if defined(__PCLMUL__)
  const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
  const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
  const auto hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
  return (static_cast<u128>(hi) << 64) | lo;
#else
  u128 r = 0;
  const u128 wide = a;
  for (; b != 0; b &= b - 1) r ^= wide << std::countr_zero(b);
  return r;
#endif
}

/// Degree of a nonzero polynomial; -1 for the zero polynomial.
constexpr int degree(std::uint64_t f) { return f == 0 ? -1 : 63 - std::countl_zero(f); }

constexpr int degree(u128 f) {
  const auto hi = static_cast<std::uint64_t>(f >> 64);
  if (hi != 0) return 64 + degree(hi);
  return degree(static_cast<std::uint64_t>(f));
}

constexpr int weight(std::uint64_t f) { return std::popcount(f); }

/// Remainder of `a` modulo `f` (deg f >= 1), by schoolbook long division.
std::uint64_t mod(u128 a, std::uint64_t f);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Rabin's irreducibility test.
bool is_irreducible(std::uint64_t f);

/// The irreducible polynomial of the given degree with the fewest nonzero
/// terms, ties broken by the smallest integer encoding.
std::uint64_t lowest_weight_irreducible(unsigned degree);

/// "30,1,0" style exponent list, highest exponent first.
std::string format_exponents(std::uint64_t f);

/// Parses an exponent list; order and whitespace are irrelevant, repeated
/// exponents are rejected.
std::uint64_t parse_exponents(std::string_view text);

}  // namespace goppa::gf2
