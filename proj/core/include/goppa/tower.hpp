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

// The tower F_2 < F_{2^n} < F_{2^{6n}}.
//
// Every value lives in the big field F_{2^{6n}}; base-field scalars are
// always carried in embedded form, so "a in F_{2^n}" means "a is fixed by
// x -> x^{2^n}". The embedding sends the generator of F_2[x]/(modulus_base)
// to the smallest-encoded root of modulus_base in the big field.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "goppa/element.hpp"
#include "goppa/gf2poly.hpp"
#include "goppa/linearized.hpp"

namespace goppa::gf2 {

/// F_{2^k} as a level of the tower, identified by its degree k over F_2.
struct FieldLevel {
  unsigned degree = 0;
  friend bool operator==(FieldLevel, FieldLevel) = default;
};

class TowerContext {
 public:
  /// Largest supported n (6n must fit a 64-bit word with room for the
  /// modulus' leading term).
  static constexpr unsigned kMaxN = 10;

  struct Options {
    std::optional<std::uint64_t> modulus_base;
    std::optional<std::uint64_t> modulus_big;
  };

  /// Builds the tower for n >= 2 with deterministic moduli unless
  /// overridden. Overrides must be irreducible of degree n and 6n.
  static TowerContext make(unsigned n, const Options& options = {});

  [[nodiscard]] unsigned n() const { return n_; }
  /// Degree 6n of the big field over F_2.
  [[nodiscard]] unsigned degree() const { return m_; }
  [[nodiscard]] std::uint64_t modulus_base() const { return modulus_base_; }
  [[nodiscard]] std::uint64_t modulus_big() const { return modulus_big_; }
  /// 2^{6n}
  [[nodiscard]] std::uint64_t field_size() const { return std::uint64_t{1} << m_; }
  [[nodiscard]] FieldLevel base_level() const { return {n_}; }
  [[nodiscard]] FieldLevel big_level() const { return {m_}; }

  [[nodiscard]] static constexpr Element zero() { return Element{0}; }
  [[nodiscard]] static constexpr Element one() { return Element{1}; }

  [[nodiscard]] Element mul(Element a, Element b) const { return Element(reduce(clmul(a.bits(), b.bits()))); }
  [[nodiscard]] Element square(Element a) const { return mul(a, a); }
  /// Throws DomainError for zero.
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element div(Element a, Element b) const { return mul(a, inv(b)); }
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const;

  /// x^{2^i}, i taken modulo 6n.
  [[nodiscard]] Element frobenius(Element x, long long i) const;
  /// Matrix of x -> x^{2^i}, 0 <= i < 6n.
  [[nodiscard]] const LinearizedMap& frobenius_map(unsigned i) const { return frobenius_[i % m_]; }

  /// True iff x lies in F_{2^k}; k must divide 6n.
  [[nodiscard]] bool in_subfield(Element x, FieldLevel level) const;
  [[nodiscard]] bool in_base(Element x) const { return frobenius_[n_](x) == x; }

  /// Least d | 6 with x^{2^{dn}} = x.
  [[nodiscard]] unsigned degree_over_base(Element x) const;
  /// Membership in S: elements of degree exactly 6 over F_{2^n}.
  [[nodiscard]] bool in_sextic_set(Element x) const { return degree_over_base(x) == 6; }

  /// Image of the base-field element whose coordinates in F_2[x]/(modulus_base)
  /// are `coords` (bit j = coefficient of x^j).
  [[nodiscard]] Element embed(std::uint64_t coords) const;
  /// Inverse of embed on the subfield; nullopt outside it.
  [[nodiscard]] std::optional<std::uint64_t> base_coords(Element x) const;
  /// Embedded images of x^0, ..., x^{n-1}.
  [[nodiscard]] std::span<const Element> base_basis() const { return base_basis_; }
  /// All 2^n embedded base-field elements indexed by coordinates.
  [[nodiscard]] std::span<const Element> base_elements() const { return base_elements_; }
  /// The same elements sorted by big-field encoding; this is the support L.
  [[nodiscard]] std::span<const Element> base_elements_sorted() const { return base_sorted_; }
  /// Embedded generator (image of x).
  [[nodiscard]] Element base_generator() const { return base_basis_.size() > 1 ? base_basis_[1] : one(); }

  /// Uniform element of the big field.
  [[nodiscard]] Element random(std::mt19937_64& rng) const;
  /// Uniform element of the embedded base field.
  [[nodiscard]] Element random_base(std::mt19937_64& rng) const;
  /// Uniform element of S (rejection sampling).
  [[nodiscard]] Element random_sextic(std::mt19937_64& rng) const;

  /// Lowercase hex of the encoding, zero-padded to ceil(6n/4) digits.
  [[nodiscard]] std::string to_hex(Element x) const;
  [[nodiscard]] std::string to_hex(std::uint64_t encoding) const;
  /// Accepts optional "0x"; rejects values >= 2^{6n}.
  [[nodiscard]] Element from_hex(std::string_view text) const;
  [[nodiscard]] unsigned hex_width() const { return (m_ + 3) / 4; }

 private:
  TowerContext() = default;

  [[nodiscard]] std::uint64_t reduce(u128 p) const {
    for (std::uint64_t hi; (hi = static_cast<std::uint64_t>(p >> m_)) != 0;)
      p = (p & mask_) ^ clmul(hi, modulus_low_);
    return static_cast<std::uint64_t>(p);
  }

  unsigned n_ = 0;
  unsigned m_ = 0;
  std::uint64_t modulus_base_ = 0;
  std::uint64_t modulus_big_ = 0;
  std::uint64_t modulus_low_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<LinearizedMap> frobenius_;
  std::vector<Element> base_basis_;
  std::vector<Element> base_elements_;
  std::vector<Element> base_sorted_;
  std::unordered_map<std::uint64_t, std::uint64_t> coords_of_;
};

/// Relative trace from F_{2^{from}} down to F_{2^{to}}: the sum of
/// x^{2^{to * j}} for j < from/to. Throws DomainError unless
/// to | from | 6n and x lies in the `from` field.
Element trace(const TowerContext& ctx, Element x, FieldLevel from, FieldLevel to);

}  // namespace goppa::gf2
