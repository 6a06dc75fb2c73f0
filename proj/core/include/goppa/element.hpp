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

#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace goppa::gf2 {

/// A field element in the polynomial basis of its ambient field. Bit j of
/// `bits()` is the coefficient of t^j, so `bits()` is also the integer
/// encoding used for ordering and serialization.
///
/// Addition needs no context and is provided as an operator; everything
/// else goes through a TowerContext.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint64_t bits) : bits_(bits) {}

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool is_zero() const { return bits_ == 0; }

  constexpr Element& operator+=(Element o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend constexpr Element operator+(Element a, Element b) { return Element(a.bits_ ^ b.bits_); }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace goppa::gf2

template <>
struct std::hash<goppa::gf2::Element> {
  std::size_t operator()(goppa::gf2::Element e) const noexcept {
    return std::hash<std::uint64_t>{}(e.bits());
  }
};
