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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goppa/element.hpp"

namespace goppa::gf2 {

/// An affine F_2-linear map x -> A x + offset on an m-dimensional space of
/// field elements (m <= 64). Column j of A is the image of t^j.
class LinearizedMap {
 public:
  LinearizedMap() = default;
  explicit LinearizedMap(std::vector<std::uint64_t> columns, Element offset = Element{});

  static LinearizedMap identity(unsigned dim);
  static LinearizedMap zero(unsigned dim);

  [[nodiscard]] unsigned dim() const { return static_cast<unsigned>(columns_.size()); }
  [[nodiscard]] std::span<const std::uint64_t> columns() const { return columns_; }
  [[nodiscard]] Element offset() const { return offset_; }

  /// The linear part only.
  [[nodiscard]] Element apply_linear(Element x) const {
    std::uint64_t acc = 0;
    for (std::uint64_t b = x.bits(); b != 0; b &= b - 1) acc ^= columns_[std::countr_zero(b)];
    return Element(acc);
  }
  [[nodiscard]] Element operator()(Element x) const { return apply_linear(x) + offset_; }

  /// (this o inner)(x) = this(inner(x)).
  [[nodiscard]] LinearizedMap compose(const LinearizedMap& inner) const;

  /// Pointwise sum (x -> f(x) + g(x)).
  friend LinearizedMap operator+(const LinearizedMap& f, const LinearizedMap& g);

  [[nodiscard]] LinearizedMap with_offset(Element offset) const;

  /// Rank of the linear part.
  [[nodiscard]] unsigned rank() const;

  friend bool operator==(const LinearizedMap&, const LinearizedMap&) = default;

 private:
  std::vector<std::uint64_t> columns_;
  Element offset_{};
};

/// Solution set of an affine F_2-linear equation: either empty or a coset
/// particular + span(kernel_basis).
struct AffineSolutionSet {
  std::optional<Element> particular;
  std::vector<Element> kernel_basis;

  [[nodiscard]] bool empty() const { return !particular.has_value(); }
  /// 0 or 2^dim(kernel); saturates at 2^63 (never reached for dim <= 63).
  [[nodiscard]] std::uint64_t count() const;
  /// All solutions, ascending. Refuses kernels of dimension > 26.
  [[nodiscard]] std::vector<Element> elements() const;
  [[nodiscard]] bool contains(Element x) const;
};

/// Rank over F_2 of a family of at most 64-bit vectors.
unsigned rank_of(std::span<const std::uint64_t> vectors);

/// All x with L(x) = b, by Gaussian elimination over F_2.
AffineSolutionSet solve_affine_linearized(const LinearizedMap& map, Element rhs);

}  // namespace goppa::gf2
