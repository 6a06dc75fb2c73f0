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

// Alternant and Goppa codes as binary linear codes, and the transport of
// sextic Goppa codes along semi-linear Moebius maps.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "goppa/bitmatrix.hpp"
#include "goppa/mobius.hpp"
#include "goppa/polynomial.hpp"
#include "goppa/tower.hpp"

namespace goppa::codes {

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Element;
using gf2::Polynomial;
using gf2::TowerContext;
using mobius::ProjectivePoint;
using mobius::SemiLinearMap;

/// Dense matrix over F_{2^{6n}}, row-major.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// A binary linear code with canonical (reduced row echelon) generator and
/// parity-check bases. Two codes are equal iff they have the same codewords.
class BinaryCode {
 public:
  static BinaryCode from_generator(BitMatrix generator);
  static BinaryCode from_parity_check(BitMatrix parity);

  [[nodiscard]] std::size_t length() const { return generator_.cols(); }
  [[nodiscard]] std::size_t dimension() const { return generator_.rows(); }
  [[nodiscard]] const BitMatrix& generator() const { return generator_; }
  [[nodiscard]] const BitMatrix& parity() const { return parity_; }
  [[nodiscard]] bool contains(const BitVector& word) const;

  /// Image under coordinate relabelling: y[perm[i]] = x[i].
  [[nodiscard]] BinaryCode permuted(std::span<const std::uint32_t> perm) const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) { return a.generator_ == b.generator_; }

 private:
  BinaryCode(BitMatrix generator, BitMatrix parity) : generator_(std::move(generator)), parity_(std::move(parity)) {}
  BitMatrix generator_;
  BitMatrix parity_;
};

/// C(alpha) data: alpha in S, its minimal polynomial g over F_{2^n}, and the
/// supports L (ascending encoding) and L-bar = L then infinity.
struct GoppaInstance {
  Element alpha;
  Polynomial g;
  std::vector<Element> support;
  std::vector<ProjectivePoint> extended_support;
};

GoppaInstance make_goppa_instance(const TowerContext& ctx, Element alpha);

/// H_r(v, L): r x m with entries v_j alpha_j^i, i < r.
FieldMatrix alternant_parity(const TowerContext& ctx, std::span<const Element> v, std::span<const Element> support,
                             unsigned r);

/// H_r(v, L-bar) with infinity required in the last position; its column is
/// (0, ..., 0, v_m).
FieldMatrix extended_alternant_parity(const TowerContext& ctx, std::span<const Element> v,
                                      std::span<const ProjectivePoint> support, unsigned r);

/// As extended_alternant_parity, with infinity (if present) at any position.
/// Needed for reordered supports M(L-bar).
FieldMatrix projective_alternant_parity(const TowerContext& ctx, std::span<const Element> v,
                                        std::span<const ProjectivePoint> support, unsigned r);

/// v_{g, L-bar}: g(x)^{-1} at finite points, (leading coefficient)^{-1} at
/// infinity. Throws DomainError if g vanishes on the support.
std::vector<Element> goppa_weights(const TowerContext& ctx, const Polynomial& g,
                                   std::span<const ProjectivePoint> support);
std::vector<Element> goppa_weights(const TowerContext& ctx, const Polynomial& g, std::span<const Element> support);

/// The 1 x |L| row (1 / (alpha - alpha_i)).
FieldMatrix goppa_parity(const TowerContext& ctx, Element alpha, std::span<const Element> support);

/// Binary subfield subcode {x in F_2^m : H x^T = 0}.
BinaryCode subfield_subcode(const TowerContext& ctx, const FieldMatrix& h);

/// Appends the overall parity bit.
BinaryCode extend_code(const BinaryCode& code);
/// The even-weight subcode.
BinaryCode expurgate_code(const BinaryCode& code);

/// Gamma(g, L) = C(alpha) and its extension C-bar(alpha).
BinaryCode goppa_code(const TowerContext& ctx, Element alpha);
BinaryCode extended_goppa_code(const TowerContext& ctx, Element alpha);

/// (tau g)'(x) = sum_k tau(g_k) (d x + b)^k (c x + a)^{r-k}, which is
/// (c x + a)^r (tau g)(M^{-1} x). Requires (tau g)(d / c) != 0 when c != 0,
/// the condition for degree r to be preserved.
Polynomial transform_polynomial(const TowerContext& ctx, const Polynomial& g, const SemiLinearMap& map);

/// pi(i) = index in `support` of apply(map, support[i]). Throws DomainError
/// if the support is not mapped onto itself.
std::vector<std::uint32_t> induced_permutation(const TowerContext& ctx, const SemiLinearMap& map,
                                               std::span<const ProjectivePoint> support);

/// "(0 4 2)(1 3)"; fixed points omitted, "()" for the identity.
std::string format_cycles(std::span<const std::uint32_t> perm);

/// counts[w] = number of codewords of weight w. Refuses dimension > 24.
std::vector<std::uint64_t> weight_enumerator(const BinaryCode& code);

struct EquivalenceReport {
  Element alpha;
  Element beta;
  std::vector<std::uint32_t> permutation;
  bool verified = false;
  std::vector<std::uint64_t> enumerator_alpha;
  std::vector<std::uint64_t> enumerator_beta;
};

/// Builds C-bar(alpha) and C-bar(beta) for beta = apply(map, alpha) and
/// checks that the induced support permutation carries one onto the other.
EquivalenceReport check_extended_equivalence(const TowerContext& ctx, Element alpha, const SemiLinearMap& map);

}  // namespace goppa::codes
