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

// Semi-linear Moebius maps zeta -> (a zeta^{2^i} + b) / (c zeta^{2^i} + d)
// with a, b, c, d in F_{2^n}, acting on the projective line and on the set
// S of degree-6 elements, and the orbit machinery built on top of them.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "goppa/element.hpp"
#include "goppa/tower.hpp"

namespace goppa::mobius {

using gf2::Element;
using gf2::TowerContext;

/// A point of the projective line: a field element or infinity. Orders
/// finite points by encoding with infinity last.
class ProjectivePoint {
 public:
  constexpr ProjectivePoint() = default;
  constexpr explicit ProjectivePoint(Element value) : value_(value) {}
  static constexpr ProjectivePoint infinity() {
    ProjectivePoint p;
    p.infinite_ = true;
    return p;
  }

  [[nodiscard]] constexpr bool is_infinity() const { return infinite_; }
  /// Finite value; zero for infinity.
  [[nodiscard]] constexpr Element value() const { return value_; }

  friend constexpr bool operator==(ProjectivePoint, ProjectivePoint) = default;
  friend constexpr std::strong_ordering operator<=>(ProjectivePoint a, ProjectivePoint b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  Element value_{};
  bool infinite_ = false;
};

/// Dense integer code: the field encoding, or 2^{6n} for infinity.
std::uint64_t encode(const TowerContext& ctx, ProjectivePoint p);
std::string to_hex(const TowerContext& ctx, ProjectivePoint p);
/// Accepts "inf", the hex of 2^{6n}, or any field element in hex.
ProjectivePoint point_from_hex(const TowerContext& ctx, std::string_view text);

/// The support L-bar: F_{2^n} in ascending encoding, then infinity.
std::vector<ProjectivePoint> projective_line(const TowerContext& ctx);

/// An element (M, sigma^frob) of PGammaL_2(F_{2^n}). Stored normalized: the
/// first nonzero of (a, b, c, d) is 1, so == is equality in the group.
class SemiLinearMap {
 public:
  /// Validates that a..d lie in F_{2^n} with ad + bc != 0; reduces frob
  /// modulo 6n.
  static SemiLinearMap make(const TowerContext& ctx, Element a, Element b, Element c, Element d, long long frob = 0);
  static SemiLinearMap identity() { return SemiLinearMap(); }

  [[nodiscard]] Element a() const { return m_[0]; }
  [[nodiscard]] Element b() const { return m_[1]; }
  [[nodiscard]] Element c() const { return m_[2]; }
  [[nodiscard]] Element d() const { return m_[3]; }
  [[nodiscard]] unsigned frob() const { return frob_; }
  [[nodiscard]] bool is_linear() const { return frob_ == 0; }

  friend bool operator==(const SemiLinearMap&, const SemiLinearMap&) = default;

 private:
  SemiLinearMap() : m_{TowerContext::one(), Element{}, Element{}, TowerContext::one()} {}
  std::array<Element, 4> m_;
  unsigned frob_ = 0;
};

ProjectivePoint apply(const TowerContext& ctx, const SemiLinearMap& map, ProjectivePoint zeta);
/// Fast path for points that are never poles (e.g. elements of S).
Element apply(const TowerContext& ctx, const SemiLinearMap& map, Element zeta);

/// apply(compose(f, g), z) == apply(f, apply(g, z)).
SemiLinearMap compose(const TowerContext& ctx, const SemiLinearMap& f, const SemiLinearMap& g);
SemiLinearMap inverse(const TowerContext& ctx, const SemiLinearMap& f);

/// Uniform over PGL_2(F_{2^n}) x <sigma>. With `semilinear` false the
/// Frobenius exponent is 0.
SemiLinearMap random_map(const TowerContext& ctx, std::mt19937_64& rng, bool semilinear = true);

/// "a,b,c,d;i" with hex entries and decimal exponent.
std::string format_map(const TowerContext& ctx, const SemiLinearMap& map);
SemiLinearMap parse_map(const TowerContext& ctx, std::string_view text);

/// Streams affine suborbits A(beta) = {e beta + f : e != 0} and PGL-orbits
/// through their decomposition into 2^n + 1 affine suborbits:
///   O_alpha = A(alpha) u (union over gamma of A(1 / (alpha + gamma))).
/// Multiplication by e is made linear: e beta runs over a Gray code of the
/// n products (basis_j * beta), and the additive shift f over the table of
/// embedded base elements, so each orbit element costs one XOR.
class OrbitEnumerator {
 public:
  explicit OrbitEnumerator(const TowerContext& ctx) : ctx_(&ctx) {}

  [[nodiscard]] const TowerContext& ctx() const { return *ctx_; }
  /// 2^{2n} - 2^n
  [[nodiscard]] std::uint64_t affine_size() const {
    const std::uint64_t q = std::uint64_t{1} << ctx_->n();
    return q * (q - 1);
  }
  /// 2^{3n} - 2^n
  [[nodiscard]] std::uint64_t pgl_size() const { return affine_size() * ((std::uint64_t{1} << ctx_->n()) + 1); }

  /// Representatives of the partition: [0] = alpha and
  /// [1 + k] = 1 / (alpha + base_elements()[k]). alpha must not lie in F_{2^n}.
  [[nodiscard]] std::vector<Element> suborbit_representatives(Element alpha) const;

  template <class Visit>
  void for_each_affine(Element beta, Visit&& visit) const {
    const unsigned n = ctx_->n();
    const auto basis = ctx_->base_basis();
    const auto shifts = ctx_->base_elements();
    std::array<std::uint64_t, TowerContext::kMaxN> products{};
    for (unsigned j = 0; j < n; ++j) products[j] = ctx_->mul(basis[j], beta).bits();
    const std::uint64_t q = std::uint64_t{1} << n;
    std::uint64_t scaled = 0;
    for (std::uint64_t k = 1; k < q; ++k) {
      scaled ^= products[std::countr_zero(k)];
      for (Element f : shifts) visit(Element(scaled ^ f.bits()));
    }
  }

  /// Smallest element of A(beta).
  [[nodiscard]] Element affine_min(Element beta) const;

  template <class Visit>
  void for_each_pgl(Element alpha, Visit&& visit) const {
    for (Element rep : suborbit_representatives(alpha)) for_each_affine(rep, visit);
  }

  /// True iff pred holds for some element of O_alpha; stops at the first hit.
  template <class Pred>
  bool any_in_pgl(Element alpha, Pred&& pred) const {
    const unsigned n = ctx_->n();
    const auto basis = ctx_->base_basis();
    const auto shifts = ctx_->base_elements();
    const std::uint64_t q = std::uint64_t{1} << n;
    for (Element rep : suborbit_representatives(alpha)) {
      std::array<std::uint64_t, TowerContext::kMaxN> products{};
      for (unsigned j = 0; j < n; ++j) products[j] = ctx_->mul(basis[j], rep).bits();
      std::uint64_t scaled = 0;
      for (std::uint64_t k = 1; k < q; ++k) {
        scaled ^= products[std::countr_zero(k)];
        for (Element f : shifts)
          if (pred(Element(scaled ^ f.bits()))) return true;
      }
    }
    return false;
  }

  /// Smallest element of O_alpha.
  [[nodiscard]] Element pgl_min(Element alpha) const;

 private:
  const TowerContext* ctx_;
};

/// A(beta) as a list; beta must lie in S.
std::vector<Element> affine_suborbit(const TowerContext& ctx, Element beta);
/// O_alpha as a list (suborbit by suborbit); alpha must lie in S.
std::vector<Element> pgl_orbit(const TowerContext& ctx, Element alpha);

enum class Group { kPGL, kPGammaL };

/// Enc-minimal element of the orbit of alpha (alpha in S).
Element canonical_orbit_rep(const TowerContext& ctx, Element alpha, Group group);

/// Distinct canonical PGL-representatives of sigma^i(O_alpha), ascending.
std::vector<Element> galois_orbit_of_pgl_orbit(const TowerContext& ctx, Element alpha);

/// alpha and beta (both in S) lie in one PGL_2-orbit iff alpha*beta, beta,
/// alpha, 1 are linearly dependent over F_{2^n}; decided by an F_2 rank
/// computation without enumerating the orbit.
bool same_pgl_orbit(const TowerContext& ctx, Element alpha, Element beta);

/// Smallest s | 6n with sigma^s(O_alpha) = O_alpha. The Galois orbit of
/// O_alpha then has exactly s members.
unsigned galois_stabilizer_index(const TowerContext& ctx, Element alpha);

}  // namespace goppa::mobius
