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

#include <initializer_list>
#include <span>
#include <vector>

#include "goppa/element.hpp"
#include "goppa/tower.hpp"

namespace goppa::gf2 {

/// Univariate polynomial with coefficients in the big field, ascending
/// degree, no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);
  Polynomial(std::initializer_list<Element> coeffs) : Polynomial(std::vector<Element>(coeffs)) {}

  static Polynomial constant(Element c) { return Polynomial({c}); }
  /// c1 x + c0
  static Polynomial linear(Element c1, Element c0) { return Polynomial({c0, c1}); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Element> coeffs() const { return coeffs_; }
  [[nodiscard]] Element coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Element{}; }
  [[nodiscard]] Element leading() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }
  [[nodiscard]] bool is_monic() const { return leading() == TowerContext::one(); }

  [[nodiscard]] Element evaluate(const TowerContext& ctx, Element x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Element> coeffs_;
};

Polynomial multiply(const TowerContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial scale(const TowerContext& ctx, const Polynomial& a, Element c);
Polynomial power(const TowerContext& ctx, const Polynomial& a, unsigned e);
/// Applies x -> x^{2^i} to every coefficient.
Polynomial frobenius(const TowerContext& ctx, const Polynomial& a, long long i);
/// Divides by the leading coefficient.
Polynomial make_monic(const TowerContext& ctx, const Polynomial& a);
/// True iff every coefficient lies in the given subfield.
bool has_coeffs_in(const TowerContext& ctx, const Polynomial& a, FieldLevel level);

/// Product of (x - alpha^{2^{k i}}) over the distinct conjugates of alpha
/// under x -> x^{2^k}, where k = over.degree. The result is monic,
/// irreducible over F_{2^k}, and its coefficients are checked to lie there.
Polynomial minimal_polynomial(const TowerContext& ctx, Element alpha, FieldLevel over);
inline Polynomial minimal_polynomial(const TowerContext& ctx, Element alpha) {
  return minimal_polynomial(ctx, alpha, ctx.base_level());
}

}  // namespace goppa::gf2
