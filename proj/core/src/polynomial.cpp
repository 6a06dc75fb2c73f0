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

#include "goppa/polynomial.hpp"

#include <algorithm>

#include "goppa/errors.hpp"

namespace goppa::gf2 {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element Polynomial::evaluate(const TowerContext& ctx, Element x) const {
  Element acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ctx.mul(acc, x) + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial multiply(const TowerContext& ctx, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += ctx.mul(a.coeffs()[i], b.coeffs()[j]);
  return Polynomial(std::move(c));
}

Polynomial scale(const TowerContext& ctx, const Polynomial& a, Element c) {
  std::vector<Element> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = ctx.mul(x, c);
  return Polynomial(std::move(out));
}

Polynomial power(const TowerContext& ctx, const Polynomial& a, unsigned e) {
  Polynomial result = Polynomial::constant(TowerContext::one());
  for (unsigned i = 0; i < e; ++i) result = multiply(ctx, result, a);
  return result;
}

Polynomial frobenius(const TowerContext& ctx, const Polynomial& a, long long i) {
  std::vector<Element> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = ctx.frobenius(x, i);
  return Polynomial(std::move(out));
}

Polynomial make_monic(const TowerContext& ctx, const Polynomial& a) {
  if (a.is_zero()) throw DomainError("zero polynomial cannot be made monic");
  return scale(ctx, a, ctx.inv(a.leading()));
}

bool has_coeffs_in(const TowerContext& ctx, const Polynomial& a, FieldLevel level) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [&](Element c) { return ctx.in_subfield(c, level); });
}

Polynomial minimal_polynomial(const TowerContext& ctx, Element alpha, FieldLevel over) {
  if (over.degree == 0 || ctx.degree() % over.degree != 0)
    throw DomainError("minimal polynomial requested over a non-subfield");
  Polynomial result = Polynomial::constant(TowerContext::one());
  Element conj = alpha;
  do {
    result = multiply(ctx, result, Polynomial::linear(TowerContext::one(), conj));
    conj = ctx.frobenius(conj, over.degree);
  } while (conj != alpha);
  if (!has_coeffs_in(ctx, result, over))
    throw ConsistencyError("minimal polynomial has coefficients outside the ground field");
  return result;
}

}  // namespace goppa::gf2
