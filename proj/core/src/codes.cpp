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

#include "goppa/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "goppa/errors.hpp"

namespace goppa::codes {

namespace {

void check_weights(std::span<const Element> v, std::size_t support_size) {
  if (v.size() != support_size) throw DomainError("weight vector and support differ in length");
  for (Element x : v)
    if (x.is_zero()) throw DomainError("alternant weights must be nonzero");
}

template <class T>
void check_distinct(std::span<const T> support) {
  std::vector<T> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("support entries must be distinct");
}

// r >= |L| is allowed: the small towers used as test beds have fewer
// support points than the Goppa polynomial degree.
void check_rows(unsigned r) {
  if (r == 0) throw DomainError("alternant parity needs at least one row");
}

}  // namespace

BinaryCode BinaryCode::from_generator(BitMatrix generator) {
  generator.row_reduce();
  BitMatrix parity = generator.nullspace();
  return BinaryCode(std::move(generator), std::move(parity));
}

BinaryCode BinaryCode::from_parity_check(BitMatrix parity) {
  parity.row_reduce();
  BitMatrix generator = parity.nullspace();
  return BinaryCode(std::move(generator), std::move(parity));
}

bool BinaryCode::contains(const BitVector& word) const {
  if (word.size() != length()) return false;
  for (const BitVector& h : parity_.row_vectors())
    if (h.dot(word)) return false;
  return true;
}

BinaryCode BinaryCode::permuted(std::span<const std::uint32_t> perm) const {
  if (perm.size() != length()) throw DomainError("permutation length does not match code length");
  BitMatrix g(length());
  for (const BitVector& x : generator_.row_vectors()) {
    BitVector y(length());
    for (std::size_t i = 0; i < length(); ++i)
      if (x.get(i)) y.set(perm[i]);
    g.add_row(std::move(y));
  }
  return from_generator(std::move(g));
}

GoppaInstance make_goppa_instance(const TowerContext& ctx, Element alpha) {
  if (!ctx.in_sextic_set(alpha))
    throw DomainError("alpha = " + ctx.to_hex(alpha) + " does not have degree 6 over F_{2^n}");
  GoppaInstance inst;
  inst.alpha = alpha;
  inst.g = gf2::minimal_polynomial(ctx, alpha);
  inst.support.assign(ctx.base_elements_sorted().begin(), ctx.base_elements_sorted().end());
  inst.extended_support = mobius::projective_line(ctx);
  return inst;
}

FieldMatrix alternant_parity(const TowerContext& ctx, std::span<const Element> v, std::span<const Element> support,
                             unsigned r) {
  check_weights(v, support.size());
  check_distinct(support);
  check_rows(r);
  FieldMatrix h(r, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    Element entry = v[j];
    for (unsigned i = 0; i < r; ++i) {
      h.at(i, j) = entry;
      entry = ctx.mul(entry, support[j]);
    }
  }
  return h;
}

FieldMatrix projective_alternant_parity(const TowerContext& ctx, std::span<const Element> v,
                                        std::span<const ProjectivePoint> support, unsigned r) {
  check_weights(v, support.size());
  check_distinct(support);
  check_rows(r);
  FieldMatrix h(r, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j].is_infinity()) {
      h.at(r - 1, j) = v[j];
      continue;
    }
    Element entry = v[j];
    for (unsigned i = 0; i < r; ++i) {
      h.at(i, j) = entry;
      entry = ctx.mul(entry, support[j].value());
    }
  }
  return h;
}

FieldMatrix extended_alternant_parity(const TowerContext& ctx, std::span<const Element> v,
                                      std::span<const ProjectivePoint> support, unsigned r) {
  if (support.empty() || !support.back().is_infinity()) throw DomainError("extended support must end in infinity");
  return projective_alternant_parity(ctx, v, support, r);
}

std::vector<Element> goppa_weights(const TowerContext& ctx, const Polynomial& g,
                                   std::span<const ProjectivePoint> support) {
  if (g.is_zero()) throw DomainError("Goppa polynomial must be nonzero");
  std::vector<Element> v;
  v.reserve(support.size());
  for (ProjectivePoint p : support) {
    const Element value = p.is_infinity() ? g.leading() : g.evaluate(ctx, p.value());
    if (value.is_zero()) throw DomainError("Goppa polynomial vanishes on the support");
    v.push_back(ctx.inv(value));
  }
  return v;
}

std::vector<Element> goppa_weights(const TowerContext& ctx, const Polynomial& g, std::span<const Element> support) {
  std::vector<ProjectivePoint> points(support.begin(), support.end());
  return goppa_weights(ctx, g, points);
}

FieldMatrix goppa_parity(const TowerContext& ctx, Element alpha, std::span<const Element> support) {
  FieldMatrix h(1, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    const Element diff = alpha + support[j];
    if (diff.is_zero()) throw DomainError("alpha lies in the support");
    h.at(0, j) = ctx.inv(diff);
  }
  return h;
}

BinaryCode subfield_subcode(const TowerContext& ctx, const FieldMatrix& h) {
  BitMatrix binary(h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (unsigned b = 0; b < ctx.degree(); ++b) {
      BitVector row(h.cols());
      for (std::size_t j = 0; j < h.cols(); ++j)
        if ((h.at(r, j).bits() >> b) & 1) row.set(j);
      if (!row.is_zero()) binary.add_row(std::move(row));
    }
  }
  return BinaryCode::from_parity_check(std::move(binary));
}

BinaryCode extend_code(const BinaryCode& code) {
  const std::size_t m = code.length();
  BitMatrix g(m + 1);
  for (const BitVector& x : code.generator().row_vectors()) {
    BitVector y(m + 1);
    for (std::size_t i = 0; i < m; ++i)
      if (x.get(i)) y.set(i);
    y.set(m, x.popcount() & 1);
    g.add_row(std::move(y));
  }
  return BinaryCode::from_generator(std::move(g));
}

BinaryCode expurgate_code(const BinaryCode& code) {
  BitMatrix h = code.parity();
  BitVector ones(code.length());
  for (std::size_t i = 0; i < code.length(); ++i) ones.set(i);
  h.add_row(std::move(ones));
  return BinaryCode::from_parity_check(std::move(h));
}

BinaryCode goppa_code(const TowerContext& ctx, Element alpha) {
  const GoppaInstance inst = make_goppa_instance(ctx, alpha);
  return subfield_subcode(ctx, goppa_parity(ctx, alpha, inst.support));
}

BinaryCode extended_goppa_code(const TowerContext& ctx, Element alpha) { return extend_code(goppa_code(ctx, alpha)); }

Polynomial transform_polynomial(const TowerContext& ctx, const Polynomial& g, const SemiLinearMap& map) {
  if (g.is_zero()) throw DomainError("cannot transform the zero polynomial");
  const Polynomial tg = gf2::frobenius(ctx, g, map.frob());
  if (!map.c().is_zero() && tg.evaluate(ctx, ctx.div(map.d(), map.c())).is_zero())
    throw DomainError("(tau g)(d/c) = 0: the transform would drop degree");
  const auto r = static_cast<unsigned>(g.degree());
  const Polynomial num = Polynomial::linear(map.d(), map.b());  // d x + b
  const Polynomial den = Polynomial::linear(map.c(), map.a());  // c x + a
  std::vector<Polynomial> den_powers{Polynomial::constant(TowerContext::one())};
  for (unsigned k = 1; k <= r; ++k) den_powers.push_back(multiply(ctx, den_powers.back(), den));
  Polynomial out;
  Polynomial num_power = Polynomial::constant(TowerContext::one());
  for (unsigned k = 0; k <= r; ++k) {
    if (!tg.coeff(k).is_zero()) out = out + scale(ctx, multiply(ctx, num_power, den_powers[r - k]), tg.coeff(k));
    num_power = multiply(ctx, num_power, num);
  }
  if (out.degree() != static_cast<int>(r)) throw ConsistencyError("transformed polynomial lost degree");
  return out;
}

std::vector<std::uint32_t> induced_permutation(const TowerContext& ctx, const SemiLinearMap& map,
                                               std::span<const ProjectivePoint> support) {
  std::map<ProjectivePoint, std::uint32_t> position;
  for (std::size_t i = 0; i < support.size(); ++i) position.emplace(support[i], static_cast<std::uint32_t>(i));
  if (position.size() != support.size()) throw DomainError("support entries must be distinct");
  std::vector<std::uint32_t> perm(support.size());
  std::vector<bool> hit(support.size(), false);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto it = position.find(mobius::apply(ctx, map, support[i]));
    if (it == position.end()) throw DomainError("map does not preserve the support");
    if (hit[it->second]) throw ConsistencyError("induced map on the support is not injective");
    hit[it->second] = true;
    perm[i] = it->second;
  }
  return perm;
}

std::string format_cycles(std::span<const std::uint32_t> perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      if (i != start) out += ' ';
      out += std::to_string(i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::uint64_t> weight_enumerator(const BinaryCode& code) {
  constexpr std::size_t kMaxDimension = 24;
  if (code.dimension() > kMaxDimension)
    throw InfeasibleError("weight enumeration refused: dimension " + std::to_string(code.dimension()) + " > 24");
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  BitVector word(code.length());
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << code.dimension();
  for (std::uint64_t k = 1; k < total; ++k) {
    word ^= code.generator().row(static_cast<std::size_t>(std::countr_zero(k)));
    ++counts[word.popcount()];
  }
  return counts;
}

EquivalenceReport check_extended_equivalence(const TowerContext& ctx, Element alpha, const SemiLinearMap& map) {
  EquivalenceReport report;
  report.alpha = alpha;
  report.beta = mobius::apply(ctx, map, alpha);
  const BinaryCode ca = extended_goppa_code(ctx, alpha);
  const BinaryCode cb = extended_goppa_code(ctx, report.beta);
  report.permutation = induced_permutation(ctx, map, mobius::projective_line(ctx));
  report.enumerator_alpha = weight_enumerator(ca);
  report.enumerator_beta = weight_enumerator(cb);
  report.verified = ca.permuted(report.permutation) == cb && report.enumerator_alpha == report.enumerator_beta;
  return report;
}

}  // namespace goppa::codes
