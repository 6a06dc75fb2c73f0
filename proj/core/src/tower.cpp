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

#include "goppa/tower.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "goppa/errors.hpp"

namespace goppa::gf2 {

TowerContext TowerContext::make(unsigned n, const Options& options) {
  if (n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
  if (n > kMaxN) throw DomainError("n must be at most " + std::to_string(kMaxN) + " (6n-bit words)");

  TowerContext ctx;
  ctx.n_ = n;
  ctx.m_ = 6 * n;
  ctx.modulus_base_ = options.modulus_base.value_or(lowest_weight_irreducible(n));
  ctx.modulus_big_ = options.modulus_big.value_or(lowest_weight_irreducible(6 * n));
  if (gf2::degree(ctx.modulus_base_) != static_cast<int>(n) || !is_irreducible(ctx.modulus_base_))
    throw DomainError("base modulus " + format_exponents(ctx.modulus_base_) +
                      " is not an irreducible polynomial of degree " + std::to_string(n));
  if (gf2::degree(ctx.modulus_big_) != static_cast<int>(ctx.m_) || !is_irreducible(ctx.modulus_big_))
    throw DomainError("big modulus " + format_exponents(ctx.modulus_big_) +
                      " is not an irreducible polynomial of degree " + std::to_string(ctx.m_));
  ctx.mask_ = (std::uint64_t{1} << ctx.m_) - 1;
  ctx.modulus_low_ = ctx.modulus_big_ & ctx.mask_;

  // Frobenius powers as matrices.
  ctx.frobenius_.reserve(ctx.m_);
  std::vector<std::uint64_t> cols(ctx.m_);
  for (unsigned j = 0; j < ctx.m_; ++j) cols[j] = std::uint64_t{1} << j;
  for (unsigned i = 0; i < ctx.m_; ++i) {
    ctx.frobenius_.emplace_back(cols);
    for (auto& c : cols) c = ctx.square(Element(c)).bits();
  }

  // The embedded subfield is the fixed field of sigma^n; pick the smallest
  // root of modulus_base in it.
  const auto fixed = solve_affine_linearized(ctx.frobenius_[n] + LinearizedMap::identity(ctx.m_), Element{});
  const std::vector<Element> subfield = fixed.elements();
  if (subfield.size() != (std::size_t{1} << n)) throw ConsistencyError("fixed field of sigma^n has wrong size");
  std::optional<Element> root;
  for (Element x : subfield) {
    Element acc{};
    for (int j = static_cast<int>(n); j >= 0; --j) {
      acc = ctx.mul(acc, x);
      if ((ctx.modulus_base_ >> j) & 1) acc += one();
    }
    if (acc.is_zero()) {
      root = x;
      break;  // subfield is sorted ascending
    }
  }
  if (!root) throw ConsistencyError("base modulus has no root in the big field");

  Element power = one();
  for (unsigned j = 0; j < n; ++j) {
    ctx.base_basis_.push_back(power);
    power = ctx.mul(power, *root);
  }
  const std::size_t q = std::size_t{1} << n;
  ctx.base_elements_.resize(q);
  for (std::size_t k = 1; k < q; ++k)
    ctx.base_elements_[k] = ctx.base_elements_[k & (k - 1)] + ctx.base_basis_[std::countr_zero(k)];
  for (std::size_t k = 0; k < q; ++k) ctx.coords_of_.emplace(ctx.base_elements_[k].bits(), k);
  if (ctx.coords_of_.size() != q) throw ConsistencyError("embedding is not injective");
  ctx.base_sorted_ = ctx.base_elements_;
  std::sort(ctx.base_sorted_.begin(), ctx.base_sorted_.end());
  if (ctx.base_sorted_ != subfield) throw ConsistencyError("embedding image is not the fixed field");
  return ctx;
}

Element TowerContext::inv(Element a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  std::uint64_t u = a.bits();
  std::uint64_t v = modulus_big_;
  std::uint64_t g1 = 1;
  std::uint64_t g2 = 0;
  while (u != 1) {
    int j = gf2::degree(u) - gf2::degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return Element(g1);
}

Element TowerContext::pow(Element a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = square(base);
  }
  return result;
}

Element TowerContext::frobenius(Element x, long long i) const {
  const long long m = m_;
  const long long r = ((i % m) + m) % m;
  return frobenius_[static_cast<std::size_t>(r)](x);
}

bool TowerContext::in_subfield(Element x, FieldLevel level) const {
  if (level.degree == 0 || m_ % level.degree != 0)
    throw DomainError("F_{2^" + std::to_string(level.degree) + "} is not a subfield of F_{2^" + std::to_string(m_) +
                      "}");
  return frobenius_[level.degree % m_](x) == x;
}

unsigned TowerContext::degree_over_base(Element x) const {
  for (unsigned d : {1u, 2u, 3u}) {
    if (frobenius_[(d * n_) % m_](x) == x) return d;
  }
  return 6;
}

Element TowerContext::embed(std::uint64_t coords) const {
  if (coords >= base_elements_.size()) throw DomainError("base-field coordinates out of range");
  return base_elements_[coords];
}

std::optional<std::uint64_t> TowerContext::base_coords(Element x) const {
  const auto it = coords_of_.find(x.bits());
  if (it == coords_of_.end()) return std::nullopt;
  return it->second;
}

Element TowerContext::random(std::mt19937_64& rng) const { return Element(rng() & mask_); }

Element TowerContext::random_base(std::mt19937_64& rng) const {
  return base_elements_[rng() & (base_elements_.size() - 1)];
}

Element TowerContext::random_sextic(std::mt19937_64& rng) const {
  for (;;) {
    const Element x = random(rng);
    if (in_sextic_set(x)) return x;
  }
}

std::string TowerContext::to_hex(std::uint64_t encoding) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.push_back(kDigits[encoding & 0xf]);
    encoding >>= 4;
  } while (encoding != 0);
  while (out.size() < hex_width()) out.push_back('0');
  std::reverse(out.begin(), out.end());
  return out;
}

std::string TowerContext::to_hex(Element x) const { return to_hex(x.bits()); }

Element TowerContext::from_hex(std::string_view text) const {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw DomainError("bad hex field element '" + std::string(text) + "'");
  if (v > mask_) throw DomainError("hex value '" + std::string(text) + "' exceeds the field size");
  return Element(v);
}

Element trace(const TowerContext& ctx, Element x, FieldLevel from, FieldLevel to) {
  if (to.degree == 0 || from.degree == 0 || from.degree % to.degree != 0 || ctx.degree() % from.degree != 0)
    throw DomainError("trace needs to | from | 6n (got from=" + std::to_string(from.degree) +
                      ", to=" + std::to_string(to.degree) + ")");
  if (!ctx.in_subfield(x, from)) throw DomainError("trace argument is not in the source field");
  Element acc{};
  Element conj = x;
  for (unsigned j = 0; j < from.degree / to.degree; ++j) {
    acc += conj;
    conj = ctx.frobenius(conj, to.degree);
  }
  return acc;
}

}  // namespace goppa::gf2
