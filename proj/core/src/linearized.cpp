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

#include "goppa/linearized.hpp"

#include <algorithm>
#include <array>

#include "goppa/errors.hpp"
#include "goppa/gf2poly.hpp"

namespace goppa::gf2 {

LinearizedMap::LinearizedMap(std::vector<std::uint64_t> columns, Element offset)
    : columns_(std::move(columns)), offset_(offset) {
  if (columns_.size() > 64) throw DomainError("linearized maps are limited to dimension 64");
}

LinearizedMap LinearizedMap::identity(unsigned dim) {
  std::vector<std::uint64_t> cols(dim);
  for (unsigned j = 0; j < dim; ++j) cols[j] = std::uint64_t{1} << j;
  return LinearizedMap(std::move(cols));
}

LinearizedMap LinearizedMap::zero(unsigned dim) { return LinearizedMap(std::vector<std::uint64_t>(dim)); }

LinearizedMap LinearizedMap::compose(const LinearizedMap& inner) const {
  if (inner.dim() != dim()) throw DomainError("dimension mismatch in compose");
  std::vector<std::uint64_t> cols(dim());
  for (unsigned j = 0; j < dim(); ++j) cols[j] = apply_linear(Element(inner.columns_[j])).bits();
  return LinearizedMap(std::move(cols), (*this)(inner.offset_));
}

LinearizedMap operator+(const LinearizedMap& f, const LinearizedMap& g) {
  if (f.dim() != g.dim()) throw DomainError("dimension mismatch in sum");
  std::vector<std::uint64_t> cols(f.dim());
  for (unsigned j = 0; j < f.dim(); ++j) cols[j] = f.columns_[j] ^ g.columns_[j];
  return LinearizedMap(std::move(cols), f.offset_ + g.offset_);
}

LinearizedMap LinearizedMap::with_offset(Element offset) const { return LinearizedMap(columns_, offset); }

namespace {

// Row-echelon basis of the column span, remembering for every basis vector
// which input columns were combined to produce it.
struct EchelonBasis {
  std::array<std::uint64_t, 64> vec{};    // indexed by pivot bit
  std::array<std::uint64_t, 64> combo{};  // input-column mask
  std::vector<std::uint64_t> kernel;      // masks of dependent combinations

  explicit EchelonBasis(std::span<const std::uint64_t> cols) {
    for (unsigned j = 0; j < cols.size(); ++j) {
      std::uint64_t v = cols[j];
      std::uint64_t c = std::uint64_t{1} << j;
      reduce(v, c);
      if (v == 0) {
        kernel.push_back(c);
      } else {
        const int p = degree(v);
        vec[p] = v;
        combo[p] = c;
      }
    }
  }

  void reduce(std::uint64_t& v, std::uint64_t& c) const {
    for (int p = degree(v); p >= 0; p = degree(v)) {
      if (vec[p] == 0) return;
      v ^= vec[p];
      c ^= combo[p];
    }
  }
};

}  // namespace

unsigned LinearizedMap::rank() const {
  EchelonBasis basis(columns_);
  return dim() - static_cast<unsigned>(basis.kernel.size());
}

unsigned rank_of(std::span<const std::uint64_t> vectors) {
  EchelonBasis basis(vectors);
  return static_cast<unsigned>(vectors.size() - basis.kernel.size());
}

AffineSolutionSet solve_affine_linearized(const LinearizedMap& map, Element rhs) {
  EchelonBasis basis(map.columns());
  AffineSolutionSet out;
  for (std::uint64_t k : basis.kernel) out.kernel_basis.emplace_back(k);
  std::uint64_t v = (rhs + map.offset()).bits();
  std::uint64_t c = 0;
  basis.reduce(v, c);
  if (v == 0) out.particular = Element(c);
  return out;
}

std::uint64_t AffineSolutionSet::count() const {
  if (empty()) return 0;
  if (kernel_basis.size() >= 64) return std::uint64_t{1} << 63;
  return std::uint64_t{1} << kernel_basis.size();
}

std::vector<Element> AffineSolutionSet::elements() const {
  if (empty()) return {};
  if (kernel_basis.size() > 26) throw InfeasibleError("solution set too large to list");
  const std::uint64_t total = std::uint64_t{1} << kernel_basis.size();
  std::vector<Element> out;
  out.reserve(total);
  std::uint64_t x = particular->bits();
  out.emplace_back(x);
  for (std::uint64_t k = 1; k < total; ++k) {
    x ^= kernel_basis[std::countr_zero(k)].bits();
    out.emplace_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool AffineSolutionSet::contains(Element x) const {
  if (empty()) return false;
  std::uint64_t v = (x + *particular).bits();
  // Reduce against the kernel basis (an independent set) in echelon form.
  std::vector<std::uint64_t> ech;
  for (Element k : kernel_basis) {
    std::uint64_t w = k.bits();
    for (std::uint64_t e : ech) w = std::min(w, w ^ e);
    if (w != 0) {
      ech.push_back(w);
      std::sort(ech.rbegin(), ech.rend());
    }
  }
  for (std::uint64_t e : ech) v = std::min(v, v ^ e);
  return v == 0;
}

}  // namespace goppa::gf2
