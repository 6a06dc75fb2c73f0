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

#include "goppa/bitmatrix.hpp"

#include <algorithm>
#include <utility>

#include "goppa/errors.hpp"

namespace goppa::gf2 {

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, (size_ + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t k = 0; k < digits; ++k) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t i = 4 * k + b;
      if (i < size_ && get(i)) nibble |= 1u << b;
    }
    out[digits - 1 - k] = kDigits[nibble];
  }
  return out;
}

void BitMatrix::add_row(BitVector v) {
  if (v.size() != cols_) throw DomainError("row length does not match matrix width");
  rows_.push_back(std::move(v));
}

std::vector<std::size_t> BitMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_.size(); ++c) {
    std::size_t p = next;
    while (p < rows_.size() && !rows_[p].get(c)) ++p;
    if (p == rows_.size()) continue;
    std::swap(rows_[p], rows_[next]);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (r != next && rows_[r].get(c)) rows_[r] ^= rows_[next];
    pivots.push_back(c);
    ++next;
  }
  rows_.resize(next);
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.row_reduce().size();
}

BitMatrix BitMatrix::nullspace() const {
  BitMatrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  BitMatrix kernel(cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols_);
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (reduced.rows_[r].get(f)) v.set(pivots[r]);
    kernel.add_row(std::move(v));
  }
  kernel.row_reduce();
  return kernel;
}

}  // namespace goppa::gf2
