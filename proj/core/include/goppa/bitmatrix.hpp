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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace goppa::gf2 {

/// Fixed-length vector over F_2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  [[nodiscard]] std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool is_zero() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Inner product over F_2.
  [[nodiscard]] bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }
  /// Hex of the integer sum over set bits i of 2^i, most significant nibble
  /// first, zero-padded to ceil(size/4) digits.
  [[nodiscard]] std::string to_hex() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Matrix over F_2 stored as rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] const BitVector& row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] BitVector& row(std::size_t r) { return rows_[r]; }
  [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return rows_; }
  void add_row(BitVector v);

  /// Reduced row echelon form in place; zero rows are dropped. Returns the
  /// pivot columns in increasing order.
  std::vector<std::size_t> row_reduce();
  [[nodiscard]] std::size_t rank() const;
  /// Basis of {x : M x^T = 0}, in reduced row echelon form.
  [[nodiscard]] BitMatrix nullspace() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

}  // namespace goppa::gf2
