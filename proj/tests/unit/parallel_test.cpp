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

#include "goppa/parallel.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

namespace goppa {
namespace {

TEST(WorkerPool, EveryIndexRunsExactlyOnce) {
  for (unsigned workers : {1u, 2u, 8u}) {
    WorkerPool pool(workers);
    EXPECT_EQ(pool.size(), workers);
    for (int round = 0; round < 50; ++round) {
      std::vector<std::atomic<int>> hits(257);
      pool.run(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
      for (auto& h : hits) ASSERT_EQ(h.load(), 1);
    }
    pool.run(0, [](std::size_t) { FAIL(); });
  }
}

TEST(WorkerPool, RethrowsTaskErrors) {
  WorkerPool pool(4);
  EXPECT_THROW(pool.run(100, [](std::size_t i) {
    if (i == 37) throw std::runtime_error("boom");
  }),
               std::runtime_error);
  std::atomic<int> sum{0};
  pool.run(10, [&](std::size_t i) { sum += static_cast<int>(i); });
  EXPECT_EQ(sum.load(), 45);
}

TEST(AtomicBitmap, SetReportsFreshBits) {
  AtomicBitmap bits(200);
  EXPECT_TRUE(bits.set(3));
  EXPECT_FALSE(bits.set(3));
  EXPECT_TRUE(bits.test(3));
  EXPECT_EQ(bits.next_clear(3), 4u);
  for (std::uint64_t i = 0; i < 200; ++i) bits.set(i);
  EXPECT_EQ(bits.next_clear(0), 200u);
  EXPECT_EQ(bits.popcount(), 200u);
}

TEST(AtomicBitmap, ConcurrentSettersCountEachBitOnce) {
  AtomicBitmap bits(1 << 16);
  WorkerPool pool(8);
  std::vector<std::uint64_t> fresh(64, 0);
  pool.run(64, [&](std::size_t k) {
    for (std::uint64_t i = 0; i < (1 << 16); i += 1 + (k % 3)) fresh[k] += bits.set(i);
  });
  EXPECT_EQ(std::accumulate(fresh.begin(), fresh.end(), std::uint64_t{0}), bits.popcount());
  EXPECT_EQ(bits.popcount(), std::uint64_t{1} << 16);
}

}  // namespace
}  // namespace goppa
