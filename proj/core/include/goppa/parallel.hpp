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

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace goppa {

/// Fixed set of worker threads executing index-parallel batches. The
/// calling thread takes part in every batch, so a pool of size 1 spawns no
/// threads at all.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers);
  ~WorkerPool();
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  [[nodiscard]] unsigned size() const { return static_cast<unsigned>(threads_.size()) + 1; }

  /// Runs task(i) for every i in [0, count) and blocks until all finish.
  /// The first exception thrown by a task is rethrown here.
  void run(std::size_t count, const std::function<void(std::size_t)>& task);

 private:
  void worker_loop();
  void drain(const std::function<void(std::size_t)>& task, std::size_t count);

  std::vector<std::jthread> threads_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(std::size_t)>* task_ = nullptr;
  std::size_t count_ = 0;
  std::atomic<std::size_t> next_{0};
  std::size_t busy_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

/// Flat bit array over [0, size) with atomic set/test.
class AtomicBitmap {
 public:
  explicit AtomicBitmap(std::uint64_t size);

  [[nodiscard]] std::uint64_t size() const { return size_; }
  [[nodiscard]] bool test(std::uint64_t i) const {
    return (std::atomic_ref<const std::uint64_t>(words_[i >> 6]).load(std::memory_order_relaxed) >> (i & 63)) & 1;
  }
  /// Sets bit i; returns true iff it was previously clear.
  bool set(std::uint64_t i) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    return (std::atomic_ref<std::uint64_t>(words_[i >> 6]).fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
  }
  /// First clear bit at or after `from`; size() if none.
  [[nodiscard]] std::uint64_t next_clear(std::uint64_t from) const;
  [[nodiscard]] std::uint64_t popcount() const;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace goppa
