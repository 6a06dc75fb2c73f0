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

#include <bit>

namespace goppa {

WorkerPool::WorkerPool(unsigned workers) {
  if (workers == 0) workers = 1;
  threads_.reserve(workers - 1);
  for (unsigned i = 1; i < workers; ++i) threads_.emplace_back([this] { worker_loop(); });
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stop_ = true;
  }
  start_cv_.notify_all();
  threads_.clear();  // joins
}

void WorkerPool::drain(const std::function<void(std::size_t)>& task, std::size_t count) {
  for (std::size_t i = next_.fetch_add(1); i < count; i = next_.fetch_add(1)) {
    try {
      task(i);
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
}

void WorkerPool::worker_loop() {
  std::uint64_t seen = 0;
  for (;;) {
    const std::function<void(std::size_t)>* task = nullptr;
    std::size_t count = 0;
    {
      std::unique_lock lock(mutex_);
      start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      task = task_;
      count = count_;
      ++busy_;
    }
    if (task != nullptr) drain(*task, count);
    {
      std::lock_guard lock(mutex_);
      --busy_;
    }
    done_cv_.notify_all();
  }
}

void WorkerPool::run(std::size_t count, const std::function<void(std::size_t)>& task) {
  if (threads_.empty() || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  {
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return busy_ == 0; });
    task_ = &task;
    count_ = count;
    next_.store(0);
    error_ = nullptr;
    ++generation_;
  }
  start_cv_.notify_all();
  drain(task, count);
  std::exception_ptr error;
  {
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return busy_ == 0 && next_.load() >= count_; });
    task_ = nullptr;
    error = error_;
  }
  if (error) std::rethrow_exception(error);
}

AtomicBitmap::AtomicBitmap(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

std::uint64_t AtomicBitmap::next_clear(std::uint64_t from) const {
  if (from >= size_) return size_;
  std::uint64_t w = from >> 6;
  std::uint64_t word = ~words_[w] & (~std::uint64_t{0} << (from & 63));
  while (word == 0) {
    if (++w >= words_.size()) return size_;
    word = ~words_[w];
  }
  const std::uint64_t i = (w << 6) + std::countr_zero(word);
  return i < size_ ? i : size_;
}

std::uint64_t AtomicBitmap::popcount() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

}  // namespace goppa
