// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BUTSON_PARALLEL_HPP
#define BUTSON_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace butson::detail {

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(task) for task in [0, tasks) on `workers` threads pulling from a
/// shared counter. body must be safe to call concurrently on distinct tasks.
/// The first exception thrown by any task is rethrown on the caller.
template <typename Body>
void parallel_for(std::uint64_t tasks, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(tasks, 1)));
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(tasks);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace butson::detail

#endif  // BUTSON_PARALLEL_HPP
