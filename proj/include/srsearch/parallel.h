// Copyright 2026 The srsearch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRSEARCH_PARALLEL_H_
#define SRSEARCH_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace srsearch {

// Runs fn(i) for i in [0, n) on up to `workers` threads. If any call throws,
// the exception from the lowest failing index is rethrown after all workers
// finish, so failures are reported independently of scheduling.
template <typename Fn>
void ParallelFor(std::size_t n, int workers, Fn&& fn) {
  const std::size_t threads =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, workers)));
  std::exception_ptr error;
  std::size_t error_index = n;
  std::mutex error_mutex;
  auto run_one = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run_one(i);
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace srsearch

#endif  // SRSEARCH_PARALLEL_H_
