// Copyright 2026 The qnoise authors
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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qnoise {

/// Resolves a job-count argument: 0 means "use the hardware concurrency".
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Reduces `per_chunk(begin, end)` over [0, count) split into fixed-size
/// chunks, combining partial results in ascending chunk order. Chunk
/// boundaries do not depend on the job count, so the result is identical
/// for any number of threads (including 1).
template <typename Acc, typename ChunkFn, typename CombineFn>
Acc chunked_reduce(std::uint64_t count, std::uint64_t chunk_size, int jobs, Acc init,
                   ChunkFn per_chunk, CombineFn combine) {
  if (count == 0) return init;
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t n_chunks = (count + chunk_size - 1) / chunk_size;
  const int n_threads = std::min<std::uint64_t>(resolve_jobs(jobs), n_chunks);

  if (n_threads <= 1) {
    Acc acc = std::move(init);
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(begin + chunk_size, count);
      combine(acc, per_chunk(begin, end));
    }
    return acc;
  }

  std::vector<std::optional<Acc>> partials(n_chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(begin + chunk_size, count);
      try {
        partials[c].emplace(per_chunk(begin, end));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  Acc acc = std::move(init);
  for (auto& part : partials) combine(acc, std::move(*part));
  return acc;
}

}  // namespace qnoise
