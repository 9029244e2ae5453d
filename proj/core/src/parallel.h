// Copyright 2026 The Robustfair Authors.
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

// Strided fan-out over a fixed worker count. Internal.

#ifndef ROBUSTFAIR_PARALLEL_H_
#define ROBUSTFAIR_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace robustfair::internal {

// Runs fn(i) for i in [0, count) on up to `threads` workers; worker w takes
// i = w, w + workers, ... The first exception (by worker) is rethrown after
// all workers finish.
template <typename Fn>
void ParallelFor(int count, int threads, const Fn& fn) {
  const int workers = std::clamp(threads, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace robustfair::internal

#endif  // ROBUSTFAIR_PARALLEL_H_
