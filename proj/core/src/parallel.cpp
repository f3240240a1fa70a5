/*
 * Copyright 2026 The PINNup Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pinnup/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pinnup {

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PINNUP_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    } catch (...) {
      // unparsable value: ignore the cap
    }
  }
  return n;
}

void run_chunked(std::size_t chunks, std::size_t workers,
                 const std::function<void(std::size_t, std::size_t)>& task,
                 const std::function<void(std::size_t, std::size_t)>& after_wave) {
  workers = std::max<std::size_t>(1, workers);
  for (std::size_t first = 0; first < chunks; first += workers) {
    const std::size_t last = std::min(chunks, first + workers);
    if (last - first == 1) {
      task(first, 0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(last - first - 1);
      for (std::size_t c = first + 1; c < last; ++c)
        threads.emplace_back([&task, c, first] { task(c, c - first); });
      task(first, 0);
    }
    after_wave(first, last);
  }
}

}  // namespace pinnup
