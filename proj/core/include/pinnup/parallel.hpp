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

#pragma once

#include <cstddef>
#include <functional>

namespace pinnup {

// Worker count: hardware concurrency, capped by $PINNUP_THREADS when set.
std::size_t worker_count();

// Runs task(chunk) for chunk in [0, chunks) on up to `workers` threads, in
// waves of `workers` chunks. `after_wave(first, last)` is called on the
// calling thread once chunks [first, last) are complete, which lets callers
// reduce partial results in chunk order.
void run_chunked(std::size_t chunks, std::size_t workers,
                 const std::function<void(std::size_t chunk, std::size_t slot)>& task,
                 const std::function<void(std::size_t first, std::size_t last)>& after_wave);

}  // namespace pinnup
