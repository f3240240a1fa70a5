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

#include <cstdint>
#include <filesystem>
#include <optional>

#include "pinnup/adam.hpp"
#include "pinnup/network.hpp"

namespace pinnup {

// Frequency-tagged network snapshot passed along the frequency ladder.
struct Checkpoint {
  NetworkParams params;
  double frequency_hz = 0.0;
  std::optional<AdamState> optimizer;
  std::uint64_t seed = 0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// "PNUP" v1 little-endian file. Throws ValidationError for non-finite
// parameters (nothing is written).
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
// Throws CorruptFileError on wrong magic, version, truncation or shape
// inconsistencies.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace pinnup
