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
#include <cstdint>
#include <utility>

#include "pinnup/sample_batch.hpp"
#include "pinnup/velocity_model.hpp"

namespace pinnup {

struct SamplerConfig {
  double source_depth_km = 0.025;
  std::pair<double, double> source_x_range{0.1, 2.4};
  double exclusion_radius_km = kDefaultExclusionRadius;

  friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

// N collocation points: (x, z) uniform over the model domain, s_x uniform
// over the source range; points inside the exclusion radius are redrawn.
// m, dm and u0 are precomputed. Deterministic in seed.
SampleBatch draw_samples(const VelocityModel& model, std::size_t count, double omega,
                         const SamplerConfig& cfg, std::uint64_t seed);

}  // namespace pinnup
