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

#include "pinnup/sampler.hpp"

#include <cmath>
#include <random>

#include "pinnup/errors.hpp"
#include "pinnup/random.hpp"

namespace pinnup {

void SampleBatch::check_consistent() const {
  const std::size_t n = x.size();
  if (z.size() != n || sx.size() != n || m.size() != n || dm.size() != n || u0.size() != n)
    throw ShapeError("sample batch: array lengths differ");
}

SampleBatch draw_samples(const VelocityModel& model, std::size_t count, double omega,
                         const SamplerConfig& cfg, std::uint64_t seed) {
  if (count == 0) throw ConfigError("draw_samples: need at least one sample");
  if (!(omega > 0.0)) throw ConfigError("draw_samples: omega must be > 0");
  const auto [sx_lo, sx_hi] = cfg.source_x_range;
  if (!(sx_lo <= sx_hi) || sx_lo < model.ox() || sx_hi > model.x_max())
    throw ConfigError("draw_samples: source_x_range must lie inside the model domain");
  const double diagonal = std::hypot(model.x_max() - model.ox(), model.z_max() - model.oz());
  if (!(cfg.exclusion_radius_km >= 0.0) || cfg.exclusion_radius_km > diagonal)
    throw ConfigError("draw_samples: exclusion radius exceeds the domain diagonal");

  SampleBatch batch;
  batch.sz = cfg.source_depth_km;
  batch.omega = omega;
  batch.seed = seed;
  for (auto* v : {&batch.x, &batch.z, &batch.sx, &batch.m, &batch.dm}) v->reserve(count);
  batch.u0.reserve(count);

  std::mt19937_64 rng(seed);
  while (batch.size() < count) {
    const double x = uniform(rng, model.ox(), model.x_max());
    const double z = uniform(rng, model.oz(), model.z_max());
    const double sx = uniform(rng, sx_lo, sx_hi);
    const double ddx = x - sx, ddz = z - batch.sz;
    const double r = std::hypot(ddx, ddz);
    if (r < cfg.exclusion_radius_km || r == 0.0) continue;
    const MediumPoint pt =
        sample_medium(model, x, z, sx, batch.sz, omega, cfg.exclusion_radius_km);
    batch.x.push_back(x);
    batch.z.push_back(z);
    batch.sx.push_back(sx);
    batch.m.push_back(pt.m);
    batch.dm.push_back(pt.dm);
    batch.u0.push_back(pt.u0);
  }
  return batch;
}

}  // namespace pinnup
