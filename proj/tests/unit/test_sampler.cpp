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

#include <gtest/gtest.h>

#include <cmath>

#include "pinnup/errors.hpp"
#include "pinnup/physics.hpp"
#include "pinnup/sampler.hpp"

using namespace pinnup;

TEST(Sampler, DeterministicForSeed) {
  const VelocityModel m = default_model();
  const SampleBatch a = draw_samples(m, 10000, 4.0 * M_PI, {}, 7);
  const SampleBatch b = draw_samples(m, 10000, 4.0 * M_PI, {}, 7);
  const SampleBatch c = draw_samples(m, 10000, 4.0 * M_PI, {}, 8);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.z, b.z);
  EXPECT_EQ(a.sx, b.sx);
  EXPECT_EQ(a.u0, b.u0);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_NE(a.x, c.x);
  EXPECT_NO_THROW(a.check_consistent());
}

TEST(Sampler, HomogeneousModelHasZeroPerturbation) {
  const VelocityModel m = layered_model(20, 20, 2.5, {{0.0, 1.5}});
  const SampleBatch b = draw_samples(m, 1000, 10.0, {}, 1);
  for (double dm : b.dm) EXPECT_EQ(dm, 0.0);
}

TEST(Sampler, ExclusionRadiusAndRanges) {
  const VelocityModel m = default_model();
  SamplerConfig cfg;
  cfg.exclusion_radius_km = 0.05;  // large so that rejection actually happens
  const SampleBatch b = draw_samples(m, 100000, 6.0, cfg, 2);
  ASSERT_EQ(b.size(), 100000u);
  EXPECT_EQ(b.sz, 0.025);
  for (std::size_t i = 0; i < b.size(); ++i) {
    ASSERT_GE(std::hypot(b.x[i] - b.sx[i], b.z[i] - b.sz), 0.05);
    ASSERT_TRUE(b.x[i] >= 0.0 && b.x[i] <= 2.5 && b.z[i] >= 0.0 && b.z[i] <= 2.5);
    ASSERT_TRUE(b.sx[i] >= 0.1 && b.sx[i] <= 2.4);
  }
}

TEST(Sampler, QuadrantCoverage) {
  const SampleBatch b = draw_samples(default_model(), 100000, 6.0, {}, 3);
  std::size_t counts[4] = {};
  for (std::size_t i = 0; i < b.size(); ++i) ++counts[(b.x[i] < 1.25 ? 0 : 1) + (b.z[i] < 1.25 ? 0 : 2)];
  for (std::size_t c : counts) {
    EXPECT_GE(c, 23000u);
    EXPECT_LE(c, 27000u);
  }
}

TEST(Sampler, PrecomputedQuantitiesMatchRecomputation) {
  const VelocityModel m = default_model();
  const SampleBatch b = draw_samples(m, 2000, 8.0, {}, 4);
  for (std::size_t i = 0; i < b.size(); ++i) {
    ASSERT_EQ(b.u0[i], background_wavefield(b.x[i], b.z[i], b.sx[i], b.sz, 8.0, m.m0()));
    const MediumPoint p = sample_medium(m, b.x[i], b.z[i], b.sx[i], b.sz, 8.0);
    ASSERT_EQ(b.m[i], p.m);
    ASSERT_EQ(b.dm[i], p.dm);
  }
}

TEST(Sampler, Errors) {
  const VelocityModel m = default_model();
  SamplerConfig cfg;
  cfg.exclusion_radius_km = 10.0;
  EXPECT_THROW(draw_samples(m, 10, 1.0, cfg, 1), ConfigError);
  EXPECT_THROW(draw_samples(m, 0, 1.0, {}, 1), ConfigError);
  cfg = {};
  cfg.source_x_range = {-1.0, 1.0};
  EXPECT_THROW(draw_samples(m, 10, 1.0, cfg, 1), ConfigError);
}
