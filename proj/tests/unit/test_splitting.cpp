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
#include <random>

#include "oracles.hpp"
#include "pinnup/errors.hpp"
#include "pinnup/splitting.hpp"

using namespace pinnup;

namespace {

NetworkParams trained_like(std::vector<std::size_t> widths, std::uint64_t seed) {
  NetworkParams p = init_random(std::move(widths), oracle::default_pe(), 1.0, seed);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 0.3);
  for (std::size_t l = 0; l < p.layer_count(); ++l)
    for (double& b : p.bias(l)) b = n(rng);
  return p;
}

SplitConfig exact(std::size_t n, bool preserve = true) {
  SplitConfig cfg;
  cfg.factor = n;
  cfg.noise_rel_std = 0.0;
  cfg.preserve_output_bias = preserve;
  return cfg;
}

}  // namespace

TEST(Splitting, FactorOneWithoutNoiseIsIdentity) {
  const NetworkParams p = trained_like({4, 4}, 1);
  EXPECT_EQ(split_network(p, exact(1)), p);
}

TEST(Splitting, WidthsAndParameterCount) {
  const NetworkParams p = trained_like({4, 4}, 2);
  const NetworkParams s = split_network(p, exact(4));
  EXPECT_EQ(s.hidden_widths(), (std::vector<std::size_t>{16, 16}));
  EXPECT_EQ(p.parameter_count(), 94u);
  EXPECT_EQ(s.parameter_count(), 562u);
  EXPECT_EQ(split_network(s, exact(4)).hidden_widths(), (std::vector<std::size_t>{64, 64}));
}

TEST(Splitting, PreservesFunctionExactly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (const auto& widths : {std::vector<std::size_t>{4, 4}, std::vector<std::size_t>{16, 16},
                             std::vector<std::size_t>{3, 5, 2}}) {
    const NetworkParams p = trained_like(widths, 4);
    for (std::size_t n : {2u, 3u, 4u}) {
      const NetworkParams s = split_network(p, exact(n));
      for (int i = 0; i < 1000; ++i) {
        const Coord x{u(rng), u(rng), u(rng)};
        const auto a = forward(p, x);
        EXPECT_LE(std::abs(forward(s, x) - a), 1e-12 * (1.0 + std::abs(a)));
      }
      EXPECT_LE(verify_function_preservation(p, s, 1000), 1e-12);
    }
  }
}

TEST(Splitting, LiteralOutputBiasShiftsByConstant) {
  const NetworkParams p = trained_like({4, 4}, 5);
  const std::complex<double> b(p.bias(2)[0], p.bias(2)[1]);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (std::size_t n : {2u, 4u}) {
    const NetworkParams s = split_network(p, exact(n, false));
    const std::complex<double> expected = -(1.0 - 1.0 / n) * b;
    for (int i = 0; i < 1000; ++i) {
      const Coord x{u(rng), u(rng), u(rng)};
      EXPECT_LE(std::abs(forward(s, x) - forward(p, x) - expected), 1e-12);
    }
    EXPECT_NEAR(verify_function_preservation(p, s, 200), std::abs(expected), 1e-12);
  }
}

TEST(Splitting, HiddenActivationsAreCopies) {
  const NetworkParams p = trained_like({4, 3}, 7);
  const std::size_t n = 3;
  const NetworkParams s = split_network(p, exact(n));
  const Coord x{0.4, 1.8, 1.1};
  const auto before = hidden_activations(p, x), after = hidden_activations(s, x);
  for (std::size_t l = 0; l < before.size(); ++l) {
    const std::size_t h = before[l].size();
    ASSERT_EQ(after[l].size(), n * h);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t j = 0; j < h; ++j)
        EXPECT_NEAR(after[l][c * h + j], before[l][j], 1e-14);
  }
}

TEST(Splitting, OffspringGradientsAreTiedWithoutNoise) {
  const NetworkParams p = trained_like({4, 4}, 8);
  const std::size_t n = 4;
  const NetworkParams s = split_network(p, exact(n));
  const SampleBatch batch = oracle::random_batch(200, 2.0, 9);
  const LossGradient g = loss_and_gradient(s, batch, batch.omega);
  // Incoming weights of offspring c * 4 + j in the first layer.
  const LayerShape& l0 = s.shape(0);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t c = 1; c < n; ++c)
      for (std::size_t k = 0; k < l0.cols; ++k) {
        const double a = g.grad[l0.weight_offset + j * l0.cols + k];
        const double b = g.grad[l0.weight_offset + (c * 4 + j) * l0.cols + k];
        EXPECT_NEAR(a, b, 1e-9 * (1.0 + std::fabs(a)));
      }
}

TEST(Splitting, NoiseBreaksSymmetryOnHiddenLayersOnly) {
  const NetworkParams p = trained_like({4, 4}, 10);
  SplitConfig cfg = exact(4);
  cfg.noise_rel_std = 1e-2;
  cfg.seed = 11;
  const NetworkParams s = split_network(p, cfg);
  const NetworkParams clean = split_network(p, exact(4));
  EXPECT_EQ(split_network(p, cfg), s);
  for (std::size_t l = 0; l + 1 < s.layer_count(); ++l) {
    double diff = 0.0;
    for (std::size_t i = 0; i < s.weights(l).size(); ++i)
      diff = std::max(diff, std::fabs(s.weights(l)[i] - clean.weights(l)[i]));
    EXPECT_GT(diff, 0.0);
    EXPECT_LT(diff, 0.1);
  }
  const std::size_t last = s.layer_count() - 1;
  for (std::size_t i = 0; i < s.weights(last).size(); ++i)
    EXPECT_EQ(s.weights(last)[i], clean.weights(last)[i]);
  EXPECT_LT(verify_function_preservation(p, s, 200), 0.5);
}

TEST(Splitting, Errors) {
  const NetworkParams p = trained_like({4, 4}, 12);
  EXPECT_THROW(split_network(p, exact(0)), ConfigError);
  SplitConfig neg = exact(2);
  neg.noise_rel_std = -1.0;
  EXPECT_THROW(split_network(p, neg), ConfigError);
  const NetworkParams other = init_random({4, 4}, oracle::default_pe(3), 1.0, 1);
  EXPECT_THROW(verify_function_preservation(p, other, 10), ShapeError);
  EXPECT_EQ(verify_function_preservation(p, p, 100), 0.0);
}
