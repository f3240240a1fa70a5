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

#include "pinnup/adam.hpp"
#include "pinnup/errors.hpp"

using namespace pinnup;

TEST(Adam, FirstStepMovesByLearningRateAgainstGradientSign) {
  std::vector<double> params{1.0, -2.0, 0.5};
  const std::vector<double> grad{3.0, -0.01, 1e3};
  AdamState st = AdamState::zeros(3);
  adam_step(st, params, grad, 1e-3);
  EXPECT_EQ(st.step, 1u);
  EXPECT_NEAR(params[0], 1.0 - 1e-3, 1e-9);
  EXPECT_NEAR(params[1], -2.0 + 1e-3, 1e-9);
  EXPECT_NEAR(params[2], 0.5 - 1e-3, 1e-9);
}

TEST(Adam, ZeroGradientLeavesParametersUnchanged) {
  std::vector<double> params{1.0, 2.0};
  const std::vector<double> grad{0.0, 0.0};
  AdamState st = AdamState::zeros(2);
  for (int i = 0; i < 5; ++i) adam_step(st, params, grad, 0.1);
  EXPECT_EQ(params, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(st.step, 5u);
}

TEST(Adam, MatchesReferenceRecurrence) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  std::vector<double> params(4, 0.3), ref = params, m(4, 0.0), v(4, 0.0);
  AdamState st = AdamState::zeros(4);
  for (int t = 1; t <= 20; ++t) {
    std::vector<double> g(4);
    for (double& x : g) x = n(rng);
    adam_step(st, params, g, 0.01);
    for (int i = 0; i < 4; ++i) {
      m[i] = 0.9 * m[i] + 0.1 * g[i];
      v[i] = 0.999 * v[i] + 0.001 * g[i] * g[i];
      const double mh = m[i] / (1 - std::pow(0.9, t)), vh = v[i] / (1 - std::pow(0.999, t));
      ref[i] -= 0.01 * mh / (std::sqrt(vh) + 1e-8);
    }
  }
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(params[i], ref[i], 1e-13);
}

TEST(Adam, DeterministicTrajectories) {
  auto run = [] {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n;
    std::vector<double> p(10, 0.0);
    AdamState st = AdamState::zeros(10);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> g(10);
      for (double& x : g) x = n(rng);
      adam_step(st, p, g, 1e-2);
    }
    return std::make_pair(p, st);
  };
  const auto a = run(), b = run();
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second, b.second);
}

TEST(Adam, ShapeAndRateErrors) {
  std::vector<double> p(3, 0.0), g(2, 0.0);
  AdamState st = AdamState::zeros(3);
  EXPECT_THROW(adam_step(st, p, g, 1e-3), ShapeError);
  g.resize(3);
  EXPECT_THROW(adam_step(st, p, g, 0.0), ConfigError);
  AdamState wrong = AdamState::zeros(4);
  EXPECT_THROW(adam_step(wrong, p, g, 1e-3), ShapeError);
}
