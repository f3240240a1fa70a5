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
#include <filesystem>
#include <cstring>
#include <fstream>
#include <random>

#include "pinnup/errors.hpp"
#include "pinnup/velocity_model.hpp"

using namespace pinnup;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("pinnup_test_model_" + name);
}

}  // namespace

TEST(VelocityModel, HomogeneousLayerHasZeroPerturbation) {
  const VelocityModel m = layered_model(30, 30, 2.5, {{0.0, 1.5}});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (int i = 0; i < 200; ++i) {
    const MediumPoint p = sample_medium(m, u(rng), u(rng), 1.0, 0.025, 10.0);
    EXPECT_EQ(p.dm, 0.0);
  }
}

TEST(VelocityModel, LayerLookup) {
  const VelocityModel m = layered_model(100, 100, 2.5, default_layers());
  for (double x = 0.0; x <= 2.5; x += 0.1) EXPECT_EQ(m.velocity_at(x, 1.0), 2.0);
  const MediumPoint p = sample_medium(m, 0.9, 1.5, 1.0, 0.025, 4.0);
  EXPECT_NEAR(p.dm, 1.0 / 6.25 - 1.0 / 2.25, 1e-12);
  EXPECT_NEAR(p.dm, -0.28444, 1e-5);
  EXPECT_EQ(m.x_max(), 2.5);
  EXPECT_EQ(m.z_max(), 2.5);
}

TEST(VelocityModel, DefaultModelIsTheFourLayerStandIn) {
  const VelocityModel m = default_model();
  EXPECT_EQ(m.nx(), 251u);
  EXPECT_EQ(m.v0(), 1.5);
  EXPECT_EQ(m.velocity_at(1.0, 0.1), 1.5);
  EXPECT_EQ(m.velocity_at(1.0, 2.4), 3.0);
  EXPECT_EQ(m.min_velocity(), 1.5);
  EXPECT_EQ(m.max_velocity(), 3.0);
}

TEST(VelocityModel, InterpolationIdentityAndBilinearity) {
  std::vector<float> v{1.5f, 2.0f, 2.5f, 3.0f};
  const VelocityModel m(2, 2, 1.0, 1.0, 0.0, 0.0, 1.5, v);
  EXPECT_EQ(m.velocity_at(0.0, 0.0), 1.5);
  EXPECT_EQ(m.velocity_at(1.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(m.velocity_at(0.5, 0.0), 1.75);
  EXPECT_DOUBLE_EQ(m.velocity_at(0.5, 0.5), 2.25);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double w = m.velocity_at(u(rng), u(rng));
    EXPECT_GE(w, 1.5);
    EXPECT_LE(w, 3.0);
  }
}

TEST(VelocityModel, LateralInvarianceAndSlownessConsistency) {
  const VelocityModel m = layered_model(64, 80, 2.5, default_layers());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (int i = 0; i < 200; ++i) {
    const double z = u(rng);
    EXPECT_EQ(m.velocity_at(u(rng), z), m.velocity_at(u(rng), z));
    const double x = u(rng);
    if (std::hypot(x - 1.2, z - 0.025) < 1e-3) continue;
    const MediumPoint p = sample_medium(m, x, z, 1.2, 0.025, 6.0);
    EXPECT_NEAR(p.dm + m.m0(), p.m, 1e-12);
    EXPECT_GT(p.m, 0.0);
  }
}

TEST(VelocityModel, Errors) {
  EXPECT_THROW(layered_model(10, 10, 2.5, {{0.0, 1.5}, {0.5, 2.0}, {0.4, 2.5}}), ConfigError);
  EXPECT_THROW(layered_model(10, 10, 2.5, {{0.1, 1.5}}), ConfigError);
  EXPECT_THROW(layered_model(10, 10, 2.5, {}), ConfigError);
  EXPECT_THROW(VelocityModel(2, 2, 1.0, 1.0, 0.0, 0.0, 1.5, {1.0f, 0.0f, 1.0f, 1.0f}), ValidationError);
  EXPECT_THROW(VelocityModel(2, 2, 1.0, 1.0, 0.0, 0.0, 1.5, {1.0f}), ValidationError);
  const VelocityModel m = default_model();
  EXPECT_THROW(m.velocity_at(2.6, 1.0), DomainError);
  EXPECT_THROW(sample_medium(m, 1.0, -0.1, 1.0, 0.025, 1.0), DomainError);
  EXPECT_THROW(sample_medium(m, 1.0, 0.025, 1.0, 0.025, 1.0), SingularityError);
}

TEST(VelocityModel, FileRoundTrip) {
  const VelocityModel m = layered_model(37, 23, 2.5, default_layers());
  const fs::path a = temp_file("a.pnvm"), b = temp_file("b.pnvm");
  save_model(m, a);
  const VelocityModel back = load_model(a);
  EXPECT_EQ(back, m);
  save_model(back, b);
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sa.size(), 4 + 2 + 8 + 5 * 8 + 37 * 23 * 4u);
  EXPECT_EQ(sa.substr(0, 4), "PNVM");
}

TEST(VelocityModel, CorruptFiles) {
  const VelocityModel m = layered_model(10, 10, 2.5, default_layers());
  const fs::path p = temp_file("c.pnvm");
  save_model(m, p);
  std::string bytes;
  {
    std::ifstream in(p, std::ios::binary);
    bytes.assign((std::istreambuf_iterator<char>(in)), {});
  }
  auto write = [&](const std::string& s) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << s;
  };
  write(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(load_model(p), CorruptFileError);
  std::string bad = bytes;
  bad[0] = 'X';
  write(bad);
  EXPECT_THROW(load_model(p), CorruptFileError);
  bad = bytes;
  const float zero = 0.0f;
  std::memcpy(bad.data() + bytes.size() - 4, &zero, 4);
  write(bad);
  EXPECT_THROW(load_model(p), ValidationError);
  EXPECT_THROW(load_model(temp_file("missing.pnvm")), IoError);
}
