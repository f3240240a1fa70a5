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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pinnup/trainer.hpp"
#include "pinnup/velocity_model.hpp"

namespace pinnup::cli {

// Either a model file or a layered-model description.
struct ModelSpec {
  std::optional<std::filesystem::path> path;
  std::vector<Layer> layers = default_layers();
  std::size_t nx = 251, nz = 251;
  double extent_km = kDefaultExtent;
  double v0 = kDefaultBackgroundVelocity;

  VelocityModel build() const;
};

// Where ladder runs evaluate themselves against the FD reference.
struct ProbeSpec {
  double source_x = 1.0;
  std::size_t nx = 100, nz = 100;
  std::size_t pml_points = 20;
  std::size_t refine = 1;  // FD grid refinement factor
};

struct RunConfig {
  ModelSpec model;
  LadderConfig ladder;
  ProbeSpec probe;
  std::optional<std::filesystem::path> out_dir;  // --out takes precedence
  std::uint64_t seed = 1;
};

// Parses a JSON run configuration. Every problem (unknown key, wrong type,
// out-of-range value) is collected and reported together in one ConfigError.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace pinnup::cli
