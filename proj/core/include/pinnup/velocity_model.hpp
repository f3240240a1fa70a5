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
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "pinnup/physics.hpp"

namespace pinnup {

inline constexpr double kDefaultBackgroundVelocity = 1.5;  // km/s
inline constexpr double kDefaultExtent = 2.5;              // km

// Gridded velocity over a rectangular domain, stored z-major
// (index = iz * nx + ix) as float, the precision of the on-disk format.
class VelocityModel {
 public:
  VelocityModel(std::size_t nx, std::size_t nz, double dx, double dz, double ox,
                double oz, double v0, std::vector<float> velocity);

  std::size_t nx() const { return nx_; }
  std::size_t nz() const { return nz_; }
  double dx() const { return dx_; }
  double dz() const { return dz_; }
  double ox() const { return ox_; }
  double oz() const { return oz_; }
  double v0() const { return v0_; }
  double m0() const { return 1.0 / (v0_ * v0_); }
  double x_max() const { return ox_ + static_cast<double>(nx_ - 1) * dx_; }
  double z_max() const { return oz_ + static_cast<double>(nz_ - 1) * dz_; }
  std::span<const float> velocity() const { return velocity_; }
  float node(std::size_t ix, std::size_t iz) const { return velocity_[iz * nx_ + ix]; }

  bool contains(double x, double z) const;
  double min_velocity() const;
  double max_velocity() const;

  // Bilinear interpolation; throws DomainError outside the grid.
  double velocity_at(double x, double z) const;
  // Same, but clamps the query onto the grid first (used for PML padding).
  double velocity_at_clamped(double x, double z) const;

  friend bool operator==(const VelocityModel&, const VelocityModel&) = default;

 private:
  double interpolate(double x, double z) const;

  std::size_t nx_, nz_;
  double dx_, dz_, ox_, oz_, v0_;
  std::vector<float> velocity_;
};

struct Layer {
  double top_depth_km;
  double velocity_kms;
};

// Stand-in layered model: tops 0 / 0.6 / 1.3 / 1.9 km at 1.5 / 2.0 / 2.5 / 3.0 km/s.
std::vector<Layer> default_layers();

// Laterally invariant piecewise-constant model on [0, extent]^2. Tops must
// start at 0 and increase strictly; a node at depth z takes the velocity of
// the deepest layer whose top is <= z.
VelocityModel layered_model(std::size_t nx, std::size_t nz, double extent_km,
                            const std::vector<Layer>& layers,
                            double v0 = kDefaultBackgroundVelocity);

// 251 x 251 nodes (10 m spacing) of default_layers() over 2.5 x 2.5 km.
VelocityModel default_model();

// m, dm and the analytic background wavefield at (x, z) for source (sx, sz).
// Throws DomainError outside the model and SingularityError inside the
// exclusion radius.
MediumPoint sample_medium(const VelocityModel& model, double x, double z, double sx,
                          double sz, double omega,
                          double exclusion_radius = kDefaultExclusionRadius);

// "PNVM" v1 little-endian file.
void save_model(const VelocityModel& model, const std::filesystem::path& path);
VelocityModel load_model(const std::filesystem::path& path);

}  // namespace pinnup
