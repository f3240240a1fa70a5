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

#include "pinnup/velocity_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binary_io.hpp"
#include "pinnup/errors.hpp"

namespace pinnup {

namespace {
constexpr std::string_view kModelMagic = "PNVM";
constexpr std::uint16_t kModelVersion = 1;
}  // namespace

VelocityModel::VelocityModel(std::size_t nx, std::size_t nz, double dx, double dz,
                             double ox, double oz, double v0, std::vector<float> velocity)
    : nx_(nx), nz_(nz), dx_(dx), dz_(dz), ox_(ox), oz_(oz), v0_(v0),
      velocity_(std::move(velocity)) {
  if (nx_ < 2 || nz_ < 2) throw ValidationError("velocity model: need at least 2x2 nodes");
  if (!(dx_ > 0.0) || !(dz_ > 0.0) || !std::isfinite(dx_) || !std::isfinite(dz_))
    throw ValidationError("velocity model: spacing must be finite and > 0");
  if (!std::isfinite(ox_) || !std::isfinite(oz_))
    throw ValidationError("velocity model: origin must be finite");
  if (!(v0_ > 0.0) || !std::isfinite(v0_))
    throw ValidationError("velocity model: background velocity must be > 0");
  if (velocity_.size() != nx_ * nz_)
    throw ValidationError("velocity model: grid has " + std::to_string(velocity_.size()) +
                          " values, expected " + std::to_string(nx_ * nz_));
  for (float v : velocity_) {
    if (!(v > 0.0f) || !std::isfinite(v))
      throw ValidationError("velocity model: velocities must be finite and > 0");
  }
}

bool VelocityModel::contains(double x, double z) const {
  return x >= ox_ && x <= x_max() && z >= oz_ && z <= z_max();
}

double VelocityModel::min_velocity() const {
  return *std::min_element(velocity_.begin(), velocity_.end());
}
double VelocityModel::max_velocity() const {
  return *std::max_element(velocity_.begin(), velocity_.end());
}

double VelocityModel::interpolate(double x, double z) const {
  // snap queries within round-off of a node onto it
  auto snap = [](double f) {
    const double r = std::round(f);
    return std::abs(f - r) < 1e-9 ? r : f;
  };
  const double fx = snap((x - ox_) / dx_);
  const double fz = snap((z - oz_) / dz_);
  auto ix = static_cast<std::size_t>(std::clamp(std::floor(fx), 0.0, double(nx_ - 2)));
  auto iz = static_cast<std::size_t>(std::clamp(std::floor(fz), 0.0, double(nz_ - 2)));
  const double tx = fx - double(ix);
  const double tz = fz - double(iz);
  // exact node values when the query hits a node
  const double v00 = node(ix, iz), v10 = node(ix + 1, iz);
  const double v01 = node(ix, iz + 1), v11 = node(ix + 1, iz + 1);
  const double top = tx == 0.0 ? v00 : (tx == 1.0 ? v10 : v00 + tx * (v10 - v00));
  const double bot = tx == 0.0 ? v01 : (tx == 1.0 ? v11 : v01 + tx * (v11 - v01));
  return tz == 0.0 ? top : (tz == 1.0 ? bot : top + tz * (bot - top));
}

double VelocityModel::velocity_at(double x, double z) const {
  if (!contains(x, z)) throw DomainError("velocity model: query point outside the model domain");
  return interpolate(x, z);
}

double VelocityModel::velocity_at_clamped(double x, double z) const {
  return interpolate(std::clamp(x, ox_, x_max()), std::clamp(z, oz_, z_max()));
}

std::vector<Layer> default_layers() {
  return {{0.0, 1.5}, {0.6, 2.0}, {1.3, 2.5}, {1.9, 3.0}};
}

VelocityModel layered_model(std::size_t nx, std::size_t nz, double extent_km,
                            const std::vector<Layer>& layers, double v0) {
  if (layers.empty()) throw ConfigError("layered model: no layers given");
  if (layers.front().top_depth_km != 0.0)
    throw ConfigError("layered model: first layer must start at depth 0");
  for (std::size_t k = 1; k < layers.size(); ++k) {
    if (!(layers[k].top_depth_km > layers[k - 1].top_depth_km))
      throw ConfigError("layered model: layer tops must be strictly increasing");
  }
  for (const auto& layer : layers) {
    if (!(layer.velocity_kms > 0.0)) throw ConfigError("layered model: velocities must be > 0");
  }
  if (nx < 2 || nz < 2 || !(extent_km > 0.0))
    throw ConfigError("layered model: need >= 2 nodes per axis and a positive extent");

  const double dx = extent_km / double(nx - 1);
  const double dz = extent_km / double(nz - 1);
  std::vector<float> v(nx * nz);
  for (std::size_t iz = 0; iz < nz; ++iz) {
    const double z = double(iz) * dz;
    // tolerance keeps nodes that sit on an interface in the deeper layer
    const double tol = 1e-9 * dz;
    double vel = layers.front().velocity_kms;
    for (const auto& layer : layers)
      if (layer.top_depth_km <= z + tol) vel = layer.velocity_kms;
    std::fill_n(v.begin() + iz * nx, nx, static_cast<float>(vel));
  }
  return VelocityModel(nx, nz, dx, dz, 0.0, 0.0, v0, std::move(v));
}

VelocityModel default_model() {
  const auto layers = default_layers();
  return layered_model(251, 251, kDefaultExtent, layers);
}

MediumPoint sample_medium(const VelocityModel& model, double x, double z, double sx,
                          double sz, double omega, double exclusion_radius) {
  const double v = model.velocity_at(x, z);
  MediumPoint pt;
  pt.m = 1.0 / (v * v);
  pt.dm = pt.m - model.m0();
  pt.u0 = background_wavefield(x, z, sx, sz, omega, model.m0(), exclusion_radius);
  return pt;
}

void save_model(const VelocityModel& model, const std::filesystem::path& path) {
  io::ByteWriter w;
  w.magic(kModelMagic);
  w.put<std::uint16_t>(kModelVersion);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(model.nx()));
  w.put<std::uint32_t>(static_cast<std::uint32_t>(model.nz()));
  w.put<double>(model.dx());
  w.put<double>(model.dz());
  w.put<double>(model.ox());
  w.put<double>(model.oz());
  w.put<double>(model.v0());
  for (float v : model.velocity()) w.put<float>(v);
  io::write_file(path, w.bytes());
}

VelocityModel load_model(const std::filesystem::path& path) {
  io::ByteReader r(io::read_file(path), "model file " + path.string());
  r.expect_magic(kModelMagic);
  const auto version = r.get<std::uint16_t>();
  if (version != kModelVersion)
    throw CorruptFileError("model file " + path.string() + ": unsupported version " +
                           std::to_string(version));
  const std::size_t nx = r.get<std::uint32_t>();
  const std::size_t nz = r.get<std::uint32_t>();
  const double dx = r.get<double>();
  const double dz = r.get<double>();
  const double ox = r.get<double>();
  const double oz = r.get<double>();
  const double v0 = r.get<double>();
  r.require(nx * nz * sizeof(float));
  std::vector<float> v(nx * nz);
  for (auto& value : v) value = r.get<float>();
  r.expect_end();
  return VelocityModel(nx, nz, dx, dz, ox, oz, v0, std::move(v));
}

}  // namespace pinnup
