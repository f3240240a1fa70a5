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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace pinnup {

// Physical input coordinates (x, z, s_x) in km.
using Coord = std::array<double, 3>;

// Affine map of one physical axis [lo, hi] onto [-1, 1].
struct AxisScale {
  double lo = 0.0;
  double hi = 2.5;

  double slope() const { return 2.0 / (hi - lo); }
  double normalize(double p) const { return (p - lo) * slope() - 1.0; }

  friend bool operator==(const AxisScale&, const AxisScale&) = default;
};

// Sin/cos band encoding of each normalized coordinate:
//   [u, sin(pi u), cos(pi u), ..., sin(2^{L-1} pi u), cos(2^{L-1} pi u)]
struct PEConfig {
  int num_bands = 2;
  bool include_raw = true;
  std::array<AxisScale, 3> coord_scale{};

  std::size_t per_coordinate_dim() const {
    return (include_raw ? 1u : 0u) + 2u * static_cast<std::size_t>(num_bands);
  }
  std::size_t encoded_dim() const { return 3 * per_coordinate_dim(); }

  // Throws ConfigError on negative band count, empty encoding or degenerate axes.
  void validate() const;

  friend bool operator==(const PEConfig&, const PEConfig&) = default;
};

// PE config whose three axes (x, z, s_x) all span [lo, hi].
PEConfig make_pe_config(int num_bands, bool include_raw, AxisScale x_axis,
                        AxisScale z_axis, AxisScale source_axis);

std::vector<double> positional_encode(const Coord& p, const PEConfig& pe);

// Encoding together with its first and second derivatives with respect to
// physical x and z. Only the x block of the x channels (and the z block of
// the z channels) can be nonzero, so they are stored compactly with length
// per_coordinate_dim().
struct EncodedPoint {
  std::vector<double> value;
  std::vector<double> dx, dxx;
  std::vector<double> dz, dzz;
};

EncodedPoint positional_encode_with_derivatives(const Coord& p,
                                                const PEConfig& pe);

// Writes the same quantities into caller-provided storage laid out as
// [value(d) | dx(k) | dxx(k) | dz(k) | dzz(k)], d = encoded_dim(),
// k = per_coordinate_dim().
void positional_encode_into(const Coord& p, const PEConfig& pe,
                            std::span<double> out);

}  // namespace pinnup
