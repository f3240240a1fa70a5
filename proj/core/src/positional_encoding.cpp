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

#include "pinnup/positional_encoding.hpp"

#include <cmath>
#include <numbers>

#include "pinnup/errors.hpp"

namespace pinnup {

void PEConfig::validate() const {
  if (num_bands < 0) throw ConfigError("positional encoding: num_bands must be >= 0");
  if (per_coordinate_dim() == 0)
    throw ConfigError("positional encoding: empty encoding (no raw coordinate and no bands)");
  for (const auto& axis : coord_scale) {
    if (!(axis.hi > axis.lo) || !std::isfinite(axis.lo) || !std::isfinite(axis.hi))
      throw ConfigError("positional encoding: degenerate coordinate axis");
  }
}

PEConfig make_pe_config(int num_bands, bool include_raw, AxisScale x_axis,
                        AxisScale z_axis, AxisScale source_axis) {
  PEConfig pe;
  pe.num_bands = num_bands;
  pe.include_raw = include_raw;
  pe.coord_scale = {x_axis, z_axis, source_axis};
  pe.validate();
  return pe;
}

void positional_encode_into(const Coord& p, const PEConfig& pe,
                            std::span<double> out) {
  const std::size_t per = pe.per_coordinate_dim();
  const std::size_t d = 3 * per;
  double* value = out.data();
  double* dx = value + d;
  double* dxx = dx + per;
  double* dz = dxx + per;
  double* dzz = dz + per;

  for (std::size_t k = 0; k < 3; ++k) {
    const double slope = pe.coord_scale[k].slope();
    const double u = pe.coord_scale[k].normalize(p[k]);
    double* v = value + k * per;
    // derivative channels only exist for the spatial axes
    double* d1 = k == 0 ? dx : (k == 1 ? dz : nullptr);
    double* d2 = k == 0 ? dxx : (k == 1 ? dzz : nullptr);
    std::size_t j = 0;
    if (pe.include_raw) {
      v[j] = u;
      if (d1) {
        d1[j] = slope;
        d2[j] = 0.0;
      }
      ++j;
    }
    double freq = std::numbers::pi;
    for (int band = 0; band < pe.num_bands; ++band, freq *= 2.0) {
      const double s = std::sin(freq * u);
      const double c = std::cos(freq * u);
      v[j] = s;
      v[j + 1] = c;
      if (d1) {
        const double f1 = freq * slope;
        const double f2 = f1 * f1;
        d1[j] = f1 * c;
        d1[j + 1] = -f1 * s;
        d2[j] = -f2 * s;
        d2[j + 1] = -f2 * c;
      }
      j += 2;
    }
  }
}

EncodedPoint positional_encode_with_derivatives(const Coord& p,
                                                const PEConfig& pe) {
  const std::size_t per = pe.per_coordinate_dim();
  const std::size_t d = 3 * per;
  std::vector<double> buf(d + 4 * per);
  positional_encode_into(p, pe, buf);
  EncodedPoint out;
  auto it = buf.begin();
  out.value.assign(it, it + d);
  it += d;
  out.dx.assign(it, it + per);
  it += per;
  out.dxx.assign(it, it + per);
  it += per;
  out.dz.assign(it, it + per);
  it += per;
  out.dzz.assign(it, it + per);
  return out;
}

std::vector<double> positional_encode(const Coord& p, const PEConfig& pe) {
  return positional_encode_with_derivatives(p, pe).value;
}

}  // namespace pinnup
