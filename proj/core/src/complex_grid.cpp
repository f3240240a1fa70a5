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

#include "pinnup/complex_grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "binary_io.hpp"
#include "pinnup/errors.hpp"

namespace pinnup {

namespace {
constexpr std::string_view kWavefieldMagic = "PNWF";
constexpr std::uint16_t kWavefieldVersion = 1;
}  // namespace

bool ComplexGrid::same_geometry(const ComplexGrid& o) const {
  return nx == o.nx && nz == o.nz && dx == o.dx && dz == o.dz && ox == o.ox && oz == o.oz;
}

void ComplexGrid::validate() const {
  if (nx == 0 || nz == 0) throw ValidationError("wavefield grid: empty grid");
  if (!(dx > 0.0) || !(dz > 0.0)) throw ValidationError("wavefield grid: spacing must be > 0");
  if (values.size() != nx * nz)
    throw ValidationError("wavefield grid: value count does not match nx * nz");
}

void save_wavefield(const ComplexGrid& grid, const std::filesystem::path& path) {
  grid.validate();
  io::ByteWriter w;
  w.magic(kWavefieldMagic);
  w.put<std::uint16_t>(kWavefieldVersion);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(grid.nx));
  w.put<std::uint32_t>(static_cast<std::uint32_t>(grid.nz));
  for (double v : {grid.dx, grid.dz, grid.ox, grid.oz, grid.frequency_hz, grid.source_x,
                   grid.source_z})
    w.put<double>(v);
  for (const auto& c : grid.values) {
    w.put<float>(static_cast<float>(c.real()));
    w.put<float>(static_cast<float>(c.imag()));
  }
  io::write_file(path, w.bytes());
}

ComplexGrid load_wavefield(const std::filesystem::path& path) {
  io::ByteReader r(io::read_file(path), "wavefield file " + path.string());
  r.expect_magic(kWavefieldMagic);
  const auto version = r.get<std::uint16_t>();
  if (version != kWavefieldVersion)
    throw CorruptFileError("wavefield file " + path.string() + ": unsupported version " +
                           std::to_string(version));
  ComplexGrid g;
  g.nx = r.get<std::uint32_t>();
  g.nz = r.get<std::uint32_t>();
  g.dx = r.get<double>();
  g.dz = r.get<double>();
  g.ox = r.get<double>();
  g.oz = r.get<double>();
  g.frequency_hz = r.get<double>();
  g.source_x = r.get<double>();
  g.source_z = r.get<double>();
  r.require(g.nx * g.nz * 2 * sizeof(float));
  g.values.resize(g.nx * g.nz);
  for (auto& c : g.values) {
    const float re = r.get<float>();
    const float im = r.get<float>();
    c = {re, im};
  }
  r.expect_end();
  g.validate();
  return g;
}

void export_wavefield_csv(const ComplexGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "x,z,re,im\n";
  char line[128];
  for (std::size_t iz = 0; iz < grid.nz; ++iz) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const auto& c = grid.at(ix, iz);
      std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g\n", grid.x(ix), grid.z(iz),
                    c.real(), c.imag());
      out << line;
    }
  }
}

}  // namespace pinnup
