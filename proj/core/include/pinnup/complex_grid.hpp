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

#include <complex>
#include <cstddef>
#include <filesystem>
#include <vector>

namespace pinnup {

// Regular grid of complex wavefield values, z-major (index = iz * nx + ix).
struct ComplexGrid {
  std::size_t nx = 0, nz = 0;
  double dx = 0.0, dz = 0.0, ox = 0.0, oz = 0.0;
  double frequency_hz = 0.0;
  double source_x = 0.0, source_z = 0.0;
  std::vector<std::complex<double>> values;

  double x(std::size_t ix) const { return ox + static_cast<double>(ix) * dx; }
  double z(std::size_t iz) const { return oz + static_cast<double>(iz) * dz; }
  std::complex<double>& at(std::size_t ix, std::size_t iz) { return values[iz * nx + ix]; }
  const std::complex<double>& at(std::size_t ix, std::size_t iz) const {
    return values[iz * nx + ix];
  }
  bool same_geometry(const ComplexGrid& other) const;
  // Throws ValidationError when sizes or spacing are inconsistent.
  void validate() const;
};

// "PNWF" v1 file; values are stored as float32 (re, im) pairs, so saving a
// loaded grid reproduces the file byte for byte.
void save_wavefield(const ComplexGrid& grid, const std::filesystem::path& path);
ComplexGrid load_wavefield(const std::filesystem::path& path);

// Plain-text dump with header "x,z,re,im", one node per line.
void export_wavefield_csv(const ComplexGrid& grid, const std::filesystem::path& path);

}  // namespace pinnup
