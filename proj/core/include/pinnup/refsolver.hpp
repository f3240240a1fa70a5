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
#include <optional>
#include <string>
#include <vector>

#include "pinnup/banded_lu.hpp"
#include "pinnup/complex_grid.hpp"
#include "pinnup/velocity_model.hpp"

namespace pinnup {

struct GridSpec {
  std::size_t nx = 100, nz = 100;
  double dx = 0.0, dz = 0.0, ox = 0.0, oz = 0.0;

  // nx x nz nodes spanning the model domain edge to edge.
  static GridSpec covering(const VelocityModel& model, std::size_t nx, std::size_t nz);
  // Same domain with (n - 1) * factor + 1 nodes per axis; every node of
  // this grid is a node of the refined one.
  GridSpec refined(std::size_t factor) const;
  void validate() const;
};

struct PMLConfig {
  std::size_t thickness_points = 20;
  // Peak damping (1/s). Unset: chosen from target_reflection.
  std::optional<double> max_damping;
  double exponent = 2.0;
  double target_reflection = 1e-5;
};

struct SolverOptions {
  std::size_t memory_limit_bytes = std::size_t{3} << 30;
  double exclusion_radius = kDefaultExclusionRadius;
};

// Nodes per minimum wavelength below which a warning is issued.
inline constexpr double kMinPointsPerWavelength = 8.0;

double points_per_wavelength(const VelocityModel& model, double frequency_hz,
                             const GridSpec& grid);
std::optional<std::string> dispersion_warning(const VelocityModel& model,
                                              double frequency_hz, const GridSpec& grid);

// 5-point discretization of (omega^2 m + laplacian) on `grid` padded by a
// complex-stretching PML on all four sides. Unknowns of the padded grid are
// ordered z-major. The medium inside the PML is the model clamped at its
// edges.
class HelmholtzProblem {
 public:
  HelmholtzProblem(const VelocityModel& model, double omega, const GridSpec& grid,
                   const PMLConfig& pml, const SolverOptions& options = {});

  std::size_t padded_nx() const { return nx_; }
  std::size_t padded_nz() const { return nz_; }
  std::size_t unknowns() const { return nx_ * nz_; }
  std::size_t padded_index(std::size_t ix, std::size_t iz) const { return iz * nx_ + ix; }
  double padded_x(std::size_t ix) const;
  double padded_z(std::size_t iz) const;

  BandMatrix assemble() const;

  // -omega^2 dm U0 on every padded node with dm != 0.
  std::vector<cplx> scattered_rhs(double sx, double sz) const;
  // Unit point source spread bilinearly onto the four surrounding nodes.
  std::vector<cplx> point_source_rhs(double sx, double sz) const;

  // Assembles, factors and solves; returns the padded solution.
  std::vector<cplx> solve(const std::vector<cplx>& rhs) const;

  ComplexGrid interior(const std::vector<cplx>& padded, double frequency_hz, double sx,
                       double sz) const;

  const std::vector<double>& slowness_squared() const { return m_; }

 private:
  // stretching factor 1 / s(x) at fractional padded index t (axis 0 = x, 1 = z)
  cplx inverse_stretch(double t, std::size_t axis) const;

  const VelocityModel& model_;
  double omega_;
  GridSpec grid_;
  PMLConfig pml_;
  SolverOptions options_;
  std::size_t pad_, nx_, nz_;
  double sigma0_;
  std::vector<double> m_;  // padded squared slowness
};

// Scattered wavefield on `grid` for a point source at (sx, sz).
ComplexGrid solve_scattered(const VelocityModel& model, double omega, double sx, double sz,
                            const GridSpec& grid, const PMLConfig& pml = {},
                            const SolverOptions& options = {});

// Full wavefield of a unit point source, (omega^2 m + laplacian) U = delta.
ComplexGrid solve_point_source(const VelocityModel& model, double omega, double sx,
                               double sz, const GridSpec& grid, const PMLConfig& pml = {},
                               const SolverOptions& options = {});

// Solve on a grid refined by `factor` and keep the nodes of `grid`.
ComplexGrid solve_scattered_refined(const VelocityModel& model, double omega, double sx,
                                    double sz, const GridSpec& grid, std::size_t factor,
                                    const PMLConfig& pml = {},
                                    const SolverOptions& options = {});

}  // namespace pinnup
