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

#include "pinnup/refsolver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pinnup/errors.hpp"
#include "pinnup/physics.hpp"

namespace pinnup {

GridSpec GridSpec::covering(const VelocityModel& model, std::size_t nx, std::size_t nz) {
  if (nx < 2 || nz < 2) throw ConfigError("grid: need at least 2 nodes per axis");
  GridSpec g;
  g.nx = nx;
  g.nz = nz;
  g.ox = model.ox();
  g.oz = model.oz();
  g.dx = (model.x_max() - model.ox()) / double(nx - 1);
  g.dz = (model.z_max() - model.oz()) / double(nz - 1);
  return g;
}

GridSpec GridSpec::refined(std::size_t factor) const {
  if (factor == 0) throw ConfigError("grid: refinement factor must be >= 1");
  GridSpec g = *this;
  g.nx = (nx - 1) * factor + 1;
  g.nz = (nz - 1) * factor + 1;
  g.dx = dx / double(factor);
  g.dz = dz / double(factor);
  return g;
}

void GridSpec::validate() const {
  if (nx < 2 || nz < 2) throw ConfigError("grid: need at least 2 nodes per axis");
  if (!(dx > 0.0) || !(dz > 0.0)) throw ConfigError("grid: spacing must be > 0");
}

double points_per_wavelength(const VelocityModel& model, double frequency_hz,
                             const GridSpec& grid) {
  const double lambda = model.min_velocity() / frequency_hz;
  return lambda / std::max(grid.dx, grid.dz);
}

std::optional<std::string> dispersion_warning(const VelocityModel& model,
                                              double frequency_hz, const GridSpec& grid) {
  const double ppw = points_per_wavelength(model, frequency_hz, grid);
  if (ppw >= kMinPointsPerWavelength) return std::nullopt;
  std::ostringstream msg;
  msg << "grid resolves the minimum wavelength with only " << ppw
      << " points (< " << kMinPointsPerWavelength
      << "); expect numerical dispersion, use a finer grid";
  return msg.str();
}

HelmholtzProblem::HelmholtzProblem(const VelocityModel& model, double omega,
                                   const GridSpec& grid, const PMLConfig& pml,
                                   const SolverOptions& options)
    : model_(model), omega_(omega), grid_(grid), pml_(pml), options_(options) {
  grid_.validate();
  if (!(omega > 0.0)) throw ConfigError("helmholtz: omega must be > 0");
  if (!(pml_.exponent >= 0.0)) throw ConfigError("helmholtz: PML exponent must be >= 0");
  pad_ = pml_.thickness_points;
  nx_ = grid_.nx + 2 * pad_;
  nz_ = grid_.nz + 2 * pad_;

  const std::size_t bytes = BandMatrix::storage_bytes(nx_ * nz_, nx_, nx_);
  if (bytes > options_.memory_limit_bytes) {
    std::ostringstream msg;
    msg << "helmholtz: band storage for " << nx_ << " x " << nz_ << " padded grid needs "
        << bytes / (1u << 20) << " MiB, above the limit of "
        << options_.memory_limit_bytes / (1u << 20) << " MiB";
    throw CapacityError(msg.str());
  }

  if (pml_.max_damping) {
    sigma0_ = *pml_.max_damping;
  } else if (pad_ > 0) {
    const double thickness = double(pad_) * std::min(grid_.dx, grid_.dz);
    sigma0_ = (pml_.exponent + 1.0) * model_.max_velocity() *
              std::log(1.0 / pml_.target_reflection) / (2.0 * thickness);
  } else {
    sigma0_ = 0.0;
  }

  m_.resize(nx_ * nz_);
  for (std::size_t iz = 0; iz < nz_; ++iz)
    for (std::size_t ix = 0; ix < nx_; ++ix) {
      const double v = model_.velocity_at_clamped(padded_x(ix), padded_z(iz));
      m_[padded_index(ix, iz)] = 1.0 / (v * v);
    }
}

double HelmholtzProblem::padded_x(std::size_t ix) const {
  return grid_.ox + (double(ix) - double(pad_)) * grid_.dx;
}
double HelmholtzProblem::padded_z(std::size_t iz) const {
  return grid_.oz + (double(iz) - double(pad_)) * grid_.dz;
}

cplx HelmholtzProblem::inverse_stretch(double t, std::size_t axis) const {
  if (pad_ == 0) return 1.0;
  const double n = double(axis == 0 ? grid_.nx : grid_.nz);
  const double p = double(pad_);
  // depth into the layer, in grid cells
  double depth = 0.0;
  if (t < p) depth = p - t;
  else if (t > p + n - 1.0) depth = t - (p + n - 1.0);
  if (depth <= 0.0) return 1.0;
  const double sigma = sigma0_ * std::pow(depth / p, pml_.exponent);
  // outgoing waves behave as exp(-i k r); s = 1 - i sigma / omega damps them
  return 1.0 / cplx(1.0, -sigma / omega_);
}

BandMatrix HelmholtzProblem::assemble() const {
  const std::size_t n = nx_ * nz_;
  BandMatrix a(n, nx_, nx_);
  const double om2 = omega_ * omega_;
  const double idx2 = 1.0 / (grid_.dx * grid_.dx);
  const double idz2 = 1.0 / (grid_.dz * grid_.dz);
  for (std::size_t iz = 0; iz < nz_; ++iz) {
    const cplx sz = inverse_stretch(double(iz), 1);
    const cplx czm = sz * inverse_stretch(double(iz) - 0.5, 1) * idz2;
    const cplx czp = sz * inverse_stretch(double(iz) + 0.5, 1) * idz2;
    for (std::size_t ix = 0; ix < nx_; ++ix) {
      const cplx sx = inverse_stretch(double(ix), 0);
      const cplx cxm = sx * inverse_stretch(double(ix) - 0.5, 0) * idx2;
      const cplx cxp = sx * inverse_stretch(double(ix) + 0.5, 0) * idx2;
      const std::size_t k = padded_index(ix, iz);
      a.at(k, k) = om2 * m_[k] - (cxm + cxp + czm + czp);
      if (ix > 0) a.at(k, k - 1) = cxm;
      if (ix + 1 < nx_) a.at(k, k + 1) = cxp;
      if (iz > 0) a.at(k, k - nx_) = czm;
      if (iz + 1 < nz_) a.at(k, k + nx_) = czp;
    }
  }
  return a;
}

std::vector<cplx> HelmholtzProblem::scattered_rhs(double sx, double sz) const {
  std::vector<cplx> rhs(nx_ * nz_);
  const double m0 = model_.m0();
  const double om2 = omega_ * omega_;
  for (std::size_t iz = 0; iz < nz_; ++iz)
    for (std::size_t ix = 0; ix < nx_; ++ix) {
      const std::size_t k = padded_index(ix, iz);
      const double dm = m_[k] - m0;
      if (dm == 0.0) continue;
      rhs[k] = -om2 * dm *
               background_wavefield(padded_x(ix), padded_z(iz), sx, sz, omega_, m0,
                                    options_.exclusion_radius);
    }
  return rhs;
}

std::vector<cplx> HelmholtzProblem::point_source_rhs(double sx, double sz) const {
  const double fx = (sx - grid_.ox) / grid_.dx + double(pad_);
  const double fz = (sz - grid_.oz) / grid_.dz + double(pad_);
  if (fx < 0.0 || fz < 0.0 || fx > double(nx_ - 1) || fz > double(nz_ - 1))
    throw DomainError("point source lies outside the padded grid");
  const auto ix = static_cast<std::size_t>(std::min(std::floor(fx), double(nx_ - 2)));
  const auto iz = static_cast<std::size_t>(std::min(std::floor(fz), double(nz_ - 2)));
  const double tx = fx - double(ix), tz = fz - double(iz);
  const double area = 1.0 / (grid_.dx * grid_.dz);
  std::vector<cplx> rhs(nx_ * nz_);
  rhs[padded_index(ix, iz)] += (1 - tx) * (1 - tz) * area;
  rhs[padded_index(ix + 1, iz)] += tx * (1 - tz) * area;
  rhs[padded_index(ix, iz + 1)] += (1 - tx) * tz * area;
  rhs[padded_index(ix + 1, iz + 1)] += tx * tz * area;
  return rhs;
}

std::vector<cplx> HelmholtzProblem::solve(const std::vector<cplx>& rhs) const {
  if (rhs.size() != unknowns()) throw ShapeError("helmholtz: right-hand side size mismatch");
  bool all_zero = true;
  for (const auto& v : rhs) all_zero = all_zero && v == cplx{};
  if (all_zero) return std::vector<cplx>(rhs.size());
  return BandedLU(assemble()).solve(rhs);
}

ComplexGrid HelmholtzProblem::interior(const std::vector<cplx>& padded, double frequency_hz,
                                       double sx, double sz) const {
  ComplexGrid g;
  g.nx = grid_.nx;
  g.nz = grid_.nz;
  g.dx = grid_.dx;
  g.dz = grid_.dz;
  g.ox = grid_.ox;
  g.oz = grid_.oz;
  g.frequency_hz = frequency_hz;
  g.source_x = sx;
  g.source_z = sz;
  g.values.resize(g.nx * g.nz);
  for (std::size_t iz = 0; iz < g.nz; ++iz)
    for (std::size_t ix = 0; ix < g.nx; ++ix)
      g.at(ix, iz) = padded[padded_index(ix + pad_, iz + pad_)];
  return g;
}

namespace {
double hz(double omega) { return omega / (2.0 * std::numbers::pi); }
}  // namespace

ComplexGrid solve_scattered(const VelocityModel& model, double omega, double sx, double sz,
                            const GridSpec& grid, const PMLConfig& pml,
                            const SolverOptions& options) {
  HelmholtzProblem problem(model, omega, grid, pml, options);
  return problem.interior(problem.solve(problem.scattered_rhs(sx, sz)), hz(omega), sx, sz);
}

ComplexGrid solve_point_source(const VelocityModel& model, double omega, double sx,
                               double sz, const GridSpec& grid, const PMLConfig& pml,
                               const SolverOptions& options) {
  HelmholtzProblem problem(model, omega, grid, pml, options);
  return problem.interior(problem.solve(problem.point_source_rhs(sx, sz)), hz(omega), sx, sz);
}

ComplexGrid solve_scattered_refined(const VelocityModel& model, double omega, double sx,
                                    double sz, const GridSpec& grid, std::size_t factor,
                                    const PMLConfig& pml, const SolverOptions& options) {
  PMLConfig fine_pml = pml;
  fine_pml.thickness_points = pml.thickness_points * factor;
  const ComplexGrid fine =
      solve_scattered(model, omega, sx, sz, grid.refined(factor), fine_pml, options);
  ComplexGrid out = fine;
  out.nx = grid.nx;
  out.nz = grid.nz;
  out.dx = grid.dx;
  out.dz = grid.dz;
  out.values.assign(grid.nx * grid.nz, {});
  for (std::size_t iz = 0; iz < grid.nz; ++iz)
    for (std::size_t ix = 0; ix < grid.nx; ++ix)
      out.at(ix, iz) = fine.at(ix * factor, iz * factor);
  return out;
}

}  // namespace pinnup
