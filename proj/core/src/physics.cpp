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

#include "pinnup/physics.hpp"

#include <cmath>

#include "pinnup/bessel.hpp"
#include "pinnup/errors.hpp"

namespace pinnup {

std::complex<double> hankel2_0(double x) {
  return {bessel_j0(x), -bessel_y0(x)};
}

std::complex<double> background_wavefield(double x, double z, double sx, double sz,
                                          double omega, double m0,
                                          double exclusion_radius) {
  if (!(omega > 0.0)) throw DomainError("background_wavefield: omega must be > 0");
  if (!(m0 > 0.0)) throw DomainError("background_wavefield: m0 must be > 0");
  const double r = std::hypot(x - sx, z - sz);
  if (r < exclusion_radius || r == 0.0)
    throw SingularityError("background_wavefield: point lies inside the source exclusion radius");
  // (i/4)(J0 - i Y0) = Y0/4 + i J0/4
  const std::complex<double> h = hankel2_0(omega * std::sqrt(m0) * r);
  return {-0.25 * h.imag(), 0.25 * h.real()};
}

std::complex<double> pde_residual(const EvalJet& jet, const MediumPoint& pt,
                                  double omega) {
  const double om2 = omega * omega;
  return (om2 * pt.m) * jet.value + (jet.d2dx2 + jet.d2dz2) + (om2 * pt.dm) * pt.u0;
}

}  // namespace pinnup
