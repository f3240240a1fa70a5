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

#include "pinnup/network.hpp"

namespace pinnup {

inline constexpr double kDefaultExclusionRadius = 1e-3;  // km

// Medium quantities at one collocation point.
struct MediumPoint {
  double m = 0.0;   // squared slowness, s^2/km^2
  double dm = 0.0;  // m - m0
  std::complex<double> u0;
};

// H0^(2)(x) = J0(x) - i Y0(x), x > 0.
std::complex<double> hankel2_0(double x);

// Analytic wavefield (i/4) H0^(2)(omega sqrt(m0) r) of a unit point source in
// a homogeneous medium. Throws SingularityError when r < exclusion_radius.
std::complex<double> background_wavefield(double x, double z, double sx, double sz,
                                          double omega, double m0,
                                          double exclusion_radius = kDefaultExclusionRadius);

// omega^2 m value + (d2dx2 + d2dz2) + omega^2 dm u0.
std::complex<double> pde_residual(const EvalJet& jet, const MediumPoint& pt,
                                  double omega);

}  // namespace pinnup
