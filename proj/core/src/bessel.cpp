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

#include "pinnup/bessel.hpp"

#include <cmath>
#include <numbers>

#include "pinnup/errors.hpp"

namespace pinnup {

namespace {

// Horner evaluation of c[0] + c[1] t + ... + c[N-1] t^{N-1}.
template <std::size_t N>
double poly(const double (&c)[N], double t) {
  double s = c[N - 1];
  for (std::size_t k = N - 1; k-- > 0;) s = s * t + c[k];
  return s;
}

// Small argument, in powers of (x/3)^2.
constexpr double kJ0Small[] = {1.0,        -2.2499997, 1.2656208, -0.3163866,
                               0.0444479,  -0.0039444, 0.0002100};
constexpr double kY0Small[] = {0.36746691,  0.60559366,  -0.74350384, 0.25300117,
                               -0.04261214, 0.00427916,  -0.00024846};

// Large argument amplitude f0 and phase correction, in powers of 3/x.
constexpr double kAmplitude[] = {0.79788456,  -0.00000077, -0.00552740, -0.00009512,
                                 0.00137237,  -0.00072805, 0.00014476};
constexpr double kPhase[] = {-0.78539816, -0.04166397, -0.00003954, 0.00262573,
                             -0.00054125, -0.00029333, 0.00013558};

struct AmplitudePhase {
  double amplitude;
  double phase;
};

AmplitudePhase large_argument(double x) {
  const double t = 3.0 / x;
  return {poly(kAmplitude, t) / std::sqrt(x), x + poly(kPhase, t)};
}

double j0_small(double x) {
  const double t = (x / 3.0) * (x / 3.0);
  return poly(kJ0Small, t);
}

}  // namespace

double bessel_j0(double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j0: argument must be >= 0");
  if (x <= 3.0) return j0_small(x);
  const auto [amp, phase] = large_argument(x);
  return amp * std::cos(phase);
}

double bessel_y0(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_y0: argument must be > 0");
  if (x <= 3.0) {
    const double t = (x / 3.0) * (x / 3.0);
    return (2.0 / std::numbers::pi) * std::log(0.5 * x) * j0_small(x) + poly(kY0Small, t);
  }
  const auto [amp, phase] = large_argument(x);
  return amp * std::sin(phase);
}

}  // namespace pinnup
