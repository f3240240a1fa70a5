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

// Reference computations used only by the test suites. They are written
// independently of the library code they check.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "pinnup/network.hpp"
#include "pinnup/sample_batch.hpp"
#include "pinnup/velocity_model.hpp"

namespace pinnup::oracle {

// Power series for x <= 20, Hankel asymptotic expansion beyond, both in
// long double.
long double bessel_j0(long double x);
long double bessel_y0(long double x);

// Fourth-order central second derivative of f at t with step h. f may be
// real or complex valued.
template <typename F>
auto second_derivative_fd5(F&& f, double t, double h) {
  return (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) - f(t - 2 * h)) /
         (12 * h * h);
}

// Fourth-order central first derivative of f at 0 with step h.
double derivative_fd5(const std::function<double(double)>& f, double h);

// Naive dense evaluation of the network straight from the layer formulas.
std::complex<double> forward_naive(const NetworkParams& params, const Coord& p);

// Standard PE of one physical point computed from scratch.
std::vector<double> encode_naive(const Coord& p, const PEConfig& pe);

// Loss of the batch computed sample by sample with finite-difference-free
// jets from the library (used for the finite-difference gradient check).
double loss_naive(const NetworkParams& params, const SampleBatch& batch, double omega);

// Default PE over the 2.5 km square.
PEConfig default_pe(int bands = 2);

// Small random batch over the default layered model.
SampleBatch random_batch(std::size_t n, double frequency_hz, std::uint64_t seed);

// Relative difference |a - b| / max(|a|, |b|, floor).
double rel_diff(double a, double b, double floor = 1e-300);

}  // namespace pinnup::oracle
