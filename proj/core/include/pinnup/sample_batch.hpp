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
#include <cstdint>
#include <vector>

namespace pinnup {

// Collocation points (x, z, s_x) with the medium quantities the loss needs.
// Struct-of-arrays; every array has size() entries.
struct SampleBatch {
  std::vector<double> x, z, sx;  // km
  double sz = 0.025;             // km, shared source depth
  std::vector<double> m, dm;     // s^2/km^2
  std::vector<std::complex<double>> u0;
  double omega = 0.0;  // rad/s the u0 values were computed for
  std::uint64_t seed = 0;

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }
  // Throws ShapeError when array lengths disagree.
  void check_consistent() const;
};

}  // namespace pinnup
