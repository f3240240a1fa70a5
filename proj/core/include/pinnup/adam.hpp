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
#include <cstdint>
#include <span>
#include <vector>

namespace pinnup {

struct AdamState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState zeros(std::size_t parameter_count);

  friend bool operator==(const AdamState&, const AdamState&) = default;
};

// One bias-corrected Adam update of `params` in place. Throws ShapeError
// when the sizes of state, params and grad differ, ConfigError when lr <= 0.
void adam_step(AdamState& state, std::span<double> params,
               std::span<const double> grad, double lr);

}  // namespace pinnup
