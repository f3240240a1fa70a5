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

#include "pinnup/network.hpp"

namespace pinnup {

struct SplitConfig {
  std::size_t factor = 4;
  // Noise std added to hidden-layer weights after splitting, relative to the
  // standard deviation of the entries of each matrix. 0 disables it.
  double noise_rel_std = 1e-2;
  // true: keep the output bias (exact function preservation).
  // false: divide it by the factor, as in the printed splitting formulas.
  bool preserve_output_bias = true;
  std::uint64_t seed = 0;

  void validate() const;
};

// Replaces every hidden neuron by `factor` offspring. Incoming weights and
// biases are copied; weights leaving a hidden neuron are divided by the
// factor. Offspring of neuron j in a layer of width h sit at j, h + j, ...
NetworkParams split_network(const NetworkParams& params, const SplitConfig& cfg);

// Max over `num_probes` seeded random inputs inside the PE domain of
// |after(x) - before(x)|. Throws ShapeError when the encodings differ.
double verify_function_preservation(const NetworkParams& before,
                                    const NetworkParams& after,
                                    std::size_t num_probes, std::uint64_t seed = 7);

}  // namespace pinnup
