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

#include "pinnup/splitting.hpp"

#include <cmath>
#include <random>

#include "pinnup/errors.hpp"
#include "pinnup/random.hpp"

namespace pinnup {

void SplitConfig::validate() const {
  if (factor == 0) throw ConfigError("split: factor must be >= 1");
  if (!(noise_rel_std >= 0.0) || !std::isfinite(noise_rel_std))
    throw ConfigError("split: noise_rel_std must be finite and >= 0");
}

namespace {

double entry_std(std::span<const double> w) {
  if (w.empty()) return 0.0;
  double mean = 0.0;
  for (double v : w) mean += v;
  mean /= static_cast<double>(w.size());
  double var = 0.0;
  for (double v : w) var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(w.size()));
}

}  // namespace

NetworkParams split_network(const NetworkParams& params, const SplitConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.factor;
  std::vector<std::size_t> widths = params.hidden_widths();
  for (auto& w : widths) w *= n;
  NetworkParams out(params.pe(), widths, params.w0());

  const std::size_t last = params.layer_count() - 1;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t l = 0; l <= last; ++l) {
    const auto& src = params.shape(l);
    const auto& dst = out.shape(l);
    const auto W = params.weights(l);
    const auto b = params.bias(l);
    auto Wn = out.weights(l);
    auto bn = out.bias(l);
    // input copies: 1 for the first layer, n otherwise
    const std::size_t in_copies = l == 0 ? 1 : n;
    const std::size_t out_copies = l == last ? 1 : n;
    const double scale = l == 0 ? 1.0 : inv_n;
    for (std::size_t ro = 0; ro < out_copies; ++ro) {
      for (std::size_t i = 0; i < src.rows; ++i) {
        const std::size_t row = ro * src.rows + i;
        for (std::size_t ci = 0; ci < in_copies; ++ci) {
          for (std::size_t j = 0; j < src.cols; ++j) {
            Wn[row * dst.cols + ci * src.cols + j] = scale * W[i * src.cols + j];
          }
        }
        bn[row] = b[i];
      }
    }
    if (l == last && !cfg.preserve_output_bias) {
      for (auto& v : bn) v *= inv_n;
    }
  }

  if (cfg.noise_rel_std > 0.0) {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t l = 0; l < last; ++l) {
      auto Wn = out.weights(l);
      const double sigma = cfg.noise_rel_std * entry_std(Wn);
      for (auto& v : Wn) v += sigma * standard_normal(rng);
    }
  }
  return out;
}

double verify_function_preservation(const NetworkParams& before,
                                    const NetworkParams& after,
                                    std::size_t num_probes, std::uint64_t seed) {
  if (!(before.pe() == after.pe()))
    throw ShapeError("verify_function_preservation: positional encodings differ");
  std::mt19937_64 rng(seed);
  const auto& axes = before.pe().coord_scale;
  double worst = 0.0;
  for (std::size_t k = 0; k < num_probes; ++k) {
    Coord p;
    for (std::size_t a = 0; a < 3; ++a) p[a] = uniform(rng, axes[a].lo, axes[a].hi);
    worst = std::max(worst, std::abs(forward(after, p) - forward(before, p)));
  }
  return worst;
}

}  // namespace pinnup
