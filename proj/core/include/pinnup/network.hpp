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
#include <span>
#include <vector>

#include "pinnup/positional_encoding.hpp"
#include "pinnup/sample_batch.hpp"

namespace pinnup {

struct LayerShape {
  std::size_t rows = 0;  // output neurons
  std::size_t cols = 0;  // input features
  std::size_t weight_offset = 0;
  std::size_t bias_offset = 0;

  friend bool operator==(const LayerShape&, const LayerShape&) = default;
};

// Parameters of the sine-activated coordinate network. All weights and
// biases live in one flat buffer, ordered layer by layer as
// W (row-major) followed by b; gradients and optimizer moments share this
// layout.
class NetworkParams {
 public:
  static constexpr std::size_t kOutputDim = 2;  // (Re, Im) of the scattered field

  NetworkParams() = default;
  // Zero-initialized network with the given hidden widths.
  NetworkParams(PEConfig pe, std::vector<std::size_t> hidden_widths, double w0);

  const PEConfig& pe() const { return pe_; }
  double w0() const { return w0_; }
  const std::vector<std::size_t>& hidden_widths() const { return widths_; }
  std::size_t input_dim() const { return pe_.encoded_dim(); }

  std::size_t layer_count() const { return shapes_.size(); }
  const LayerShape& shape(std::size_t layer) const { return shapes_[layer]; }

  std::span<double> weights(std::size_t layer);
  std::span<const double> weights(std::size_t layer) const;
  std::span<double> bias(std::size_t layer);
  std::span<const double> bias(std::size_t layer) const;

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::size_t parameter_count() const { return values_.size(); }

  bool all_finite() const;

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;

 private:
  PEConfig pe_{};
  double w0_ = 1.0;
  std::vector<std::size_t> widths_;
  std::vector<LayerShape> shapes_;
  std::vector<double> values_;
};

// d*h1 + h1 + sum(h_i*h_{i+1} + h_{i+1}) + h_k*2 + 2.
std::size_t parameter_count(std::size_t input_dim,
                            std::span<const std::size_t> hidden_widths);

// Weights uniform in +-sqrt(6/fan_in), biases zero. Deterministic in seed.
NetworkParams init_random(std::vector<std::size_t> hidden_widths,
                          const PEConfig& pe, double w0, std::uint64_t seed);

// Complex output Re + i Im of the final linear layer.
std::complex<double> forward(const NetworkParams& params, const Coord& x);

// Value plus exact second derivatives with respect to physical x and z.
struct EvalJet {
  std::complex<double> value;
  std::complex<double> d2dx2;
  std::complex<double> d2dz2;
};

EvalJet forward_with_laplacian(const NetworkParams& params, const Coord& x);

// Post-activation vectors of every hidden layer (for structural tests).
std::vector<std::vector<double>> hidden_activations(const NetworkParams& params,
                                                    const Coord& x);

// A sample batch with its positional encodings precomputed, so repeated
// loss evaluations skip the encoding trig.
class PreparedBatch {
 public:
  PreparedBatch(const SampleBatch& batch, const PEConfig& pe);

  const SampleBatch& batch() const { return *batch_; }
  const PEConfig& pe() const { return pe_; }
  std::size_t size() const { return batch_->size(); }
  std::size_t stride() const { return stride_; }
  std::span<const double> encoded(std::size_t i) const {
    return {encoded_.data() + i * stride_, stride_};
  }

 private:
  const SampleBatch* batch_;
  PEConfig pe_;
  std::size_t stride_;
  std::vector<double> encoded_;
};

struct LossGradient {
  double loss = 0.0;
  std::vector<double> grad;  // same layout as NetworkParams::values()
};

// Mean squared PDE residual over the batch (or over `subset` when given)
// and its exact gradient with respect to every parameter. Chunk partials
// are reduced in a fixed order, so the result does not depend on the
// number of workers.
LossGradient loss_and_gradient(const NetworkParams& params,
                               const SampleBatch& batch, double omega);
LossGradient loss_and_gradient(const NetworkParams& params,
                               const PreparedBatch& batch, double omega,
                               std::span<const std::size_t> subset = {});

// Loss only; cheaper than loss_and_gradient.
double batch_loss(const NetworkParams& params, const PreparedBatch& batch,
                  double omega);

}  // namespace pinnup
