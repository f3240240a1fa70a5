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

#include "pinnup/network.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pinnup/errors.hpp"
#include "pinnup/parallel.hpp"
#include "pinnup/physics.hpp"
#include "pinnup/random.hpp"

namespace pinnup {

NetworkParams::NetworkParams(PEConfig pe, std::vector<std::size_t> hidden_widths,
                             double w0)
    : pe_(pe), w0_(w0), widths_(std::move(hidden_widths)) {
  pe_.validate();
  if (widths_.empty()) throw ConfigError("network: at least one hidden layer is required");
  for (std::size_t w : widths_) {
    if (w == 0) throw ConfigError("network: hidden layer width must be >= 1");
  }
  if (!std::isfinite(w0_) || w0_ == 0.0)
    throw ConfigError("network: activation scale w0 must be finite and nonzero");

  std::size_t offset = 0;
  std::size_t in = pe_.encoded_dim();
  auto add_layer = [&](std::size_t out) {
    LayerShape shape{out, in, offset, offset + out * in};
    offset = shape.bias_offset + out;
    shapes_.push_back(shape);
    in = out;
  };
  for (std::size_t w : widths_) add_layer(w);
  add_layer(kOutputDim);
  values_.assign(offset, 0.0);
}

std::span<double> NetworkParams::weights(std::size_t layer) {
  const auto& s = shapes_.at(layer);
  return {values_.data() + s.weight_offset, s.rows * s.cols};
}
std::span<const double> NetworkParams::weights(std::size_t layer) const {
  const auto& s = shapes_.at(layer);
  return {values_.data() + s.weight_offset, s.rows * s.cols};
}
std::span<double> NetworkParams::bias(std::size_t layer) {
  const auto& s = shapes_.at(layer);
  return {values_.data() + s.bias_offset, s.rows};
}
std::span<const double> NetworkParams::bias(std::size_t layer) const {
  const auto& s = shapes_.at(layer);
  return {values_.data() + s.bias_offset, s.rows};
}

bool NetworkParams::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

std::size_t parameter_count(std::size_t input_dim,
                            std::span<const std::size_t> hidden_widths) {
  std::size_t count = 0;
  std::size_t in = input_dim;
  for (std::size_t w : hidden_widths) {
    count += in * w + w;
    in = w;
  }
  return count + in * NetworkParams::kOutputDim + NetworkParams::kOutputDim;
}

NetworkParams init_random(std::vector<std::size_t> hidden_widths,
                          const PEConfig& pe, double w0, std::uint64_t seed) {
  NetworkParams params(pe, std::move(hidden_widths), w0);
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l < params.layer_count(); ++l) {
    const double bound = std::sqrt(6.0 / static_cast<double>(params.shape(l).cols));
    for (double& w : params.weights(l)) w = bound * (2.0 * uniform01(rng) - 1.0);
  }
  return params;
}

namespace {

inline double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
  return s;
}

// Channels carried through every hidden layer.
struct HiddenBuffers {
  std::vector<double> s, c;            // sin / cos of w0 * a
  std::vector<double> ax, axx, az, azz;  // pre-activation derivatives
  std::vector<double> h, hx, hxx, hz, hzz;

  void resize(std::size_t n) {
    for (auto* v : {&s, &c, &ax, &axx, &az, &azz, &h, &hx, &hxx, &hz, &hzz}) v->assign(n, 0.0);
  }
};

// Per-worker scratch space for one network shape.
class Evaluator {
 public:
  explicit Evaluator(const NetworkParams& p) : p_(p) {
    const std::size_t hidden = p.layer_count() - 1;
    layers_.resize(hidden);
    std::size_t widest = p.input_dim();
    for (std::size_t l = 0; l < hidden; ++l) {
      layers_[l].resize(p.shape(l).rows);
      widest = std::max(widest, p.shape(l).rows);
    }
    for (auto* v : {&d_, &dx_, &dxx_, &dz_, &dzz_, &pd_, &pdx_, &pdxx_, &pdz_, &pdzz_})
      v->assign(widest, 0.0);
    encoded_.assign(p.pe().encoded_dim() + 4 * p.pe().per_coordinate_dim(), 0.0);
  }

  std::span<double> encoding_buffer() { return encoded_; }

  // Value-only pass. Returns (Re, Im).
  std::complex<double> value(std::span<const double> enc) {
    const double w0 = p_.w0();
    const std::size_t hidden = layers_.size();
    const double* in = enc.data();
    for (std::size_t l = 0; l < hidden; ++l) {
      const auto& sh = p_.shape(l);
      const double* W = p_.weights(l).data();
      const double* b = p_.bias(l).data();
      auto& B = layers_[l];
      for (std::size_t i = 0; i < sh.rows; ++i)
        B.h[i] = std::sin(w0 * (b[i] + dot(W + i * sh.cols, in, sh.cols)));
      in = B.h.data();
    }
    const auto& sh = p_.shape(hidden);
    const double* W = p_.weights(hidden).data();
    const double* b = p_.bias(hidden).data();
    return {b[0] + dot(W, in, sh.cols), b[1] + dot(W + sh.cols, in, sh.cols)};
  }

  // Full jet pass; `enc` is laid out as by positional_encode_into.
  EvalJet jet(std::span<const double> enc) {
    const double w0 = p_.w0();
    const std::size_t per = p_.pe().per_coordinate_dim();
    const std::size_t d = p_.input_dim();
    const double* ev = enc.data();
    const double* ex = ev + d;
    const double* exx = ex + per;
    const double* ez = exx + per;
    const double* ezz = ez + per;

    const std::size_t hidden = layers_.size();
    for (std::size_t l = 0; l < hidden; ++l) {
      const auto& sh = p_.shape(l);
      const double* W = p_.weights(l).data();
      const double* b = p_.bias(l).data();
      auto& B = layers_[l];
      for (std::size_t i = 0; i < sh.rows; ++i) {
        const double* w = W + i * sh.cols;
        double a, ax, axx, az, azz;
        if (l == 0) {
          // x channels only touch the x block, z channels the z block
          a = b[i] + dot(w, ev, d);
          ax = dot(w, ex, per);
          axx = dot(w, exx, per);
          az = dot(w + per, ez, per);
          azz = dot(w + per, ezz, per);
        } else {
          const auto& P = layers_[l - 1];
          a = b[i] + dot(w, P.h.data(), sh.cols);
          ax = dot(w, P.hx.data(), sh.cols);
          axx = dot(w, P.hxx.data(), sh.cols);
          az = dot(w, P.hz.data(), sh.cols);
          azz = dot(w, P.hzz.data(), sh.cols);
        }
        const double s = std::sin(w0 * a);
        const double c = std::cos(w0 * a);
        const double w0c = w0 * c;
        const double w0sq_s = w0 * w0 * s;
        B.s[i] = s;
        B.c[i] = c;
        B.ax[i] = ax;
        B.axx[i] = axx;
        B.az[i] = az;
        B.azz[i] = azz;
        B.h[i] = s;
        B.hx[i] = w0c * ax;
        B.hxx[i] = -w0sq_s * ax * ax + w0c * axx;
        B.hz[i] = w0c * az;
        B.hzz[i] = -w0sq_s * az * az + w0c * azz;
      }
    }
    const auto& sh = p_.shape(hidden);
    const double* W = p_.weights(hidden).data();
    const double* b = p_.bias(hidden).data();
    const auto& H = layers_.back();
    const std::size_t n = sh.cols;
    EvalJet out;
    out.value = {b[0] + dot(W, H.h.data(), n), b[1] + dot(W + n, H.h.data(), n)};
    out.d2dx2 = {dot(W, H.hxx.data(), n), dot(W + n, H.hxx.data(), n)};
    out.d2dz2 = {dot(W, H.hzz.data(), n), dot(W + n, H.hzz.data(), n)};
    return out;
  }

  // Accumulates into `grad` the gradient of g_re*Re(r) + g_im*Im(r), where
  // r = om2m * value + d2dx2 + d2dz2 is the network part of the residual.
  // Must follow a call to jet() on the same encoding.
  void backward(std::span<const double> enc, double om2m, double g_re, double g_im,
                std::span<double> grad) {
    const double w0 = p_.w0();
    const std::size_t per = p_.pe().per_coordinate_dim();
    const std::size_t d = p_.input_dim();
    const double* ev = enc.data();
    const double* ex = ev + d;
    const double* exx = ex + per;
    const double* ez = exx + per;
    const double* ezz = ez + per;

    const std::size_t hidden = layers_.size();
    // output layer
    {
      const auto& sh = p_.shape(hidden);
      const double* W = p_.weights(hidden).data();
      double* gW = grad.data() + sh.weight_offset;
      double* gb = grad.data() + sh.bias_offset;
      const auto& H = layers_.back();
      const double g[2] = {g_re, g_im};
      for (std::size_t c = 0; c < 2; ++c) {
        double* gw = gW + c * sh.cols;
        for (std::size_t j = 0; j < sh.cols; ++j)
          gw[j] += g[c] * (om2m * H.h[j] + H.hxx[j] + H.hzz[j]);
        gb[c] += om2m * g[c];
      }
      const double* w_re = W;
      const double* w_im = W + sh.cols;
      for (std::size_t j = 0; j < sh.cols; ++j) {
        const double second = w_re[j] * g_re + w_im[j] * g_im;
        d_[j] = om2m * second;
        dx_[j] = 0.0;
        dxx_[j] = second;
        dz_[j] = 0.0;
        dzz_[j] = second;
      }
    }

    for (std::size_t l = hidden; l-- > 0;) {
      const auto& sh = p_.shape(l);
      const auto& B = layers_[l];
      const double* W = p_.weights(l).data();
      double* gW = grad.data() + sh.weight_offset;
      double* gb = grad.data() + sh.bias_offset;
      const double w0sq = w0 * w0;

      const double* hin = l == 0 ? ev : layers_[l - 1].h.data();
      if (l > 0) {
        std::fill_n(pd_.begin(), sh.cols, 0.0);
        std::fill_n(pdx_.begin(), sh.cols, 0.0);
        std::fill_n(pdxx_.begin(), sh.cols, 0.0);
        std::fill_n(pdz_.begin(), sh.cols, 0.0);
        std::fill_n(pdzz_.begin(), sh.cols, 0.0);
      }

      for (std::size_t i = 0; i < sh.rows; ++i) {
        const double s = B.s[i], c = B.c[i];
        const double ax = B.ax[i], axx = B.axx[i], az = B.az[i], azz = B.azz[i];
        const double dh = d_[i], dhx = dx_[i], dhxx = dxx_[i], dhz = dz_[i], dhzz = dzz_[i];

        const double da = dh * w0 * c +
                          dhx * (-w0sq * s * ax) +
                          dhxx * (-w0sq * w0 * c * ax * ax - w0sq * s * axx) +
                          dhz * (-w0sq * s * az) +
                          dhzz * (-w0sq * w0 * c * az * az - w0sq * s * azz);
        const double dax = dhx * w0 * c + dhxx * (-2.0 * w0sq * s * ax);
        const double daxx = dhxx * w0 * c;
        const double daz = dhz * w0 * c + dhzz * (-2.0 * w0sq * s * az);
        const double dazz = dhzz * w0 * c;

        double* gw = gW + i * sh.cols;
        gb[i] += da;
        if (l == 0) {
          for (std::size_t j = 0; j < d; ++j) gw[j] += da * hin[j];
          for (std::size_t j = 0; j < per; ++j) gw[j] += dax * ex[j] + daxx * exx[j];
          for (std::size_t j = 0; j < per; ++j)
            gw[per + j] += daz * ez[j] + dazz * ezz[j];
        } else {
          const auto& P = layers_[l - 1];
          for (std::size_t j = 0; j < sh.cols; ++j)
            gw[j] += da * P.h[j] + dax * P.hx[j] + daxx * P.hxx[j] + daz * P.hz[j] +
                     dazz * P.hzz[j];
          const double* w = W + i * sh.cols;
          for (std::size_t j = 0; j < sh.cols; ++j) {
            pd_[j] += w[j] * da;
            pdx_[j] += w[j] * dax;
            pdxx_[j] += w[j] * daxx;
            pdz_[j] += w[j] * daz;
            pdzz_[j] += w[j] * dazz;
          }
        }
      }
      if (l > 0) {
        std::swap(d_, pd_);
        std::swap(dx_, pdx_);
        std::swap(dxx_, pdxx_);
        std::swap(dz_, pdz_);
        std::swap(dzz_, pdzz_);
      }
    }
  }

  const std::vector<HiddenBuffers>& layers() const { return layers_; }

 private:
  const NetworkParams& p_;
  std::vector<HiddenBuffers> layers_;
  std::vector<double> d_, dx_, dxx_, dz_, dzz_;
  std::vector<double> pd_, pdx_, pdxx_, pdz_, pdzz_;
  std::vector<double> encoded_;
};

constexpr std::size_t kChunkSize = 256;

template <typename SampleFn>
LossGradient reduce_over_chunks(const NetworkParams& params, std::size_t count,
                                bool with_gradient, SampleFn&& per_sample) {
  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, chunks));
  const std::size_t np = params.parameter_count();

  std::vector<Evaluator> evaluators;
  evaluators.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) evaluators.emplace_back(params);
  std::vector<std::vector<double>> partial_grad(workers);
  if (with_gradient)
    for (auto& g : partial_grad) g.assign(np, 0.0);
  std::vector<double> partial_loss(workers, 0.0);

  LossGradient total;
  if (with_gradient) total.grad.assign(np, 0.0);
  double loss_sum = 0.0;

  run_chunked(
      chunks, workers,
      [&](std::size_t chunk, std::size_t slot) {
        auto& grad = partial_grad[slot];
        if (with_gradient) std::fill(grad.begin(), grad.end(), 0.0);
        double sum = 0.0;
        const std::size_t first = chunk * kChunkSize;
        const std::size_t last = std::min(count, first + kChunkSize);
        for (std::size_t k = first; k < last; ++k)
          sum += per_sample(evaluators[slot], k, grad);
        partial_loss[slot] = sum;
      },
      [&](std::size_t first, std::size_t last) {
        for (std::size_t c = first; c < last; ++c) {
          const std::size_t slot = c - first;
          loss_sum += partial_loss[slot];
          if (with_gradient) {
            const auto& g = partial_grad[slot];
            for (std::size_t j = 0; j < np; ++j) total.grad[j] += g[j];
          }
        }
      });

  const double inv_n = 1.0 / static_cast<double>(count);
  total.loss = loss_sum * inv_n;
  for (double& g : total.grad) g *= inv_n;
  return total;
}

}  // namespace

std::complex<double> forward(const NetworkParams& params, const Coord& x) {
  Evaluator ev(params);
  auto buf = ev.encoding_buffer();
  positional_encode_into(x, params.pe(), buf);
  return ev.value(buf);
}

EvalJet forward_with_laplacian(const NetworkParams& params, const Coord& x) {
  Evaluator ev(params);
  auto buf = ev.encoding_buffer();
  positional_encode_into(x, params.pe(), buf);
  return ev.jet(buf);
}

std::vector<std::vector<double>> hidden_activations(const NetworkParams& params,
                                                    const Coord& x) {
  Evaluator ev(params);
  auto buf = ev.encoding_buffer();
  positional_encode_into(x, params.pe(), buf);
  ev.value(buf);
  std::vector<std::vector<double>> out;
  for (const auto& layer : ev.layers()) out.push_back(layer.h);
  return out;
}

PreparedBatch::PreparedBatch(const SampleBatch& batch, const PEConfig& pe)
    : batch_(&batch), pe_(pe), stride_(pe.encoded_dim() + 4 * pe.per_coordinate_dim()) {
  batch.check_consistent();
  encoded_.assign(batch.size() * stride_, 0.0);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    positional_encode_into({batch.x[i], batch.z[i], batch.sx[i]}, pe_,
                           {encoded_.data() + i * stride_, stride_});
  }
}

LossGradient loss_and_gradient(const NetworkParams& params,
                               const SampleBatch& batch, double omega) {
  PreparedBatch prepared(batch, params.pe());
  return loss_and_gradient(params, prepared, omega);
}

namespace {

void check_loss_inputs(const NetworkParams& params, const PreparedBatch& batch,
                       double omega, std::size_t count) {
  if (count == 0) throw ShapeError("loss: empty batch");
  if (!(omega > 0.0)) throw DomainError("loss: omega must be > 0");
  if (!(batch.pe() == params.pe()))
    throw ShapeError("loss: batch was prepared with a different positional encoding");
}

}  // namespace

LossGradient loss_and_gradient(const NetworkParams& params,
                               const PreparedBatch& batch, double omega,
                               std::span<const std::size_t> subset) {
  const std::size_t count = subset.empty() ? batch.size() : subset.size();
  check_loss_inputs(params, batch, omega, count);
  const SampleBatch& b = batch.batch();
  const double om2 = omega * omega;
  return reduce_over_chunks(
      params, count, true,
      [&](Evaluator& ev, std::size_t k, std::vector<double>& grad) {
        const std::size_t i = subset.empty() ? k : subset[k];
        const auto enc = batch.encoded(i);
        const EvalJet jet = ev.jet(enc);
        const std::complex<double> r = pde_residual(jet, {b.m[i], b.dm[i], b.u0[i]}, omega);
        ev.backward(enc, om2 * b.m[i], 2.0 * r.real(), 2.0 * r.imag(), grad);
        return std::norm(r);
      });
}

double batch_loss(const NetworkParams& params, const PreparedBatch& batch,
                  double omega) {
  check_loss_inputs(params, batch, omega, batch.size());
  const SampleBatch& b = batch.batch();
  return reduce_over_chunks(params, batch.size(), false,
                            [&](Evaluator& ev, std::size_t i, std::vector<double>&) {
                              const EvalJet jet = ev.jet(batch.encoded(i));
                              return std::norm(
                                  pde_residual(jet, {b.m[i], b.dm[i], b.u0[i]}, omega));
                            })
      .loss;
}

}  // namespace pinnup
