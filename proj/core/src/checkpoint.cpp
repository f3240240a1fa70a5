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

#include "pinnup/checkpoint.hpp"

#include <cmath>
#include <string>

#include "binary_io.hpp"
#include "pinnup/errors.hpp"

namespace pinnup {

namespace {
constexpr std::string_view kCheckpointMagic = "PNUP";
constexpr std::uint16_t kCheckpointVersion = 1;

bool finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}
}  // namespace

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path) {
  const NetworkParams& p = ckpt.params;
  if (!p.all_finite()) throw ValidationError("checkpoint: parameters contain NaN or Inf");
  if (!std::isfinite(ckpt.frequency_hz)) throw ValidationError("checkpoint: non-finite frequency");
  if (ckpt.optimizer) {
    const auto& a = *ckpt.optimizer;
    if (a.first_moment.size() != p.parameter_count() ||
        a.second_moment.size() != p.parameter_count())
      throw ShapeError("checkpoint: optimizer state does not match the parameter count");
    if (!finite(a.first_moment) || !finite(a.second_moment))
      throw ValidationError("checkpoint: optimizer moments contain NaN or Inf");
  }

  io::ByteWriter w;
  w.magic(kCheckpointMagic);
  w.put<std::uint16_t>(kCheckpointVersion);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(p.layer_count()));
  for (std::size_t l = 0; l < p.layer_count(); ++l) {
    w.put<std::uint32_t>(static_cast<std::uint32_t>(p.shape(l).rows));
    w.put<std::uint32_t>(static_cast<std::uint32_t>(p.shape(l).cols));
  }
  w.put<double>(ckpt.frequency_hz);
  w.put<double>(p.w0());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(p.pe().num_bands));
  w.put<std::uint64_t>(ckpt.seed);
  for (double v : p.values()) w.put<double>(v);

  w.put<std::uint8_t>(ckpt.optimizer ? 1 : 0);
  if (ckpt.optimizer) {
    const auto& a = *ckpt.optimizer;
    w.put<std::uint64_t>(a.step);
    w.put<double>(a.beta1);
    w.put<double>(a.beta2);
    w.put<double>(a.epsilon);
    for (double v : a.first_moment) w.put<double>(v);
    for (double v : a.second_moment) w.put<double>(v);
  }

  // encoding domain trailer
  w.put<std::uint8_t>(p.pe().include_raw ? 1 : 0);
  for (const auto& axis : p.pe().coord_scale) {
    w.put<double>(axis.lo);
    w.put<double>(axis.hi);
  }
  io::write_file(path, w.bytes());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string what = "checkpoint file " + path.string();
  io::ByteReader r(io::read_file(path), what);
  r.expect_magic(kCheckpointMagic);
  const auto version = r.get<std::uint16_t>();
  if (version != kCheckpointVersion)
    throw CorruptFileError(what + ": unsupported version " + std::to_string(version));

  const std::size_t layers = r.get<std::uint32_t>();
  if (layers < 2) throw CorruptFileError(what + ": need at least one hidden layer");
  r.require(layers * 8);
  std::vector<std::pair<std::size_t, std::size_t>> shapes(layers);
  for (auto& [rows, cols] : shapes) {
    rows = r.get<std::uint32_t>();
    cols = r.get<std::uint32_t>();
  }
  const double frequency = r.get<double>();
  const double w0 = r.get<double>();
  const int bands = static_cast<int>(r.get<std::uint32_t>());
  const std::uint64_t seed = r.get<std::uint64_t>();

  std::size_t count = 0;
  std::vector<std::size_t> widths;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto [rows, cols] = shapes[l];
    if (rows == 0 || cols == 0) throw CorruptFileError(what + ": zero-sized layer");
    if (l > 0 && cols != shapes[l - 1].first)
      throw CorruptFileError(what + ": layer shapes do not chain");
    if (l + 1 < layers) widths.push_back(rows);
    count += rows * cols + rows;
  }
  if (shapes.back().first != NetworkParams::kOutputDim)
    throw CorruptFileError(what + ": output layer must have 2 rows");
  r.require(count * sizeof(double));
  std::vector<double> values(count);
  for (auto& v : values) v = r.get<double>();

  std::optional<AdamState> optimizer;
  const auto has_adam = r.get<std::uint8_t>();
  if (has_adam > 1) throw CorruptFileError(what + ": bad optimizer presence flag");
  if (has_adam == 1) {
    AdamState a;
    a.step = r.get<std::uint64_t>();
    a.beta1 = r.get<double>();
    a.beta2 = r.get<double>();
    a.epsilon = r.get<double>();
    r.require(2 * count * sizeof(double));
    a.first_moment.resize(count);
    a.second_moment.resize(count);
    for (auto& v : a.first_moment) v = r.get<double>();
    for (auto& v : a.second_moment) v = r.get<double>();
    optimizer = std::move(a);
  }

  PEConfig pe;
  pe.num_bands = bands;
  pe.include_raw = r.get<std::uint8_t>() != 0;
  for (auto& axis : pe.coord_scale) {
    axis.lo = r.get<double>();
    axis.hi = r.get<double>();
  }
  r.expect_end();
  if (shapes.front().second != pe.encoded_dim())
    throw CorruptFileError(what + ": input layer width does not match the encoding");

  Checkpoint ckpt;
  try {
    ckpt.params = NetworkParams(pe, widths, w0);
  } catch (const ConfigError& e) {
    throw CorruptFileError(what + ": " + e.what());
  }
  std::copy(values.begin(), values.end(), ckpt.params.values().begin());
  ckpt.frequency_hz = frequency;
  ckpt.optimizer = std::move(optimizer);
  ckpt.seed = seed;
  return ckpt;
}

}  // namespace pinnup
