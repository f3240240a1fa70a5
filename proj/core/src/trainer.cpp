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

#include "pinnup/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "pinnup/errors.hpp"
#include "pinnup/random.hpp"

namespace pinnup {

namespace {
// sub-seed streams derived from a stage seed
constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShuffleStream = 2;
constexpr std::uint64_t kSplitStream = 3;
}  // namespace

double LadderStage::omega() const { return 2.0 * std::numbers::pi * frequency_hz; }

std::size_t LadderStage::steps_per_epoch() const {
  return (num_samples + batch_size - 1) / batch_size;
}

double LadderStage::learning_rate(std::size_t epoch) const {
  const auto drops = static_cast<double>(epoch / lr_decay_every_epochs);
  return lr_initial * std::pow(lr_decay_factor, drops);
}

void LadderStage::validate() const {
  if (!(frequency_hz > 0.0)) throw ConfigError("stage: frequency_hz must be > 0");
  if (split_factor == 0) throw ConfigError("stage: split_factor must be >= 1");
  if (num_samples == 0) throw ConfigError("stage: num_samples must be >= 1");
  if (epochs == 0) throw ConfigError("stage: epochs must be >= 1");
  if (batch_size == 0 || batch_size > num_samples)
    throw ConfigError("stage: batch_size must be in [1, num_samples]");
  if (!(lr_initial > 0.0)) throw ConfigError("stage: lr_initial must be > 0");
  if (lr_decay_every_epochs == 0) throw ConfigError("stage: lr_decay_every_epochs must be >= 1");
  if (!(lr_decay_factor > 0.0) || lr_decay_factor > 1.0)
    throw ConfigError("stage: lr_decay_factor must be in (0, 1]");
}

PEConfig NetworkSpec::pe_for(const VelocityModel& model) const {
  const AxisScale x_axis{model.ox(), model.x_max()};
  const AxisScale z_axis{model.oz(), model.z_max()};
  return make_pe_config(pe_bands, include_raw, x_axis, z_axis, x_axis);
}

Checkpoint fresh_checkpoint(const NetworkSpec& spec, const VelocityModel& model,
                            double frequency_hz, std::uint64_t seed) {
  Checkpoint ckpt;
  ckpt.params = init_random(spec.widths, spec.pe_for(model), spec.w0,
                            derive_seed(seed, kInitStream));
  ckpt.frequency_hz = frequency_hz;
  ckpt.seed = seed;
  return ckpt;
}

StageResult run_stage(const Checkpoint& init, const LadderStage& stage,
                      const VelocityModel& model, const StageOptions& options) {
  stage.validate();
  if (!init.params.all_finite())
    throw NumericalError("run_stage: initial parameters contain NaN or Inf");

  const double omega = stage.omega();
  const SampleBatch batch = draw_samples(model, stage.num_samples, omega, options.sampler,
                                         derive_seed(stage.seed, kSampleStream));
  const PreparedBatch prepared(batch, init.params.pe());

  StageResult result;
  result.checkpoint = init;
  result.checkpoint.frequency_hz = stage.frequency_hz;
  result.checkpoint.seed = stage.seed;
  NetworkParams& params = result.checkpoint.params;

  AdamState adam = options.resume_optimizer && init.optimizer &&
                           init.optimizer->first_moment.size() == params.parameter_count()
                       ? *init.optimizer
                       : AdamState::zeros(params.parameter_count());

  const std::size_t n = batch.size();
  const bool full_batch = stage.batch_size >= n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 shuffle_rng(derive_seed(stage.seed, kShuffleStream));

  result.history.reserve(stage.epochs);
  for (std::size_t epoch = 0; epoch < stage.epochs; ++epoch) {
    const double lr = stage.learning_rate(epoch);
    if (!full_batch) std::shuffle(order.begin(), order.end(), shuffle_rng);
    double weighted = 0.0;
    for (std::size_t first = 0; first < n; first += stage.batch_size) {
      const std::size_t last = std::min(n, first + stage.batch_size);
      const std::span<const std::size_t> subset =
          full_batch ? std::span<const std::size_t>{}
                     : std::span<const std::size_t>(order.data() + first, last - first);
      LossGradient lg = loss_and_gradient(params, prepared, omega, subset);
      if (!std::isfinite(lg.loss)) {
        double dm_min = 0.0, dm_max = 0.0;
        for (double v : batch.dm) {
          dm_min = std::min(dm_min, v);
          dm_max = std::max(dm_max, v);
        }
        std::ostringstream msg;
        msg << "training diverged at " << stage.frequency_hz << " Hz, epoch " << epoch
            << ", lr " << lr << ": loss " << lg.loss << " (batch of " << last - first
            << " of " << n << " samples, dm in [" << dm_min << ", " << dm_max << "])";
        throw NumericalError(msg.str());
      }
      weighted += lg.loss * double(last - first);
      adam_step(adam, params.values(), lg.grad, lr);
    }
    const LossRecord record{epoch + 1, weighted / double(n), lr};
    result.history.push_back(record);
    if (options.on_epoch) options.on_epoch(record);
  }
  if (!params.all_finite())
    throw NumericalError("training produced non-finite parameters at " +
                         std::to_string(stage.frequency_hz) + " Hz");
  result.final_loss = batch_loss(params, prepared, omega);
  result.checkpoint.optimizer = std::move(adam);
  return result;
}

Checkpoint upscale(const Checkpoint& ckpt, const LadderStage& stage, SplitConfig split) {
  if (!(stage.frequency_hz > ckpt.frequency_hz))
    throw ConfigError("upscale: stage frequency must exceed the checkpoint frequency");
  split.factor = stage.split_factor;
  Checkpoint out;
  out.params = split_network(ckpt.params, split);
  out.frequency_hz = stage.frequency_hz;
  out.seed = stage.seed;
  return out;
}

void LadderConfig::validate() const {
  if (stages.empty()) throw ConfigError("ladder: no stages");
  for (std::size_t k = 0; k < stages.size(); ++k) {
    stages[k].validate();
    if (k > 0 && !(stages[k].frequency_hz > stages[k - 1].frequency_hz))
      throw ConfigError("ladder: stage frequencies must be strictly increasing");
  }
  split.validate();
}

LadderConfig default_ladder(std::uint64_t seed) {
  LadderConfig cfg;
  const double freqs[] = {2.0, 4.0, 8.0, 16.0, 32.0};
  const std::size_t samples[] = {10000, 40000, 160000, 640000, 2560000};
  const std::size_t epochs[] = {50000, 50000, 12500, 3125, 781};
  for (std::size_t k = 0; k < 5; ++k) {
    LadderStage s;
    s.frequency_hz = freqs[k];
    s.split_factor = k == 0 ? 1 : 4;
    s.num_samples = samples[k];
    s.epochs = epochs[k];
    s.batch_size = 10000;
    s.seed = seed + k;
    cfg.stages.push_back(s);
  }
  return cfg;
}

std::filesystem::path stage_checkpoint_path(const std::filesystem::path& dir, std::size_t stage) {
  return dir / ("stage_" + std::to_string(stage) + ".pnup");
}
std::filesystem::path stage_loss_path(const std::filesystem::path& dir, std::size_t stage) {
  return dir / ("stage_" + std::to_string(stage) + "_loss.csv");
}

ComplexGrid predict_wavefield(const Checkpoint& ckpt, double sx, double sz,
                              const GridSpec& grid) {
  grid.validate();
  const auto& axes = ckpt.params.pe().coord_scale;
  const double x_hi = grid.ox + double(grid.nx - 1) * grid.dx;
  const double z_hi = grid.oz + double(grid.nz - 1) * grid.dz;
  auto inside = [](double v, const AxisScale& a) {
    const double tol = 1e-9 * (a.hi - a.lo);
    return v >= a.lo - tol && v <= a.hi + tol;
  };
  if (!inside(grid.ox, axes[0]) || !inside(x_hi, axes[0]) || !inside(grid.oz, axes[1]) ||
      !inside(z_hi, axes[1]))
    throw DomainError("predict: grid extends outside the model domain of the network");
  if (!inside(sx, axes[2])) throw DomainError("predict: source x outside the network's source range");

  ComplexGrid out;
  out.nx = grid.nx;
  out.nz = grid.nz;
  out.dx = grid.dx;
  out.dz = grid.dz;
  out.ox = grid.ox;
  out.oz = grid.oz;
  out.frequency_hz = ckpt.frequency_hz;
  out.source_x = sx;
  out.source_z = sz;
  out.values.resize(grid.nx * grid.nz);
  for (std::size_t iz = 0; iz < grid.nz; ++iz)
    for (std::size_t ix = 0; ix < grid.nx; ++ix)
      out.at(ix, iz) = forward(ckpt.params, {out.x(ix), out.z(iz), sx});
  return out;
}

void save_loss_history(const std::vector<LossRecord>& history,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "epoch,loss,lr\n";
  char line[96];
  for (const auto& r : history) {
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", r.epoch, r.loss, r.lr);
    out << line;
  }
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<LossRecord> load_loss_history(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "epoch,loss,lr")
    throw CorruptFileError(path.string() + ": missing loss CSV header");
  std::vector<LossRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    LossRecord r;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &r.epoch, &r.loss, &r.lr) != 3)
      throw CorruptFileError(path.string() + ": malformed row '" + line + "'");
    out.push_back(r);
  }
  return out;
}

std::vector<StageResult> run_ladder(const LadderConfig& config, const VelocityModel& model,
                                    const LadderOptions& options) {
  config.validate();
  if (options.out_dir) std::filesystem::create_directories(*options.out_dir);

  std::vector<StageResult> results;
  for (std::size_t k = 0; k < config.stages.size(); ++k) {
    const LadderStage& stage = config.stages[k];

    if (options.out_dir) {
      const auto ckpt_path = stage_checkpoint_path(*options.out_dir, k);
      const auto loss_path = stage_loss_path(*options.out_dir, k);
      if (std::filesystem::exists(ckpt_path) && std::filesystem::exists(loss_path)) {
        StageResult resumed;
        resumed.checkpoint = load_checkpoint(ckpt_path);
        if (resumed.checkpoint.frequency_hz != stage.frequency_hz ||
            resumed.checkpoint.seed != stage.seed)
          throw ConfigError("ladder: " + ckpt_path.string() +
                            " does not belong to this configuration (frequency or seed differ)");
        resumed.history = load_loss_history(loss_path);
        const SampleBatch batch = draw_samples(model, stage.num_samples, stage.omega(),
                                               config.sampler,
                                               derive_seed(stage.seed, kSampleStream));
        resumed.final_loss = batch_loss(resumed.checkpoint.params,
                                        PreparedBatch(batch, resumed.checkpoint.params.pe()),
                                        stage.omega());
        if (options.on_stage_done) options.on_stage_done(k, resumed, true);
        results.push_back(std::move(resumed));
        continue;
      }
    }

    Checkpoint init;
    if (k == 0) {
      if (stage.split_factor != 1)
        throw ConfigError("ladder: the first stage cannot split (split_factor must be 1)");
      init = fresh_checkpoint(config.network, model, stage.frequency_hz, stage.seed);
    } else {
      SplitConfig split = config.split;
      split.seed = derive_seed(stage.seed, kSplitStream);
      init = upscale(results.back().checkpoint, stage, split);
    }

    StageOptions stage_options;
    stage_options.sampler = config.sampler;
    if (options.on_epoch)
      stage_options.on_epoch = [&options, k](const LossRecord& r) { options.on_epoch(k, r); };
    StageResult result = run_stage(init, stage, model, stage_options);

    if (options.out_dir) {
      save_checkpoint(result.checkpoint, stage_checkpoint_path(*options.out_dir, k));
      save_loss_history(result.history, stage_loss_path(*options.out_dir, k));
    }
    if (options.on_stage_done) options.on_stage_done(k, result, false);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace pinnup
