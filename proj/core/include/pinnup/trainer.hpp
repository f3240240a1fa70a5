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
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "pinnup/checkpoint.hpp"
#include "pinnup/complex_grid.hpp"
#include "pinnup/refsolver.hpp"
#include "pinnup/sampler.hpp"
#include "pinnup/splitting.hpp"
#include "pinnup/velocity_model.hpp"

namespace pinnup {

// One rung of the frequency ladder.
struct LadderStage {
  double frequency_hz = 2.0;
  std::size_t split_factor = 1;
  std::size_t num_samples = 10000;
  std::size_t epochs = 50000;
  std::size_t batch_size = 10000;
  double lr_initial = 1e-3;
  std::size_t lr_decay_every_epochs = 5000;
  double lr_decay_factor = 0.5;
  std::uint64_t seed = 0;

  double omega() const;
  std::size_t steps_per_epoch() const;
  // lr_initial * factor^floor(epoch / decay_every), epoch counted from 0.
  double learning_rate(std::size_t epoch) const;
  void validate() const;
};

// Architecture of a freshly initialized network.
struct NetworkSpec {
  std::vector<std::size_t> widths{4, 4};
  int pe_bands = 2;
  bool include_raw = true;
  double w0 = 1.0;

  // Encoding normalized to the model domain (s_x shares the x axis).
  PEConfig pe_for(const VelocityModel& model) const;
};

struct LossRecord {
  std::size_t epoch = 0;
  double loss = 0.0;  // sample-weighted mean of the minibatch losses of the epoch
  double lr = 0.0;
};

struct StageResult {
  Checkpoint checkpoint;
  std::vector<LossRecord> history;
  double final_loss = 0.0;  // full-batch loss after the last step
};

struct StageOptions {
  SamplerConfig sampler;
  // Continue from the checkpoint's Adam moments instead of zero moments.
  bool resume_optimizer = false;
  std::function<void(const LossRecord&)> on_epoch;
};

// Random network wrapped as a checkpoint at `frequency_hz`.
Checkpoint fresh_checkpoint(const NetworkSpec& spec, const VelocityModel& model,
                            double frequency_hz, std::uint64_t seed);

// Trains `init` for one stage: draws the seeded stage batch, runs
// epochs * ceil(N / batch) Adam steps on the physics loss with step-decayed
// learning rate and records one loss per epoch. Throws NumericalError when
// the loss becomes non-finite.
StageResult run_stage(const Checkpoint& init, const LadderStage& stage,
                      const VelocityModel& model, const StageOptions& options = {});

// Splits the network by stage.split_factor, drops optimizer state and
// retags the frequency. Throws ConfigError unless the frequency increases.
Checkpoint upscale(const Checkpoint& ckpt, const LadderStage& stage, SplitConfig split);

struct LadderConfig {
  NetworkSpec network;
  SplitConfig split;  // factor is taken from each stage
  SamplerConfig sampler;
  std::vector<LadderStage> stages;

  void validate() const;
};

// 2 -> 4 -> 8 -> 16 -> 32 Hz: samples x4 per stage, batch 10000, epochs
// 50000 for the first two stages and then cut by 4 per stage so that the
// number of optimizer steps stays at 200000.
LadderConfig default_ladder(std::uint64_t seed = 1);

struct LadderOptions {
  // When set, each stage writes stage_<k>.pnup and stage_<k>_loss.csv here
  // and stages whose files already exist are loaded instead of retrained.
  std::optional<std::filesystem::path> out_dir;
  std::function<void(std::size_t stage, const LossRecord&)> on_epoch;
  std::function<void(std::size_t stage, const StageResult&, bool resumed)> on_stage_done;
};

std::vector<StageResult> run_ladder(const LadderConfig& config, const VelocityModel& model,
                                    const LadderOptions& options = {});

std::filesystem::path stage_checkpoint_path(const std::filesystem::path& dir, std::size_t stage);
std::filesystem::path stage_loss_path(const std::filesystem::path& dir, std::size_t stage);

// Evaluates the network on every node of `grid` for a source at (sx, sz).
// Throws DomainError when the grid leaves the network's coordinate domain.
ComplexGrid predict_wavefield(const Checkpoint& ckpt, double sx, double sz,
                              const GridSpec& grid);

// CSV with header "epoch,loss,lr"; values written with 17 significant digits.
void save_loss_history(const std::vector<LossRecord>& history,
                       const std::filesystem::path& path);
std::vector<LossRecord> load_loss_history(const std::filesystem::path& path);

}  // namespace pinnup
