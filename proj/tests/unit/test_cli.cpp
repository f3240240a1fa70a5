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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "pinnup/checkpoint.hpp"
#include "pinnup/complex_grid.hpp"
#include "pinnup/errors.hpp"

using namespace pinnup;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "pinnup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("pinnup_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const char* kTwoStage = R"({
  "model": {"nx": 51, "nz": 51},
  "network": {"widths": [4, 4]},
  "split": {"noise_rel_std": 0.01},
  "stages": [
    {"frequency_hz": 2, "num_samples": 300, "epochs": 5, "batch_size": 100, "seed": 1},
    {"frequency_hz": 4, "num_samples": 300, "epochs": 3, "batch_size": 150, "split_factor": 4, "seed": 2}
  ],
  "probe": {"nx": 30, "nz": 30, "pml_points": 8},
  "seed": 1
})";

}  // namespace

TEST(RunConfig, DefaultsAndOverrides) {
  const cli::RunConfig cfg = cli::parse_run_config(kTwoStage);
  EXPECT_EQ(cfg.model.nx, 51u);
  ASSERT_EQ(cfg.ladder.stages.size(), 2u);
  EXPECT_EQ(cfg.ladder.stages[0].split_factor, 1u);
  EXPECT_EQ(cfg.ladder.stages[1].split_factor, 4u);
  EXPECT_EQ(cfg.ladder.stages[1].batch_size, 150u);
  EXPECT_EQ(cfg.ladder.stages[0].lr_initial, 1e-3);
  EXPECT_EQ(cfg.probe.source_x, 1.0);
  EXPECT_EQ(cfg.ladder.split.noise_rel_std, 0.01);
  EXPECT_NO_THROW(cfg.ladder.validate());
}

TEST(RunConfig, EveryProblemIsListed) {
  try {
    cli::parse_run_config(R"({"modle": {}, "network": {"widths": [4, 0], "w00": 1},
                              "stages": [{"frequency_hz": 4}, {"frequency_hz": 2, "epochs": -3}]})");
    FAIL() << "expected a ConfigError";
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    for (const char* key : {"$.modle", "$.network.widths", "$.network.w00", "$.stages[1].frequency_hz",
                            "$.stages[1].epochs"})
      EXPECT_NE(msg.find(key), std::string::npos) << key << "\n" << msg;
  }
  EXPECT_THROW(cli::parse_run_config("{not json"), ConfigError);
  EXPECT_THROW(cli::parse_run_config("[]"), ConfigError);
  EXPECT_THROW(cli::parse_run_config("{}"), ConfigError);
  EXPECT_THROW(cli::parse_run_config(R"({"stages": [{"frequency_hz": 2, "split_factor": 4}]})"),
               ConfigError);
  EXPECT_THROW(cli::parse_run_config(R"({"model": {"path": "m.pnvm", "nx": 3},
                                         "stages": [{"frequency_hz": 2}]})"),
               ConfigError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitConfig);
  EXPECT_EQ(run({"train", "--bogus"}).code, cli::kExitConfig);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  const fs::path dir = fresh_dir("codes");
  std::ofstream(dir / "bad.json") << R"({"stages": [{"frequency_hz": 4}, {"frequency_hz": 2}]})";
  const CliRun r = run({"ladder", "--config", (dir / "bad.json").string(), "--out", (dir / "o").string()});
  EXPECT_EQ(r.code, cli::kExitConfig);
  EXPECT_FALSE(fs::exists(dir / "o"));  // rejected before any compute
  EXPECT_EQ(run({"predict", "--checkpoint", (dir / "missing.pnup").string(), "--out", "x"}).code,
            cli::kExitFailure);
  const CliRun diverge = run({"train", "--out", (dir / "d.pnup").string(), "--samples", "50", "--epochs",
                           "30", "--lr", "1e300", "--log-every", "0"});
  EXPECT_EQ(diverge.code, cli::kExitNumerical) << diverge.err;
}

TEST(Cli, ModelReferenceCompareFlow) {
  const fs::path dir = fresh_dir("flow");
  ASSERT_EQ(run({"model-gen", "--out", (dir / "h.pnvm").string(), "--nx", "41", "--nz", "41",
                 "--layer", "0:1.5"}).code, 0);
  ASSERT_EQ(run({"reference", "--model", (dir / "h.pnvm").string(), "--out", (dir / "h.pnwf").string(),
                 "--nx", "30", "--nz", "30", "--pml", "8"}).code, 0);
  for (const auto& v : load_wavefield(dir / "h.pnwf").values) ASSERT_EQ(v, std::complex<double>(0, 0));

  ASSERT_EQ(run({"model-gen", "--out", (dir / "m.pnvm").string(), "--nx", "51", "--nz", "51"}).code, 0);
  const std::vector<std::string> ref{"reference", "--model", (dir / "m.pnvm").string(), "--nx", "30",
                                     "--nz", "30", "--pml", "8", "--export-csv", "--out"};
  auto a = ref, b = ref;
  a.push_back((dir / "a.pnwf").string());
  b.push_back((dir / "b.pnwf").string());
  ASSERT_EQ(run(a).code, 0);
  ASSERT_EQ(run(b).code, 0);
  EXPECT_EQ(slurp(dir / "a.pnwf"), slurp(dir / "b.pnwf"));
  EXPECT_TRUE(fs::exists(dir / "a.csv"));

  const CliRun cmp = run({"compare", (dir / "a.pnwf").string(), (dir / "b.pnwf").string(), "--diff",
                       (dir / "d.pnwf").string()});
  ASSERT_EQ(cmp.code, 0);
  EXPECT_NE(cmp.out.find("real,0,0,1"), std::string::npos) << cmp.out;
  EXPECT_TRUE(fs::exists(dir / "d.pnwf"));
  const CliRun mismatch = run({"compare", (dir / "a.pnwf").string(), (dir / "h.pnwf").string()});
  EXPECT_EQ(mismatch.code, 0) << "same 30x30 geometry over the same extent";

  const CliRun warn = run({"reference", "--model", (dir / "m.pnvm").string(), "--out",
                        (dir / "w.pnwf").string(), "--nx", "20", "--nz", "20", "--freq", "16", "--pml", "4"});
  EXPECT_EQ(warn.code, 0);
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST(Cli, TrainSplitPredict) {
  const fs::path dir = fresh_dir("tsp");
  const std::string ck = (dir / "a.pnup").string();
  ASSERT_EQ(run({"train", "--out", ck, "--samples", "100", "--epochs", "3", "--log-every", "0",
                 "--loss-csv", (dir / "a.csv").string()}).code, 0);
  EXPECT_EQ(load_checkpoint(ck).params.parameter_count(), 94u);
  ASSERT_EQ(run({"split", "--checkpoint", ck, "--factor", "4", "--noise", "0", "--out",
                 (dir / "b.pnup").string()}).code, 0);
  EXPECT_EQ(load_checkpoint(dir / "b.pnup").params.parameter_count(), 562u);
  for (const char* name : {"p1.pnwf", "p2.pnwf"})
    ASSERT_EQ(run({"predict", "--checkpoint", ck, "--out", (dir / name).string(), "--sx", "1.0"}).code, 0);
  EXPECT_EQ(slurp(dir / "p1.pnwf"), slurp(dir / "p2.pnwf"));
  EXPECT_EQ(load_wavefield(dir / "p1.pnwf").values.size(), 10000u);
  EXPECT_EQ(run({"predict", "--checkpoint", ck, "--out", (dir / "p3.pnwf").string(), "--sx", "7"}).code,
            cli::kExitFailure);
  EXPECT_EQ(run({"split", "--checkpoint", ck, "--factor", "0", "--out", "x"}).code, cli::kExitConfig);
}

TEST(Cli, LadderWritesSummaryAndIsReproducible) {
  const fs::path dir = fresh_dir("ladder");
  std::ofstream(dir / "cfg.json") << kTwoStage;
  std::string summaries[2];
  for (int rep = 0; rep < 2; ++rep) {
    const fs::path out = dir / ("run" + std::to_string(rep));
    const CliRun r = run({"ladder", "--config", (dir / "cfg.json").string(), "--out", out.string(),
                       "--log-every", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_TRUE(fs::exists(out / ("stage_" + std::to_string(k) + ".pnup")));
      EXPECT_TRUE(fs::exists(out / ("stage_" + std::to_string(k) + "_loss.csv")));
      EXPECT_TRUE(fs::exists(out / ("stage_" + std::to_string(k) + "_pred.pnwf")));
      EXPECT_TRUE(fs::exists(out / ("stage_" + std::to_string(k) + "_ref.pnwf")));
    }
    summaries[rep] = slurp(out / "summary.csv");
  }
  EXPECT_EQ(summaries[0], summaries[1]);
  std::istringstream rows(summaries[0]);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(rows, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("stage,frequency_hz,parameters,final_loss,relative_l2_real", 0), 0u);
  EXPECT_EQ(lines[1].rfind("0,2,94,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("1,4,562,", 0), 0u);
  EXPECT_EQ(load_checkpoint(dir / "run0" / "stage_1.pnup"), load_checkpoint(dir / "run1" / "stage_1.pnup"));
}

TEST(RunConfig, ShippedPresetsParse) {
  std::size_t seen = 0;
  for (const auto& e : fs::directory_iterator(PINNUP_CONFIG_DIR)) {
    if (e.path().extension() != ".json") continue;
    SCOPED_TRACE(e.path().string());
    const cli::RunConfig cfg = cli::load_run_config(e.path());
    EXPECT_GE(cfg.ladder.stages.size(), 2u);
    ++seen;
  }
  EXPECT_GE(seen, 3u);
}
