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

#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "pinnup/checkpoint.hpp"
#include "pinnup/errors.hpp"
#include "pinnup/metrics.hpp"
#include "pinnup/refsolver.hpp"
#include "pinnup/splitting.hpp"
#include "pinnup/trainer.hpp"

namespace pinnup::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt_g(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_grid(const ComplexGrid& grid, const fs::path& path, bool csv) {
  save_wavefield(grid, path);
  if (csv) {
    fs::path c = path;
    c.replace_extension(".csv");
    export_wavefield_csv(grid, c);
  }
}

VelocityModel model_or_default(const std::string& path) {
  return path.empty() ? default_model() : load_model(path);
}

void print_report(std::ostream& out, const CompareReport& r) {
  out << "view,relative_l2,max_abs_diff,correlation\n";
  auto row = [&](const char* name, const ViewMetrics& m) {
    out << name << ',' << fmt_g(m.relative_l2, 10) << ',' << fmt_g(m.max_abs_diff, 10) << ','
        << fmt_g(m.correlation, 10) << '\n';
  };
  row("real", r.real);
  row("imag", r.imag);
  row("complex", r.complex);
}

std::vector<Layer> parse_layers(const std::vector<std::string>& specs) {
  std::vector<Layer> layers;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ConfigError("layer '" + s + "' must be <top_km>:<v_kms>");
    try {
      layers.push_back({std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))});
    } catch (const std::exception&) {
      throw ConfigError("layer '" + s + "' must be <top_km>:<v_kms>");
    }
  }
  return layers;
}

// --- model-gen -------------------------------------------------------------

struct ModelGenArgs {
  std::size_t nx = 251, nz = 251;
  double extent = kDefaultExtent, v0 = kDefaultBackgroundVelocity;
  std::vector<std::string> layers;
  std::string out;
};

void cmd_model_gen(const ModelGenArgs& a, std::ostream& out) {
  const auto layers = a.layers.empty() ? default_layers() : parse_layers(a.layers);
  const VelocityModel model = layered_model(a.nx, a.nz, a.extent, layers, a.v0);
  save_model(model, a.out);
  out << "wrote " << a.out << " (" << model.nx() << "x" << model.nz() << ", v in ["
      << model.min_velocity() << ", " << model.max_velocity() << "] km/s)\n";
}

// --- train -----------------------------------------------------------------

struct TrainArgs {
  std::string model, init, out, loss_csv;
  LadderStage stage;
  std::vector<std::size_t> widths{4, 4};
  int pe_bands = 2;
  double w0 = 1.0;
  std::uint64_t seed = 1;
  bool resume_optimizer = false;
  std::size_t log_every = 1000;
};

void cmd_train(TrainArgs a, std::ostream& out, std::ostream& err) {
  const VelocityModel model = model_or_default(a.model);
  a.stage.seed = a.seed;
  a.stage.batch_size = std::min(a.stage.batch_size, a.stage.num_samples);
  a.stage.validate();
  Checkpoint init;
  if (a.init.empty()) {
    NetworkSpec spec;
    spec.widths = a.widths;
    spec.pe_bands = a.pe_bands;
    spec.w0 = a.w0;
    init = fresh_checkpoint(spec, model, a.stage.frequency_hz, a.seed);
  } else {
    init = load_checkpoint(a.init);
    init.frequency_hz = a.stage.frequency_hz;
  }
  StageOptions opts;
  opts.resume_optimizer = a.resume_optimizer;
  opts.on_epoch = [&](const LossRecord& r) {
    if (a.log_every > 0 && (r.epoch % a.log_every == 0 || r.epoch == 1))
      err << "epoch " << r.epoch << " loss " << fmt_g(r.loss) << " lr " << fmt_g(r.lr) << '\n';
  };
  const StageResult res = run_stage(init, a.stage, model, opts);
  save_checkpoint(res.checkpoint, a.out);
  if (!a.loss_csv.empty()) save_loss_history(res.history, a.loss_csv);
  out << "wrote " << a.out << " (" << res.checkpoint.params.parameter_count()
      << " parameters, final loss " << fmt_g(res.final_loss, 10) << ")\n";
}

// --- split -----------------------------------------------------------------

struct SplitArgs {
  std::string checkpoint, out;
  std::size_t factor = 4;
  double noise = 1e-2;
  std::uint64_t seed = 3;
  bool divide_output_bias = false;
};

void cmd_split(const SplitArgs& a, std::ostream& out) {
  Checkpoint ckpt = load_checkpoint(a.checkpoint);
  SplitConfig cfg;
  cfg.factor = a.factor;
  cfg.noise_rel_std = a.noise;
  cfg.preserve_output_bias = !a.divide_output_bias;
  cfg.seed = a.seed;
  cfg.validate();
  Checkpoint next = ckpt;
  next.params = split_network(ckpt.params, cfg);
  next.optimizer.reset();
  const double drift = verify_function_preservation(ckpt.params, next.params, 1000);
  save_checkpoint(next, a.out);
  out << "wrote " << a.out << " (" << ckpt.params.parameter_count() << " -> "
      << next.params.parameter_count() << " parameters, max output change "
      << fmt_g(drift) << ")\n";
}

// --- predict / reference / compare ------------------------------------------

struct GridArgs {
  std::string model;
  std::size_t nx = 100, nz = 100;
};

GridSpec grid_for(const GridArgs& g, const VelocityModel& model) {
  return GridSpec::covering(model, g.nx, g.nz);
}

struct PredictArgs {
  std::string checkpoint, out;
  GridArgs grid;
  double sx = 1.0, sz = 0.025;
  bool csv = false;
};

void cmd_predict(const PredictArgs& a, std::ostream& out) {
  const Checkpoint ckpt = load_checkpoint(a.checkpoint);
  const VelocityModel model = model_or_default(a.grid.model);
  const ComplexGrid pred = predict_wavefield(ckpt, a.sx, a.sz, grid_for(a.grid, model));
  write_grid(pred, a.out, a.csv);
  out << "wrote " << a.out << " (" << pred.values.size() << " values)\n";
}

struct ReferenceArgs {
  std::string out;
  GridArgs grid;
  double freq = 2.0, sx = 1.0, sz = 0.025;
  std::size_t pml = 20, refine = 1;
  bool csv = false;
};

void cmd_reference(const ReferenceArgs& a, std::ostream& out, std::ostream& err) {
  const VelocityModel model = model_or_default(a.grid.model);
  const GridSpec grid = grid_for(a.grid, model);
  if (auto w = dispersion_warning(model, a.freq, grid.refined(a.refine))) err << "warning: " << *w << '\n';
  PMLConfig pml;
  pml.thickness_points = a.pml;
  const double omega = 2.0 * std::numbers::pi * a.freq;
  ComplexGrid ref;
  try {
    ref = a.refine > 1 ? solve_scattered_refined(model, omega, a.sx, a.sz, grid, a.refine, pml)
                       : solve_scattered(model, omega, a.sx, a.sz, grid, pml);
  } catch (const SolverError& e) {
    throw SolverError(std::string("reference solve at ") + fmt_g(a.freq) + " Hz failed: " + e.what());
  }
  write_grid(ref, a.out, a.csv);
  out << "wrote " << a.out << " (" << ref.values.size() << " values)\n";
}

struct CompareArgs {
  std::string a, b, diff;
  bool csv = false;
};

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const ComplexGrid ga = load_wavefield(a.a);
  const ComplexGrid gb = load_wavefield(a.b);
  const CompareReport report = compare_grids(ga, gb);
  print_report(out, report);
  if (!a.diff.empty()) write_grid(difference_grid(ga, gb), a.diff, a.csv);
}

// --- ladder ----------------------------------------------------------------

struct LadderArgs {
  std::string config, out;
  std::size_t log_every = 1000;
  bool csv = false;
};

void cmd_ladder(const LadderArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_run_config(a.config);
  fs::path dir;
  if (!a.out.empty())
    dir = a.out;
  else if (cfg.out_dir)
    dir = *cfg.out_dir;
  else
    throw ConfigError("ladder needs an output directory (--out or out_dir)");
  cfg.ladder.validate();
  const VelocityModel model = cfg.model.build();
  const GridSpec probe_grid = GridSpec::covering(model, cfg.probe.nx, cfg.probe.nz);
  const double sz = cfg.ladder.sampler.source_depth_km;
  fs::create_directories(dir);

  std::ofstream summary(dir / "summary.csv");
  if (!summary) throw IoError("cannot write " + (dir / "summary.csv").string());
  const std::string header =
      "stage,frequency_hz,parameters,final_loss,relative_l2_real,correlation_real,"
      "relative_l2_complex,correlation_complex";
  summary << header << '\n';
  out << header << '\n';

  LadderOptions opts;
  opts.out_dir = dir;
  opts.on_epoch = [&](std::size_t stage, const LossRecord& r) {
    if (a.log_every > 0 && (r.epoch % a.log_every == 0 || r.epoch == 1))
      err << "stage " << stage << " epoch " << r.epoch << " loss " << fmt_g(r.loss) << " lr "
          << fmt_g(r.lr) << '\n';
  };
  opts.on_stage_done = [&](std::size_t k, const StageResult& res, bool resumed) {
    const double f = cfg.ladder.stages[k].frequency_hz;
    if (resumed) err << "stage " << k << " loaded from " << stage_checkpoint_path(dir, k) << '\n';
    if (auto w = dispersion_warning(model, f, probe_grid.refined(cfg.probe.refine)))
      err << "warning: " << *w << '\n';
    PMLConfig pml;
    pml.thickness_points = cfg.probe.pml_points;
    const double omega = 2.0 * std::numbers::pi * f;
    const ComplexGrid ref =
        cfg.probe.refine > 1
            ? solve_scattered_refined(model, omega, cfg.probe.source_x, sz, probe_grid,
                                      cfg.probe.refine, pml)
            : solve_scattered(model, omega, cfg.probe.source_x, sz, probe_grid, pml);
    const ComplexGrid pred = predict_wavefield(res.checkpoint, cfg.probe.source_x, sz, probe_grid);
    write_grid(ref, dir / ("stage_" + std::to_string(k) + "_ref.pnwf"), a.csv);
    write_grid(pred, dir / ("stage_" + std::to_string(k) + "_pred.pnwf"), a.csv);
    const CompareReport r = compare_grids(pred, ref);
    std::ostringstream row;
    row << k << ',' << fmt_g(f, 10) << ',' << res.checkpoint.params.parameter_count() << ','
        << fmt_g(res.final_loss, 10) << ',' << fmt_g(r.real.relative_l2, 10) << ','
        << fmt_g(r.real.correlation, 10) << ',' << fmt_g(r.complex.relative_l2, 10) << ','
        << fmt_g(r.complex.correlation, 10);
    summary << row.str() << '\n' << std::flush;
    out << row.str() << '\n' << std::flush;
  };
  run_ladder(cfg.ladder, model, opts);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pinnup: frequency-upscaled physics-informed wavefield solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pinnup 0.1.0");

  ModelGenArgs mg;
  auto* c_mg = app.add_subcommand("model-gen", "write a layered velocity model (PNVM)");
  c_mg->add_option("--out", mg.out, "output .pnvm path")->required();
  c_mg->add_option("--nx", mg.nx, "nodes along x")->check(CLI::Range(2, 100000));
  c_mg->add_option("--nz", mg.nz, "nodes along z")->check(CLI::Range(2, 100000));
  c_mg->add_option("--extent", mg.extent, "side length in km")->check(CLI::PositiveNumber);
  c_mg->add_option("--v0", mg.v0, "background velocity in km/s")->check(CLI::PositiveNumber);
  c_mg->add_option("--layer", mg.layers, "layer as <top_km>:<v_kms>, repeatable");

  TrainArgs tr;
  auto* c_tr = app.add_subcommand("train", "train one frequency stage");
  c_tr->add_option("--out", tr.out, "output checkpoint")->required();
  c_tr->add_option("--model", tr.model, "velocity model (.pnvm); default layered model if absent");
  c_tr->add_option("--init", tr.init, "start from this checkpoint instead of a fresh network");
  c_tr->add_option("--freq", tr.stage.frequency_hz, "frequency in Hz")->check(CLI::PositiveNumber);
  c_tr->add_option("--samples", tr.stage.num_samples, "collocation samples")->check(CLI::PositiveNumber);
  c_tr->add_option("--epochs", tr.stage.epochs, "epochs")->check(CLI::PositiveNumber);
  c_tr->add_option("--batch", tr.stage.batch_size, "minibatch size")->check(CLI::PositiveNumber);
  c_tr->add_option("--lr", tr.stage.lr_initial, "initial learning rate")->check(CLI::PositiveNumber);
  c_tr->add_option("--decay-every", tr.stage.lr_decay_every_epochs, "epochs per lr decay")->check(CLI::PositiveNumber);
  c_tr->add_option("--decay-factor", tr.stage.lr_decay_factor, "lr decay factor");
  c_tr->add_option("--widths", tr.widths, "hidden widths of a fresh network")->delimiter(',');
  c_tr->add_option("--pe-bands", tr.pe_bands, "positional encoding bands")->check(CLI::NonNegativeNumber);
  c_tr->add_option("--w0", tr.w0, "sine frequency factor");
  c_tr->add_option("--seed", tr.seed, "seed");
  c_tr->add_option("--loss-csv", tr.loss_csv, "write the per-epoch loss history here");
  c_tr->add_flag("--resume-optimizer", tr.resume_optimizer, "continue the checkpoint's Adam moments");
  c_tr->add_option("--log-every", tr.log_every, "progress interval in epochs (0 = silent)");

  SplitArgs sp;
  auto* c_sp = app.add_subcommand("split", "split every hidden neuron of a checkpoint");
  c_sp->add_option("--checkpoint", sp.checkpoint, "input checkpoint")->required();
  c_sp->add_option("--out", sp.out, "output checkpoint")->required();
  c_sp->add_option("--factor", sp.factor, "offspring per neuron")->check(CLI::Range(1, 64));
  c_sp->add_option("--noise", sp.noise, "relative noise std")->check(CLI::NonNegativeNumber);
  c_sp->add_option("--seed", sp.seed, "noise seed");
  c_sp->add_flag("--divide-output-bias", sp.divide_output_bias, "divide the output bias by the factor");

  PredictArgs pr;
  auto* c_pr = app.add_subcommand("predict", "evaluate a checkpoint on a regular grid (PNWF)");
  c_pr->add_option("--checkpoint", pr.checkpoint, "checkpoint")->required();
  c_pr->add_option("--out", pr.out, "output .pnwf path")->required();
  c_pr->add_option("--model", pr.grid.model, "model whose extent defines the grid");
  c_pr->add_option("--nx", pr.grid.nx, "grid nodes along x")->check(CLI::Range(2, 100000));
  c_pr->add_option("--nz", pr.grid.nz, "grid nodes along z")->check(CLI::Range(2, 100000));
  c_pr->add_option("--sx", pr.sx, "source x in km");
  c_pr->add_option("--sz", pr.sz, "source depth in km");
  c_pr->add_flag("--export-csv", pr.csv, "also write x,z,re,im text next to the output");

  ReferenceArgs rf;
  auto* c_rf = app.add_subcommand("reference", "finite-difference scattered wavefield (PNWF)");
  c_rf->add_option("--out", rf.out, "output .pnwf path")->required();
  c_rf->add_option("--model", rf.grid.model, "velocity model (.pnvm)");
  c_rf->add_option("--nx", rf.grid.nx, "grid nodes along x")->check(CLI::Range(2, 100000));
  c_rf->add_option("--nz", rf.grid.nz, "grid nodes along z")->check(CLI::Range(2, 100000));
  c_rf->add_option("--freq", rf.freq, "frequency in Hz")->check(CLI::PositiveNumber);
  c_rf->add_option("--sx", rf.sx, "source x in km");
  c_rf->add_option("--sz", rf.sz, "source depth in km");
  c_rf->add_option("--pml", rf.pml, "absorbing layer thickness in grid points");
  c_rf->add_option("--refine", rf.refine, "solve on a grid refined by this factor")->check(CLI::Range(1, 16));
  c_rf->add_flag("--export-csv", rf.csv, "also write x,z,re,im text next to the output");

  CompareArgs cp;
  auto* c_cp = app.add_subcommand("compare", "metrics of grid A against reference grid B");
  c_cp->add_option("a", cp.a, "candidate .pnwf")->required();
  c_cp->add_option("b", cp.b, "reference .pnwf")->required();
  c_cp->add_option("--diff", cp.diff, "write A - B here");
  c_cp->add_flag("--export-csv", cp.csv, "also write the difference as x,z,re,im text");

  LadderArgs ld;
  auto* c_ld = app.add_subcommand("ladder", "run a frequency ladder from a JSON config");
  c_ld->add_option("--config", ld.config, "run configuration (JSON)")->required();
  c_ld->add_option("--out", ld.out, "output directory");
  c_ld->add_option("--log-every", ld.log_every, "progress interval in epochs (0 = silent)");
  c_ld->add_flag("--export-csv", ld.csv, "also write probe grids as x,z,re,im text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*c_mg) cmd_model_gen(mg, out);
    else if (*c_tr) cmd_train(tr, out, err);
    else if (*c_sp) cmd_split(sp, out);
    else if (*c_pr) cmd_predict(pr, out);
    else if (*c_rf) cmd_reference(rf, out, err);
    else if (*c_cp) cmd_compare(cp, out);
    else if (*c_ld) cmd_ladder(ld, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace pinnup::cli
