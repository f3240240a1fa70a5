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

#include "cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pinnup/errors.hpp"

namespace pinnup::cli {

using nlohmann::json;

VelocityModel ModelSpec::build() const {
  if (path) return load_model(*path);
  return layered_model(nx, nz, extent_km, layers, v0);
}

namespace {

// Collects validation problems keyed by their JSON path.
class Problems {
 public:
  void add(const std::string& where, const std::string& what) {
    items_.push_back(where + ": " + what);
  }
  bool empty() const { return items_.empty(); }
  std::string report() const {
    std::ostringstream out;
    out << "invalid run configuration (" << items_.size() << " problem"
        << (items_.size() == 1 ? "" : "s") << "):";
    for (const auto& i : items_) out << "\n  - " << i;
    return out.str();
  }

 private:
  std::vector<std::string> items_;
};

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed, Problems& p) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) p.add(where + "." + key, "unknown key");
}

bool is_object(const json& parent, const char* key, const std::string& where, Problems& p) {
  if (!parent.contains(key)) return false;
  if (!parent[key].is_object()) {
    p.add(where + "." + key, "must be an object");
    return false;
  }
  return true;
}

template <typename T>
void read(const json& obj, const char* key, const std::string& where, T& out, Problems& p) {
  if (!obj.contains(key)) return;
  const json& v = obj[key];
  const std::string at = where + "." + key;
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) return p.add(at, "must be a boolean");
    out = v.get<bool>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || (std::is_unsigned_v<T> && v.get<long long>() < 0))
      return p.add(at, "must be a non-negative integer");
    out = v.get<T>();
  } else if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number()) return p.add(at, "must be a number");
    out = v.get<T>();
  } else {
    if (!v.is_string()) return p.add(at, "must be a string");
    out = v.get<std::string>();
  }
}

void check(bool ok, const std::string& at, const std::string& what, Problems& p) {
  if (!ok) p.add(at, what);
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("run configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("run configuration must be a JSON object");

  Problems p;
  RunConfig cfg;
  reject_unknown(doc, "$", {"model", "network", "split", "sampler", "stages", "probe", "out_dir", "seed"}, p);
  read(doc, "seed", "$", cfg.seed, p);
  if (doc.contains("out_dir")) {
    std::string dir;
    read(doc, "out_dir", "$", dir, p);
    cfg.out_dir = dir;
  }

  if (is_object(doc, "model", "$", p)) {
    const json& m = doc["model"];
    reject_unknown(m, "$.model", {"path", "layers", "nx", "nz", "extent_km", "v0"}, p);
    if (m.contains("path")) {
      std::string path;
      read(m, "path", "$.model", path, p);
      cfg.model.path = path;
      for (const char* k : {"layers", "nx", "nz", "extent_km", "v0"})
        if (m.contains(k)) p.add(std::string("$.model.") + k, "cannot be combined with model.path");
    }
    if (m.contains("layers")) {
      const json& layers = m["layers"];
      if (!layers.is_array() || layers.empty()) {
        p.add("$.model.layers", "must be a non-empty array of [top_depth_km, velocity_kms]");
      } else {
        cfg.model.layers.clear();
        for (std::size_t k = 0; k < layers.size(); ++k) {
          const json& l = layers[k];
          if (!l.is_array() || l.size() != 2 || !l[0].is_number() || !l[1].is_number()) {
            p.add("$.model.layers[" + std::to_string(k) + "]", "must be [top_depth_km, velocity_kms]");
            continue;
          }
          cfg.model.layers.push_back({l[0].get<double>(), l[1].get<double>()});
        }
        const auto& L = cfg.model.layers;
        for (std::size_t k = 0; k < L.size(); ++k) {
          const std::string at = "$.model.layers[" + std::to_string(k) + "]";
          check(L[k].velocity_kms > 0.0, at, "velocity must be > 0", p);
          if (k == 0) check(L[k].top_depth_km == 0.0, at, "first layer must start at depth 0", p);
          if (k > 0) check(L[k].top_depth_km > L[k - 1].top_depth_km, at, "layer tops must increase strictly", p);
        }
      }
    }
    read(m, "nx", "$.model", cfg.model.nx, p);
    read(m, "nz", "$.model", cfg.model.nz, p);
    read(m, "extent_km", "$.model", cfg.model.extent_km, p);
    read(m, "v0", "$.model", cfg.model.v0, p);
    check(cfg.model.nx >= 2 && cfg.model.nz >= 2, "$.model", "nx and nz must be >= 2", p);
    check(cfg.model.extent_km > 0.0, "$.model.extent_km", "must be > 0", p);
    check(cfg.model.v0 > 0.0, "$.model.v0", "must be > 0", p);
  }

  NetworkSpec& net = cfg.ladder.network;
  if (is_object(doc, "network", "$", p)) {
    const json& n = doc["network"];
    reject_unknown(n, "$.network", {"widths", "pe_bands", "include_raw", "w0"}, p);
    if (n.contains("widths")) {
      const json& w = n["widths"];
      bool ok = w.is_array() && !w.empty();
      if (ok)
        for (const auto& v : w) ok = ok && v.is_number_integer() && v.get<long long>() >= 1;
      if (!ok) {
        p.add("$.network.widths", "must be a non-empty array of integers >= 1");
      } else {
        net.widths.clear();
        for (const auto& v : w) net.widths.push_back(v.get<std::size_t>());
      }
    }
    read(n, "pe_bands", "$.network", net.pe_bands, p);
    read(n, "include_raw", "$.network", net.include_raw, p);
    read(n, "w0", "$.network", net.w0, p);
    check(net.pe_bands >= 0, "$.network.pe_bands", "must be >= 0", p);
    check(net.w0 != 0.0, "$.network.w0", "must be nonzero", p);
  }

  if (is_object(doc, "split", "$", p)) {
    const json& s = doc["split"];
    reject_unknown(s, "$.split", {"noise_rel_std", "preserve_output_bias"}, p);
    read(s, "noise_rel_std", "$.split", cfg.ladder.split.noise_rel_std, p);
    read(s, "preserve_output_bias", "$.split", cfg.ladder.split.preserve_output_bias, p);
    check(cfg.ladder.split.noise_rel_std >= 0.0, "$.split.noise_rel_std", "must be >= 0", p);
  }

  SamplerConfig& sampler = cfg.ladder.sampler;
  if (is_object(doc, "sampler", "$", p)) {
    const json& s = doc["sampler"];
    reject_unknown(s, "$.sampler", {"source_depth_km", "source_x_range", "exclusion_radius_km"}, p);
    read(s, "source_depth_km", "$.sampler", sampler.source_depth_km, p);
    read(s, "exclusion_radius_km", "$.sampler", sampler.exclusion_radius_km, p);
    if (s.contains("source_x_range")) {
      const json& r = s["source_x_range"];
      if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number() ||
          r[0].get<double>() > r[1].get<double>())
        p.add("$.sampler.source_x_range", "must be [lo, hi] with lo <= hi");
      else
        sampler.source_x_range = {r[0].get<double>(), r[1].get<double>()};
    }
    check(sampler.exclusion_radius_km >= 0.0, "$.sampler.exclusion_radius_km", "must be >= 0", p);
  }

  if (!doc.contains("stages")) {
    p.add("$.stages", "is required");
  } else if (!doc["stages"].is_array() || doc["stages"].empty()) {
    p.add("$.stages", "must be a non-empty array");
  } else {
    const json& stages = doc["stages"];
    for (std::size_t k = 0; k < stages.size(); ++k) {
      const std::string at = "$.stages[" + std::to_string(k) + "]";
      if (!stages[k].is_object()) {
        p.add(at, "must be an object");
        continue;
      }
      const json& s = stages[k];
      reject_unknown(s, at,
                     {"frequency_hz", "split_factor", "num_samples", "epochs", "batch_size",
                      "lr_initial", "lr_decay_every_epochs", "lr_decay_factor", "seed"},
                     p);
      LadderStage st;
      st.split_factor = k == 0 ? 1 : 4;
      st.seed = cfg.seed + k;
      if (!s.contains("frequency_hz")) p.add(at + ".frequency_hz", "is required");
      read(s, "frequency_hz", at, st.frequency_hz, p);
      read(s, "split_factor", at, st.split_factor, p);
      read(s, "num_samples", at, st.num_samples, p);
      read(s, "epochs", at, st.epochs, p);
      read(s, "batch_size", at, st.batch_size, p);
      read(s, "lr_initial", at, st.lr_initial, p);
      read(s, "lr_decay_every_epochs", at, st.lr_decay_every_epochs, p);
      read(s, "lr_decay_factor", at, st.lr_decay_factor, p);
      read(s, "seed", at, st.seed, p);
      if (!s.contains("batch_size")) st.batch_size = std::min(st.batch_size, st.num_samples);

      check(st.frequency_hz > 0.0, at + ".frequency_hz", "must be > 0", p);
      check(st.split_factor >= 1, at + ".split_factor", "must be >= 1", p);
      if (k == 0) check(st.split_factor == 1, at + ".split_factor", "first stage cannot split", p);
      check(st.num_samples >= 1, at + ".num_samples", "must be >= 1", p);
      check(st.epochs >= 1, at + ".epochs", "must be >= 1", p);
      check(st.batch_size >= 1 && st.batch_size <= st.num_samples, at + ".batch_size",
            "must be in [1, num_samples]", p);
      check(st.lr_initial > 0.0, at + ".lr_initial", "must be > 0", p);
      check(st.lr_decay_every_epochs >= 1, at + ".lr_decay_every_epochs", "must be >= 1", p);
      check(st.lr_decay_factor > 0.0 && st.lr_decay_factor <= 1.0, at + ".lr_decay_factor",
            "must be in (0, 1]", p);
      if (k > 0 && !cfg.ladder.stages.empty())
        check(st.frequency_hz > cfg.ladder.stages.back().frequency_hz, at + ".frequency_hz",
              "stage frequencies must increase strictly", p);
      cfg.ladder.stages.push_back(st);
    }
  }

  if (is_object(doc, "probe", "$", p)) {
    const json& pr = doc["probe"];
    reject_unknown(pr, "$.probe", {"source_x", "nx", "nz", "pml_points", "refine"}, p);
    read(pr, "source_x", "$.probe", cfg.probe.source_x, p);
    read(pr, "nx", "$.probe", cfg.probe.nx, p);
    read(pr, "nz", "$.probe", cfg.probe.nz, p);
    read(pr, "pml_points", "$.probe", cfg.probe.pml_points, p);
    read(pr, "refine", "$.probe", cfg.probe.refine, p);
    check(cfg.probe.nx >= 2 && cfg.probe.nz >= 2, "$.probe", "nx and nz must be >= 2", p);
    check(cfg.probe.refine >= 1, "$.probe.refine", "must be >= 1", p);
  }

  if (!p.empty()) throw ConfigError(p.report());
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read run configuration " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

}  // namespace pinnup::cli
