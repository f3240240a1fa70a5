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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "pinnup/complex_grid.hpp"
#include "pinnup/errors.hpp"
#include "pinnup/metrics.hpp"

using namespace pinnup;
namespace fs = std::filesystem;

namespace {

ComplexGrid random_grid(std::size_t nx, std::size_t nz, std::uint64_t seed) {
  ComplexGrid g{nx, nz, 0.1, 0.2, 0.0, 0.5, 4.0, 1.0, 0.025, {}};
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> n;
  for (std::size_t i = 0; i < nx * nz; ++i) g.values.emplace_back(n(rng), n(rng));
  return g;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Metrics, IdenticalGrids) {
  const ComplexGrid a = random_grid(10, 7, 1);
  const CompareReport r = compare_grids(a, a);
  for (const ViewMetrics* v : {&r.real, &r.imag, &r.complex}) {
    EXPECT_EQ(v->relative_l2, 0.0);
    EXPECT_EQ(v->max_abs_diff, 0.0);
    EXPECT_NEAR(v->correlation, 1.0, 1e-14);
  }
}

TEST(Metrics, ZeroCandidate) {
  const ComplexGrid b = random_grid(10, 7, 2);
  ComplexGrid a = b;
  for (auto& v : a.values) v = 0.0;
  const CompareReport r = compare_grids(a, b);
  EXPECT_NEAR(r.real.relative_l2, 1.0, 1e-15);
  EXPECT_NEAR(r.complex.relative_l2, 1.0, 1e-15);
  EXPECT_EQ(r.real.correlation, 0.0);
}

TEST(Metrics, ScaledCandidate) {
  const ComplexGrid b = random_grid(9, 9, 3);
  ComplexGrid a = b;
  for (auto& v : a.values) v *= 2.0;
  const CompareReport r = compare_grids(a, b);
  EXPECT_NEAR(r.real.relative_l2, 1.0, 1e-14);
  EXPECT_NEAR(r.complex.relative_l2, 1.0, 1e-14);
  EXPECT_NEAR(r.real.correlation, 1.0, 1e-14);
  EXPECT_NEAR(r.imag.correlation, 1.0, 1e-14);
}

TEST(Metrics, DifferenceGridAndGeometryMismatch) {
  const ComplexGrid a = random_grid(5, 4, 4), b = random_grid(5, 4, 5);
  const ComplexGrid d = difference_grid(a, b);
  for (std::size_t i = 0; i < d.values.size(); ++i) EXPECT_EQ(d.values[i], a.values[i] - b.values[i]);
  EXPECT_THROW(compare_grids(a, random_grid(4, 5, 6)), ShapeError);
  EXPECT_THROW(difference_grid(a, random_grid(5, 5, 6)), ShapeError);
}

TEST(ComplexGridFile, RoundTripIsBitExact) {
  const ComplexGrid g = random_grid(13, 11, 7);  // float-representable values
  const fs::path a = fs::temp_directory_path() / "pinnup_test_grid_a.pnwf";
  const fs::path b = fs::temp_directory_path() / "pinnup_test_grid_b.pnwf";
  save_wavefield(g, a);
  const ComplexGrid back = load_wavefield(a);
  EXPECT_EQ(back.values, g.values);
  EXPECT_TRUE(back.same_geometry(g));
  EXPECT_EQ(back.frequency_hz, 4.0);
  EXPECT_EQ(back.source_z, 0.025);
  save_wavefield(back, b);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a).size(), 4 + 2 + 2 * 4 + 7 * 8 + 13 * 11 * 8u);
}

TEST(ComplexGridFile, CorruptFiles) {
  const ComplexGrid g = random_grid(4, 4, 8);
  const fs::path p = fs::temp_directory_path() / "pinnup_test_grid_c.pnwf";
  save_wavefield(g, p);
  const std::string bytes = slurp(p);
  {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << bytes.substr(0, bytes.size() - 1);
  }
  EXPECT_THROW(load_wavefield(p), CorruptFileError);
  {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << "PNVM" << bytes.substr(4);
  }
  EXPECT_THROW(load_wavefield(p), CorruptFileError);
  {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << bytes << "extra";
  }
  EXPECT_THROW(load_wavefield(p), CorruptFileError);
}

TEST(ComplexGridFile, CsvExport) {
  ComplexGrid g{2, 2, 0.5, 0.5, 0.0, 0.0, 2.0, 1.0, 0.025, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}};
  const fs::path p = fs::temp_directory_path() / "pinnup_test_grid.csv";
  export_wavefield_csv(g, p);
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,z,re,im");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4u);
}
