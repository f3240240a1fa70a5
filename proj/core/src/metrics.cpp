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

#include "pinnup/metrics.hpp"

#include <cmath>
#include <complex>

#include "pinnup/errors.hpp"

namespace pinnup {

namespace {

template <typename Project>
ViewMetrics real_view(const ComplexGrid& a, const ComplexGrid& b, Project proj) {
  const std::size_t n = a.values.size();
  double diff2 = 0.0, ref2 = 0.0, max_abs = 0.0, mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double va = proj(a.values[i]), vb = proj(b.values[i]);
    diff2 += (va - vb) * (va - vb);
    ref2 += vb * vb;
    max_abs = std::max(max_abs, std::abs(va - vb));
    mean_a += va;
    mean_b += vb;
  }
  mean_a /= double(n);
  mean_b /= double(n);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = proj(a.values[i]) - mean_a, db = proj(b.values[i]) - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  ViewMetrics m;
  m.relative_l2 = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : (diff2 > 0.0 ? INFINITY : 0.0);
  m.max_abs_diff = max_abs;
  m.correlation = var_a > 0.0 && var_b > 0.0 ? cov / std::sqrt(var_a * var_b) : 0.0;
  return m;
}

ViewMetrics complex_view(const ComplexGrid& a, const ComplexGrid& b) {
  const std::size_t n = a.values.size();
  std::complex<double> mean_a, mean_b;
  double diff2 = 0.0, ref2 = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = a.values[i] - b.values[i];
    diff2 += std::norm(d);
    ref2 += std::norm(b.values[i]);
    max_abs = std::max(max_abs, std::abs(d));
    mean_a += a.values[i];
    mean_b += b.values[i];
  }
  mean_a /= double(n);
  mean_b /= double(n);
  std::complex<double> cov;
  double var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto da = a.values[i] - mean_a, db = b.values[i] - mean_b;
    cov += da * std::conj(db);
    var_a += std::norm(da);
    var_b += std::norm(db);
  }
  ViewMetrics m;
  m.relative_l2 = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : (diff2 > 0.0 ? INFINITY : 0.0);
  m.max_abs_diff = max_abs;
  // magnitude of the complex correlation coefficient
  m.correlation = var_a > 0.0 && var_b > 0.0 ? std::abs(cov) / std::sqrt(var_a * var_b) : 0.0;
  return m;
}

void check_geometry(const ComplexGrid& a, const ComplexGrid& b) {
  a.validate();
  b.validate();
  if (!a.same_geometry(b)) throw ShapeError("compare: grid geometries differ");
}

}  // namespace

CompareReport compare_grids(const ComplexGrid& a, const ComplexGrid& b) {
  check_geometry(a, b);
  CompareReport r;
  r.real = real_view(a, b, [](const std::complex<double>& c) { return c.real(); });
  r.imag = real_view(a, b, [](const std::complex<double>& c) { return c.imag(); });
  r.complex = complex_view(a, b);
  return r;
}

ComplexGrid difference_grid(const ComplexGrid& a, const ComplexGrid& b) {
  check_geometry(a, b);
  ComplexGrid d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
  return d;
}

}  // namespace pinnup
