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

#include "pinnup/banded_lu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinnup/errors.hpp"

namespace pinnup {

BandMatrix::BandMatrix(std::size_t n, std::size_t kl, std::size_t ku)
    : n_(n), kl_(kl), ku_(ku), width_(kl + ku + 1), data_(n * (kl + ku + 1)) {
  if (n == 0) throw ShapeError("band matrix: size must be >= 1");
}

std::vector<cplx> BandMatrix::multiply(std::span<const cplx> x) const {
  if (x.size() != n_) throw ShapeError("band matrix: vector size mismatch");
  std::vector<cplx> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i >= kl_ ? i - kl_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + ku_);
    cplx s{};
    for (std::size_t j = j0; j <= j1; ++j) s += data_[i * width_ + (j + kl_ - i)] * x[j];
    y[i] = s;
  }
  return y;
}

BandedLU::BandedLU(BandMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.n_, kl = lu_.kl_, ku = lu_.ku_, w = lu_.width_;
  // row infinity norms of the original matrix
  std::vector<double> row_norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < w; ++k) row_norm[i] = std::max(row_norm[i], std::abs(lu_.data_[i * w + k]));

  // complex arithmetic is spelled out on (re, im) pairs to keep the inner
  // loop free of the library's NaN-recovery branches
  auto* d = reinterpret_cast<double*>(lu_.data_.data());
  for (std::size_t k = 0; k < n; ++k) {
    const cplx pivot = lu_.data_[k * w + kl];
    if (!(std::abs(pivot) >= 1e-14 * row_norm[k]) || std::abs(pivot) == 0.0)
      throw SolverError("banded LU: pivot " + std::to_string(std::abs(pivot)) + " at row " +
                        std::to_string(k) + " is below 1e-14 of its row norm");
    const cplx inv_pivot = 1.0 / pivot;
    const std::size_t i1 = std::min(n - 1, k + kl);
    const std::size_t j1 = std::min(n - 1, k + ku);
    const std::size_t len = j1 - k;  // columns k+1 .. j1
    const double* urow = d + 2 * (k * w + kl + 1);
    for (std::size_t i = k + 1; i <= i1; ++i) {
      cplx& lik = lu_.data_[i * w + (k + kl - i)];
      if (lik == cplx{}) continue;
      lik *= inv_pivot;
      const double lr = lik.real(), li = lik.imag();
      double* row = d + 2 * (i * w + (k + 1 + kl - i));
      for (std::size_t j = 0; j < len; ++j) {
        const double ur = urow[2 * j], ui = urow[2 * j + 1];
        row[2 * j] -= lr * ur - li * ui;
        row[2 * j + 1] -= lr * ui + li * ur;
      }
    }
  }
}

std::vector<cplx> BandedLU::solve(std::span<const cplx> rhs) const {
  const std::size_t n = lu_.n_, kl = lu_.kl_, ku = lu_.ku_, w = lu_.width_;
  if (rhs.size() != n) throw ShapeError("banded LU: right-hand side size mismatch");
  std::vector<cplx> x(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = i >= kl ? i - kl : 0;
    cplx s = x[i];
    for (std::size_t j = j0; j < i; ++j) s -= lu_.data_[i * w + (j + kl - i)] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t j1 = std::min(n - 1, i + ku);
    cplx s = x[i];
    for (std::size_t j = i + 1; j <= j1; ++j) s -= lu_.data_[i * w + (j + kl - i)] * x[j];
    x[i] = s / lu_.data_[i * w + kl];
  }
  return x;
}

std::vector<cplx> banded_lu_solve(BandMatrix a, std::span<const cplx> rhs) {
  return BandedLU(std::move(a)).solve(rhs);
}

}  // namespace pinnup
