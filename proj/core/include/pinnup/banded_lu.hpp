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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pinnup {

using cplx = std::complex<double>;

// Square complex band matrix with kl sub- and ku super-diagonals. Row i
// stores columns [i - kl, i + ku] contiguously.
class BandMatrix {
 public:
  BandMatrix(std::size_t n, std::size_t kl, std::size_t ku);

  static std::size_t storage_bytes(std::size_t n, std::size_t kl, std::size_t ku) {
    return n * (kl + ku + 1) * sizeof(cplx);
  }

  std::size_t size() const { return n_; }
  std::size_t lower() const { return kl_; }
  std::size_t upper() const { return ku_; }
  bool in_band(std::size_t i, std::size_t j) const {
    return j + kl_ >= i && j <= i + ku_;
  }

  // Precondition: in_band(i, j).
  cplx& at(std::size_t i, std::size_t j) { return data_[i * width_ + (j + kl_ - i)]; }
  cplx get(std::size_t i, std::size_t j) const {
    return in_band(i, j) ? data_[i * width_ + (j + kl_ - i)] : cplx{};
  }

  std::vector<cplx> multiply(std::span<const cplx> x) const;

 private:
  friend class BandedLU;
  std::size_t n_, kl_, ku_, width_;
  std::vector<cplx> data_;
};

// LU factorization without pivoting (fill-in stays inside the band).
// Throws SolverError when a pivot falls below 1e-14 times the infinity norm
// of its original row.
class BandedLU {
 public:
  explicit BandedLU(BandMatrix a);
  std::vector<cplx> solve(std::span<const cplx> rhs) const;
  std::size_t size() const { return lu_.size(); }

 private:
  BandMatrix lu_;
};

std::vector<cplx> banded_lu_solve(BandMatrix a, std::span<const cplx> rhs);

}  // namespace pinnup
