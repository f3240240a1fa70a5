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

#include "pinnup/complex_grid.hpp"

namespace pinnup {

struct ViewMetrics {
  double relative_l2 = 0.0;  // ||a - b|| / ||b||
  double max_abs_diff = 0.0;
  double correlation = 0.0;  // Pearson, mean removed; 0 when either side is constant
};

struct CompareReport {
  ViewMetrics real, imag, complex;
};

// a is the candidate, b the reference. Throws ShapeError on geometry mismatch.
CompareReport compare_grids(const ComplexGrid& a, const ComplexGrid& b);

// a - b on the shared geometry, tagged with a's frequency and source.
ComplexGrid difference_grid(const ComplexGrid& a, const ComplexGrid& b);

}  // namespace pinnup
