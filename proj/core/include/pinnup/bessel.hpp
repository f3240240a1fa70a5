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

namespace pinnup {

// Polynomial approximations of the order-zero Bessel functions, split at
// x = 3 (small-argument polynomial / large-argument amplitude-phase form).
// Absolute error below 5e-7 on [0, 50].

// x >= 0; throws DomainError otherwise.
double bessel_j0(double x);

// x > 0; throws DomainError otherwise (logarithmic singularity at 0).
double bessel_y0(double x);

}  // namespace pinnup
