// Copyright 2026 The nhqfi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for small dimensions: adjoints, inner
 * products and the evolution exponential exp(-i H t), kept well-behaved
 * at defective (exceptional) points.
 */

#pragma once

#include "nhqfi/types.hpp"

namespace nhqfi {

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

/// <u|v>, antilinear in the first argument.
Complex inner(const Vector& u, const Vector& v);

/// Largest absolute entry.
double max_abs(const Matrix& m);

/**
 * exp(-i H t).
 *
 * For dim 2 a closed form over the traceless part B = H - mu*I (B^2 = nu*I)
 * is used; below |nu| < 1e-12 * max(1, max_abs(H)^2) it switches to the
 * defective limit e^{-i mu t} (I - i t B), which is exact when the
 * eigenvalues coalesce. Larger dimensions go through the scaled and squared
 * truncated series.
 */
Matrix mat_exp(const Matrix& h, double t);

/// Scaling-and-squaring Taylor exponential of -i H t. This is the generic
/// path of mat_exp for dim > 2, exposed so the two routes can be compared.
Matrix mat_exp_series(const Matrix& h, double t, int terms = 20);

namespace detail {
void require_square(const Matrix& m, const char* who);
void require_finite(const Matrix& m, const char* who);
void require_finite(const Vector& v, const char* who);
}  // namespace detail

}  // namespace nhqfi
