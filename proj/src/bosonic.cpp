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

#include "nhqfi/bosonic.hpp"

#include <cmath>

#include "nhqfi/linalg.hpp"

namespace nhqfi {

namespace {

void require_params(const BosonicParams& p, const char* who) {
  if (!std::isfinite(p.omega0) || !std::isfinite(p.g) ||
      !std::isfinite(p.gamma_a) || !std::isfinite(p.gamma_b)) {
    fail(Errc::kInvalidArgument, std::string(who) + ": non-finite parameter");
  }
  if (p.gamma_a < 0.0 || p.gamma_b < 0.0) {
    fail(Errc::kInvalidArgument,
         std::string(who) + ": dissipation rates must be nonnegative");
  }
}

}  // namespace

double xi_squared(const BosonicParams& p) {
  const double gamma = p.gamma_a - p.gamma_b;
  return p.g * p.g - gamma * gamma / 4.0;
}

Matrix effective_hamiltonian(const BosonicParams& p) {
  require_params(p, "effective_hamiltonian");
  if (xi_squared(p) < 0.0) {
    fail(Errc::kBrokenRegime, "effective_hamiltonian: xi^2 < 0");
  }
  const double gbar = (p.gamma_a + p.gamma_b) / 2.0;
  const double gamma = p.gamma_a - p.gamma_b;
  Matrix h(2, 2);
  h(0, 0) = Complex(p.omega0, -gbar / 2.0 - gamma / 2.0);
  h(0, 1) = p.g;
  h(1, 0) = p.g;
  h(1, 1) = Complex(p.omega0, -gbar / 2.0 + gamma / 2.0);
  return h;
}

double qfi_bosonic_closed(const BosonicParams& p, double theta) {
  require_params(p, "qfi_bosonic_closed");
  const double xi2 = xi_squared(p);
  if (xi2 < 0.0) {
    fail(Errc::kBrokenRegime, "qfi_bosonic_closed: xi^2 < 0");
  }
  const double xi = std::sqrt(xi2);
  const double gamma = p.gamma_a - p.gamma_b;
  const double bracket = -4.0 * p.g * p.g +
                         gamma * gamma * std::cos(2.0 * xi * theta) +
                         2.0 * gamma * xi * std::sin(2.0 * xi * theta);
  if (std::abs(bracket) < 1e-14) {
    fail(Errc::kZeroDenominator, "qfi_bosonic_closed: bracket vanished");
  }
  return 64.0 * p.g * p.g * xi2 * xi2 / (bracket * bracket);
}

}  // namespace nhqfi
