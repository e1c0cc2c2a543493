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

#include "nhqfi/evolution.hpp"

#include <cmath>

#include "nhqfi/linalg.hpp"

namespace nhqfi {

EvolvedState evolve(const Matrix& h, const Vector& psi0, double theta) {
  detail::require_square(h, "evolve");
  detail::require_finite(h, "evolve");
  detail::require_finite(psi0, "evolve");
  if (psi0.size() != h.rows()) {
    fail(Errc::kInvalidArgument, "evolve: state/generator dimension mismatch");
  }
  if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10) {
    fail(Errc::kInvalidArgument, "evolve: initial state must be normalized");
  }

  EvolvedState out;
  out.theta = theta;
  out.raw = mat_exp(h, theta) * psi0;

  const Complex k = inner(out.raw, out.raw);
  // <v|v> is real by construction; anything beyond roundoff is a bug.
  if (std::abs(k.imag()) > 1e-12 * std::max(1.0, std::abs(k.real()))) {
    fail(Errc::kInternal, "evolve: norm acquired an imaginary part");
  }
  out.k_theta = k.real();
  if (!(out.k_theta >= 1e-300)) {
    fail(Errc::kCollapse, "evolve: state annihilated (K_theta < 1e-300)");
  }
  out.normalized = out.raw / std::sqrt(out.k_theta);
  return out;
}

double dk_dtheta(const Matrix& h, const EvolvedState& state) {
  detail::require_square(h, "dk_dtheta");
  const Vector& phi = state.normalized;
  if (phi.size() != h.rows()) {
    fail(Errc::kInvalidArgument, "dk_dtheta: dimension mismatch");
  }
  const Complex e_hd = inner(phi, adjoint(h) * phi);
  const Complex e_h = inner(phi, h * phi);
  const Complex q = Complex(0.0, 1.0) * (e_hd - e_h);

  const double scale = std::max(1.0, std::abs(q.real()));
  if (std::abs(q.imag()) > 1e-8 * scale) {
    fail(Errc::kNonreal, "dk_dtheta: imaginary residue exceeds 1e-8");
  }
  return q.real();
}

double effective_k(const std::function<Complex(double)>& f_of_theta,
                   const Matrix& h, const Vector& psi0, double theta) {
  if (!f_of_theta) {
    fail(Errc::kInvalidArgument, "effective_k: missing rescaling function");
  }
  const Complex f = f_of_theta(theta);
  if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
    fail(Errc::kInvalidArgument, "effective_k: f(theta) not finite");
  }
  return std::norm(f) * evolve(h, psi0, theta).k_theta;
}

}  // namespace nhqfi
