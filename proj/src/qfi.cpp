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

#include "nhqfi/qfi.hpp"

#include <cmath>

#include "nhqfi/linalg.hpp"

namespace nhqfi {

namespace {

constexpr double kFdStep = 1e-6;  // central-difference step for all oracles

double clamp_qfi(double raw) {
  if (raw >= 0.0) return raw;
  if (raw >= -1e-10) return 0.0;  // roundoff-sized negative variance
  fail(Errc::kInternal, "qfi: variance below -1e-10");
}

}  // namespace

QfiResult qfi_expectation(const Matrix& h, const Vector& psi0, double theta) {
  const EvolvedState st = evolve(h, psi0, theta);
  const Vector& phi = st.normalized;
  const Vector hphi = h * phi;
  const double e_hdh = hphi.squaredNorm();        // <H^dag H>
  const Complex e_h = inner(phi, hphi);           // <H^dag><H> = |<H>|^2
  const double raw = 4.0 * (e_hdh - std::norm(e_h));

  QfiResult out;
  out.theta = theta;
  out.k_theta = st.k_theta;
  out.qfi = clamp_qfi(raw);
  out.i_theta = out.k_theta * out.qfi;
  return out;
}

double qfi_derivative(const Matrix& h, const Vector& psi0, double theta) {
  const Vector phi = evolve(h, psi0, theta).normalized;
  const Vector plus = evolve(h, psi0, theta + kFdStep).normalized;
  const Vector minus = evolve(h, psi0, theta - kFdStep).normalized;
  const Vector dphi = (plus - minus) / (2.0 * kFdStep);
  const double raw =
      4.0 * (dphi.squaredNorm() - std::norm(inner(dphi, phi)));
  return clamp_qfi(raw);
}

Matrix sld(const Matrix& h, const Vector& psi0, double theta) {
  const Vector phi = evolve(h, psi0, theta).normalized;
  const Eigen::Index d = phi.size();
  const Complex e_h = inner(phi, h * phi);
  const Matrix dh = h - e_h * Matrix::Identity(d, d);
  const Matrix proj = phi * phi.adjoint();
  return Complex(0.0, -2.0) * (dh * proj - proj * dh.adjoint());
}

Matrix sld_alternative(const Matrix& h, const Vector& psi0, double theta,
                       const Matrix& m, double c) {
  detail::require_square(m, "sld_alternative");
  if (m.rows() != h.rows()) {
    fail(Errc::kInvalidArgument, "sld_alternative: dimension mismatch");
  }
  const Vector phi = evolve(h, psi0, theta).normalized;
  const Complex e_m = inner(phi, m * phi);
  const Vector dm_phi = m * phi - e_m * phi;
  return sld(h, psi0, theta) + c * (dm_phi * dm_phi.adjoint());
}

Povm::Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    fail(Errc::kInvalidArgument, "povm: no elements");
  }
  const Eigen::Index d = elements_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : elements_) {
    detail::require_square(e, "povm");
    if (e.rows() != d) fail(Errc::kInvalidArgument, "povm: mixed dimensions");
    if (max_abs(Matrix(e - e.adjoint())) > 1e-12) {
      fail(Errc::kInvalidArgument, "povm: element not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
      fail(Errc::kInvalidArgument, "povm: element not positive semidefinite");
    }
    sum += e;
  }
  if (max_abs(Matrix(sum - Matrix::Identity(d, d))) > 1e-10) {
    fail(Errc::kInvalidArgument, "povm: elements do not sum to identity");
  }
}

Povm eigenprojector_povm(const Matrix& hermitian) {
  detail::require_square(hermitian, "eigenprojector_povm");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  std::vector<Matrix> elems;
  elems.reserve(hermitian.rows());
  for (Eigen::Index i = 0; i < hermitian.rows(); ++i) {
    const Vector v = es.eigenvectors().col(i);
    elems.push_back(v * v.adjoint());
  }
  return Povm(std::move(elems));
}

double classical_fisher(const Matrix& h, const Vector& psi0, double theta,
                        const Povm& povm) {
  if (povm.dim() != h.rows()) {
    fail(Errc::kInvalidArgument, "classical_fisher: POVM dimension mismatch");
  }
  const auto probs = [&](double t) {
    const Vector phi = evolve(h, psi0, t).normalized;
    std::vector<double> p;
    p.reserve(povm.elements().size());
    for (const Matrix& e : povm.elements()) {
      p.push_back(inner(phi, e * phi).real());
    }
    return p;
  };

  const std::vector<double> p = probs(theta);
  double total = 0.0;
  for (double v : p) total += v;
  if (std::abs(total - 1.0) > 1e-10) {
    fail(Errc::kInternal, "classical_fisher: probabilities do not sum to 1");
  }

  const std::vector<double> pp = probs(theta + kFdStep);
  const std::vector<double> pm = probs(theta - kFdStep);

  double fisher = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double dp = (pp[x] - pm[x]) / (2.0 * kFdStep);
    if (p[x] < 1e-12) {
      if (std::abs(dp) < 1e-9) continue;  // dead outcome, no information
      fail(Errc::kSingularOutcome,
           "classical_fisher: vanishing outcome with nonvanishing derivative");
    }
    fisher += dp * dp / p[x];
  }
  return fisher;
}

}  // namespace nhqfi
