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

#include "nhqfi/linalg.hpp"

#include <cmath>

namespace nhqfi {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidArgument: return "INVALID_ARGUMENT";
    case Errc::kRegimeMismatch: return "REGIME_MISMATCH";
    case Errc::kCollapse: return "K_COLLAPSE";
    case Errc::kNonreal: return "NONREAL";
    case Errc::kSingularOutcome: return "SINGULAR_OUTCOME";
    case Errc::kZeroSignal: return "ZERO_SIGNAL";
    case Errc::kDegenerate: return "DEGENERATE";
    case Errc::kEpCoalescence: return "EP_COALESCENCE";
    case Errc::kNonHermitianMeasurement: return "NON_HERMITIAN_MEASUREMENT";
    case Errc::kBrokenRegime: return "BROKEN_REGIME";
    case Errc::kZeroDenominator: return "ZERO_DENOMINATOR";
    case Errc::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

namespace detail {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    fail(Errc::kInvalidArgument, std::string(who) + ": matrix must be square");
  }
  if (m.rows() > kMaxDim) {
    fail(Errc::kInvalidArgument, std::string(who) + ": dim capped at 16");
  }
}

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    fail(Errc::kInvalidArgument, std::string(who) + ": non-finite entries");
  }
}

void require_finite(const Vector& v, const char* who) {
  if (!v.allFinite()) {
    fail(Errc::kInvalidArgument, std::string(who) + ": non-finite entries");
  }
}

}  // namespace detail

Matrix adjoint(const Matrix& m) { return m.adjoint(); }

Complex inner(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    fail(Errc::kInvalidArgument, "inner: dimension mismatch");
  }
  return u.dot(v);  // Eigen's dot conjugates the left factor
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

namespace {

// Closed form over the traceless part. B = H - mu I satisfies B^2 = nu I
// with nu = ((H00-H11)/2)^2 + H01 H10, so
//   exp(-iHt) = e^{-i mu t} [cos(sqrt(nu) t) I - i sinc(sqrt(nu) t) t B].
Matrix exp_2x2(const Matrix& h, double t) {
  const Complex mu = (h(0, 0) + h(1, 1)) / 2.0;
  const Complex delta = (h(0, 0) - h(1, 1)) / 2.0;
  const Complex nu = delta * delta + h(0, 1) * h(1, 0);

  const Matrix b = h - mu * Matrix::Identity(2, 2);
  const Complex phase = std::exp(Complex(0.0, -1.0) * mu * t);

  const double scale = max_abs(h);
  if (std::abs(nu) < 1e-12 * std::max(1.0, scale * scale)) {
    // Defective limit: eigenvalues coalesced, B is nilpotent.
    return phase * (Matrix::Identity(2, 2) - Complex(0.0, 1.0) * t * b);
  }
  const Complex root = std::sqrt(nu);  // principal branch; cos and sinc are
                                       // even in root, so the cut is moot
  const Complex c = std::cos(root * t);
  const Complex s = std::sin(root * t) / root;
  return phase * (c * Matrix::Identity(2, 2) - Complex(0.0, 1.0) * s * b);
}

}  // namespace

Matrix mat_exp_series(const Matrix& h, double t, int terms) {
  detail::require_square(h, "mat_exp_series");
  const Eigen::Index d = h.rows();
  Matrix a = Complex(0.0, -1.0) * t * h;

  // Induced infinity norm keeps the scaled series convergent at any dim.
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 1.0) {
    squarings = static_cast<int>(std::ceil(std::log2(norm)));
    a /= std::pow(2.0, squarings);
  }

  Matrix result = Matrix::Identity(d, d);
  Matrix term = Matrix::Identity(d, d);
  for (int k = 1; k <= terms; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Matrix mat_exp(const Matrix& h, double t) {
  detail::require_square(h, "mat_exp");
  detail::require_finite(h, "mat_exp");
  if (!std::isfinite(t)) fail(Errc::kInvalidArgument, "mat_exp: t not finite");

  if (h.rows() == 1) {
    Matrix r(1, 1);
    r(0, 0) = std::exp(Complex(0.0, -1.0) * h(0, 0) * t);
    return r;
  }
  if (h.rows() == 2) return exp_2x2(h, t);
  return mat_exp_series(h, t);
}

}  // namespace nhqfi
