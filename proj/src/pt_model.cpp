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

#include "nhqfi/pt_model.hpp"

#include <cmath>
#include <numbers>

#include "nhqfi/evolution.hpp"
#include "nhqfi/linalg.hpp"
#include "nhqfi/qfi.hpp"

namespace nhqfi {

namespace {

constexpr double kPi = std::numbers::pi;

double discriminant(const PtParams& p) {
  const double rs = p.r * std::sin(p.omega);
  return p.s * p.s - rs * rs;  // nu0 when positive, -nu1 when negative
}

void require_params(const PtParams& p, const char* who) {
  if (!(p.s > 0.0) || !std::isfinite(p.s) || !std::isfinite(p.r) ||
      !std::isfinite(p.omega)) {
    fail(Errc::kInvalidArgument, std::string(who) + ": need finite params, s > 0");
  }
}

void require_regime(const PtParams& p, Regime want, const char* who) {
  const Regime got = classify(p).tag;
  if (got != want) {
    fail(Errc::kRegimeMismatch, std::string(who) + ": params are " +
                                    regime_name(got) + ", need " +
                                    regime_name(want));
  }
}

void require_half_pi(const PtParams& p, const char* who) {
  if (std::abs(p.omega - kPi / 2.0) > 1e-9) {
    fail(Errc::kInvalidArgument, std::string(who) + ": requires omega = pi/2");
  }
}

}  // namespace

const char* regime_name(Regime tag) noexcept {
  switch (tag) {
    case Regime::kUnbroken: return "unbroken";
    case Regime::kExceptionalPoint: return "exceptional-point";
    case Regime::kBroken: return "broken";
  }
  return "unknown";
}

Matrix build(const PtParams& p) {
  require_params(p, "build");
  Matrix h(2, 2);
  h(0, 0) = p.r * std::exp(Complex(0.0, p.omega));
  h(0, 1) = p.s;
  h(1, 0) = p.s;
  h(1, 1) = p.r * std::exp(Complex(0.0, -p.omega));
  return h;
}

PtRegime classify(const PtParams& p, double ep_tol) {
  require_params(p, "classify");
  if (!(ep_tol > 0.0)) {
    fail(Errc::kInvalidArgument, "classify: ep_tol must be positive");
  }
  const double disc = discriminant(p);
  const double band = ep_tol * p.s * p.s;

  PtRegime out;
  out.mu = p.r * std::cos(p.omega);
  if (disc > band) {
    out.tag = Regime::kUnbroken;
    out.nu = disc;
  } else if (disc < -band) {
    out.tag = Regime::kBroken;
    out.nu = -disc;
  } else {
    out.tag = Regime::kExceptionalPoint;
    out.nu = 0.0;
  }
  return out;
}

PtEigensystem eigensystem(const PtParams& p) {
  const PtRegime reg = classify(p);
  if (reg.tag == Regime::kExceptionalPoint) {
    fail(Errc::kEpCoalescence, "eigensystem: eigenvectors coalesce at the EP");
  }

  PtEigensystem out;
  out.state_plus = Vector(2);
  out.state_minus = Vector(2);
  const double root = std::sqrt(reg.nu);

  if (reg.tag == Regime::kUnbroken) {
    out.value_plus = Complex(reg.mu + root, 0.0);
    out.value_minus = Complex(reg.mu - root, 0.0);
    const double alpha = std::asin(p.r * std::sin(p.omega) / p.s);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.state_plus << std::exp(Complex(0.0, alpha / 2.0)) * inv_sqrt2,
        std::exp(Complex(0.0, -alpha / 2.0)) * inv_sqrt2;
    out.state_minus << Complex(0.0, 1.0) *
                           std::exp(Complex(0.0, -alpha / 2.0)) * inv_sqrt2,
        Complex(0.0, -1.0) * std::exp(Complex(0.0, alpha / 2.0)) * inv_sqrt2;
  } else {
    out.value_plus = Complex(reg.mu, root);
    out.value_minus = Complex(reg.mu, -root);
    const double rs = p.r * std::sin(p.omega);
    const double top_plus = rs + root;
    const double top_minus = rs - root;
    const double norm_plus = std::sqrt(top_plus * top_plus + p.s * p.s);
    const double norm_minus = std::sqrt(top_minus * top_minus + p.s * p.s);
    out.state_plus << Complex(0.0, top_plus) / norm_plus, p.s / norm_plus;
    out.state_minus << Complex(0.0, top_minus) / norm_minus, p.s / norm_minus;
  }
  return out;
}

Vector initial_state(const PtParams& p, const InitialStateSpec& spec) {
  StateBasis basis = spec.basis;
  if (basis == StateBasis::kEigenAuto) {
    switch (classify(p).tag) {
      case Regime::kUnbroken: basis = StateBasis::kEigenUnbroken; break;
      case Regime::kBroken: basis = StateBasis::kEigenBroken; break;
      case Regime::kExceptionalPoint: {
        // Eigenbasis coalesced; fall back to the computational |0> probe.
        Vector v = Vector::Zero(2);
        v(0) = 1.0;
        return v;
      }
    }
  }

  if (basis == StateBasis::kExplicit) {
    detail::require_finite(spec.explicit_vector, "initial_state");
    if (spec.explicit_vector.size() < 1) {
      fail(Errc::kInvalidArgument, "initial_state: empty explicit vector");
    }
    const double norm = spec.explicit_vector.norm();
    if (norm < 1e-12) {
      fail(Errc::kInvalidArgument, "initial_state: explicit vector is zero");
    }
    return spec.explicit_vector / norm;
  }

  if (basis == StateBasis::kEigenUnbroken) {
    require_regime(p, Regime::kUnbroken, "initial_state");
  } else {
    require_regime(p, Regime::kBroken, "initial_state");
  }
  const PtEigensystem eig = eigensystem(p);
  const Vector v = eig.state_plus +
                   spec.m * std::exp(Complex(0.0, spec.phi)) * eig.state_minus;
  const double norm = v.norm();  // includes the <v+|v-> cross term
  if (norm < 1e-12) {
    fail(Errc::kInvalidArgument,
         "initial_state: superposition vanishes (coalescing coefficients)");
  }
  return v / norm;
}

double qfi_closed_unbroken(const PtParams& p, double m, double phi,
                           double theta) {
  require_regime(p, Regime::kUnbroken, "qfi_closed_unbroken");
  const double nu0 = discriminant(p);
  const double root = std::sqrt(nu0);
  const double rs = p.r * std::sin(p.omega);
  const double denom = (1.0 + m * m) * p.s +
                       2.0 * m * rs * std::cos(2.0 * root * theta + phi);
  return 16.0 * m * m * nu0 * nu0 / (denom * denom);
}

double qfi_closed_broken(const PtParams& p, double m, double phi,
                         double theta) {
  require_regime(p, Regime::kBroken, "qfi_closed_broken");
  const double nu1 = -discriminant(p);
  const double root = std::sqrt(nu1);
  const double a = std::abs(p.r * std::sin(p.omega));
  const double e = std::exp(2.0 * root * theta);
  const double denom = a * (e * e + m * m) + 2.0 * m * p.s * e * std::cos(phi);
  return 16.0 * m * m * nu1 * nu1 * e * e / (denom * denom);
}

ChannelQfi channel_qfi(const PtParams& p) {
  const PtRegime reg = classify(p);
  ChannelQfi out;
  if (reg.tag == Regime::kExceptionalPoint) {
    out.at_ep = true;
    out.value = 0.0;  // the input-optimized value collapses exactly at the EP
    return out;
  }
  const double b = p.s + std::abs(p.r * std::sin(p.omega));
  out.value = 4.0 * b * b;
  return out;
}

namespace {

double engine_qfi(const PtParams& p, StateBasis basis, double m, double phi,
                  double theta) {
  InitialStateSpec spec;
  spec.basis = basis;
  spec.m = m;
  spec.phi = phi;
  return qfi_expectation(build(p), initial_state(p, spec), theta).qfi;
}

// One golden-section pass over [lo, hi] maximizing fn.
template <typename F>
double golden_max(F&& fn, double lo, double hi, double* best_x) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(b));
       ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = fn(x1);
    }
  }
  *best_x = (f1 > f2) ? x1 : x2;
  return std::max(f1, f2);
}

}  // namespace

ChannelQfiSearch channel_qfi_numeric(const PtParams& p) {
  const PtRegime reg = classify(p);
  if (reg.tag == Regime::kExceptionalPoint) {
    fail(Errc::kEpCoalescence, "channel_qfi_numeric: no eigenbasis at the EP");
  }
  const StateBasis basis = (reg.tag == Regime::kUnbroken)
                               ? StateBasis::kEigenUnbroken
                               : StateBasis::kEigenBroken;
  const double theta_max = 4.0 * kPi / std::sqrt(reg.nu);

  constexpr int kGrid = 64;
  ChannelQfiSearch best;
  for (int im = 0; im < kGrid; ++im) {
    const double m = -3.0 + 6.0 * im / (kGrid - 1);
    if (std::abs(m) < 1e-3) continue;
    for (int ip = 0; ip < kGrid; ++ip) {
      const double phi = 2.0 * kPi * ip / kGrid;
      for (int it = 0; it < kGrid; ++it) {
        const double theta = theta_max * it / (kGrid - 1);
        const double value = engine_qfi(p, basis, m, phi, theta);
        if (value > best.value) best = {value, m, phi, theta};
      }
    }
  }

  // One refinement pass per coordinate, bracketing around the grid cell.
  const double dth = theta_max / (kGrid - 1);
  best.value = golden_max(
      [&](double th) { return engine_qfi(p, basis, best.m, best.phi, th); },
      std::max(0.0, best.theta - dth), best.theta + dth, &best.theta);
  const double dm = 6.0 / (kGrid - 1);
  best.value = golden_max(
      [&](double m) {
        return std::abs(m) < 1e-3
                   ? 0.0
                   : engine_qfi(p, basis, m, best.phi, best.theta);
      },
      best.m - dm, best.m + dm, &best.m);
  const double dphi = 2.0 * kPi / kGrid;
  best.value = golden_max(
      [&](double phi) { return engine_qfi(p, basis, best.m, phi, best.theta); },
      best.phi - dphi, best.phi + dphi, &best.phi);
  return best;
}

double qfi_at_ep(const PtParams& p, const Vector& psi0, double theta) {
  require_regime(p, Regime::kExceptionalPoint, "qfi_at_ep");
  return qfi_expectation(build(p), psi0, theta).qfi;
}

double variance_pq(const PtParams& p, double m, double phi, double theta) {
  require_regime(p, Regime::kUnbroken, "variance_pq");
  require_half_pi(p, "variance_pq");
  if (m == 0.0) fail(Errc::kInvalidArgument, "variance_pq: m must be nonzero");

  const double kappa = p.r / p.s;
  const double nu0 = discriminant(p);
  const double g0 = std::sqrt(nu0) * theta + phi / 2.0;
  const double beta = std::atan2(kappa, -std::sqrt(1.0 - kappa * kappa));
  const double m2 = 1.0 + m * m;

  const double bracket_d = m2 * std::cos(2.0 * g0) + 2.0 * m * kappa;
  const double q = 16.0 * m * m * nu0 * (1.0 - kappa * kappa) * bracket_d *
                   bracket_d;
  if (std::abs(q) < 1e-300 || bracket_d == 0.0) {
    fail(Errc::kZeroSignal, "variance_pq: q = 0, variance diverges");
  }
  const double pnum = (m2 + 2.0 * m * std::sin(2.0 * g0 + beta)) *
                      (m2 - 2.0 * m * std::sin(2.0 * g0 - beta)) *
                      (m2 + 2.0 * m * kappa * std::cos(2.0 * g0)) *
                      (m2 + 2.0 * m * kappa * std::cos(2.0 * g0));
  return pnum / q;
}

double sensor_expectation(const PtParams& p, double theta) {
  require_regime(p, Regime::kUnbroken, "sensor_expectation");
  const double nu0 = discriminant(p);
  const double root = std::sqrt(nu0);
  const double sin_alpha = p.r * std::sin(p.omega) / p.s;
  const double alpha = std::asin(sin_alpha);
  return (1.0 - std::sin(2.0 * theta * root - alpha)) /
         (2.0 + 2.0 * sin_alpha * std::cos(2.0 * theta * root));
}

HermitianRatios hermitian_ratios(const PtParams& p, double m, double phi,
                                 double theta) {
  require_regime(p, Regime::kUnbroken, "hermitian_ratios");
  require_half_pi(p, "hermitian_ratios");
  const double kappa = p.r / p.s;
  if (!(kappa > 0.0 && kappa < 1.0)) {
    fail(Errc::kInvalidArgument, "hermitian_ratios: kappa must be in (0,1)");
  }
  const double f = qfi_closed_unbroken(p, m, phi, theta);
  const double nu0 = discriminant(p);
  HermitianRatios out;
  out.s0 = f / (4.0 * nu0);        // baseline diag(+-sqrt(s^2-r^2)), F = 4 nu0
  out.s1 = f / (4.0 * p.r * p.r);  // baseline [[s,-ir],[ir,s]], F = 4 r^2
  return out;
}

}  // namespace nhqfi
