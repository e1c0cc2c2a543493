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

#include "nhqfi/validate.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "nhqfi/bosonic.hpp"
#include "nhqfi/evolution.hpp"
#include "nhqfi/linalg.hpp"
#include "nhqfi/measurement.hpp"
#include "nhqfi/pt_model.hpp"
#include "nhqfi/qfi.hpp"

namespace nhqfi {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix random_matrix(Rng& rng, Eigen::Index d, double amp) {
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      m(i, j) = Complex(uniform(rng, -amp, amp), uniform(rng, -amp, amp));
    }
  }
  return m;
}

Vector random_state(Rng& rng, Eigen::Index d) {
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    v(i) = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  }
  return v / v.norm();
}

Vector eigen_state(const PtParams& p, double m, double phi) {
  InitialStateSpec spec;
  spec.basis = StateBasis::kEigenAuto;
  spec.m = m;
  spec.phi = phi;
  return initial_state(p, spec);
}

struct Battery {
  ValidationReport report;
  bool inject_fault = false;

  void add(const std::string& name, double residual, double tol,
           const std::string& note = "") {
    CheckResult c;
    c.name = name;
    c.max_residual = residual;
    c.tolerance = tol;
    c.passed = residual <= tol;
    c.note = note;
    report.checks.push_back(std::move(c));
  }
};

void check_routes(Battery& b) {
  Rng rng(0x5eed0001);
  double d_deriv = 0.0, d_trace = 0.0, d_sldres = 0.0, d_cfish = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix h = random_matrix(rng, 2, 2.0);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 3.0);

    const double f_exp = qfi_expectation(h, psi0, theta).qfi;
    d_deriv = std::max(d_deriv,
                       std::abs(f_exp - qfi_derivative(h, psi0, theta)));

    const Matrix l = sld(h, psi0, theta);
    const Vector phi = evolve(h, psi0, theta).normalized;
    const double f_trace = inner(phi, l * (l * phi)).real();
    d_trace = std::max(d_trace, std::abs(f_exp - f_trace));

    // Defining-equation residual with d_theta rho by central differences.
    const double hstep = 1e-6;
    const Vector pp = evolve(h, psi0, theta + hstep).normalized;
    const Vector pm = evolve(h, psi0, theta - hstep).normalized;
    const Matrix drho =
        (pp * pp.adjoint() - pm * pm.adjoint()) / (2.0 * hstep);
    const Matrix rho = phi * phi.adjoint();
    d_sldres = std::max(
        d_sldres, max_abs(Matrix(0.5 * (l * rho + rho * l) - drho)));

    d_cfish = std::max(
        d_cfish, std::abs(f_exp - classical_fisher(h, psi0, theta,
                                                   eigenprojector_povm(l))));
  }
  b.add("route agreement: variance form vs derivative form", d_deriv, 1e-5);
  b.add("route agreement: variance form vs Tr[rho L^2]", d_trace, 1e-8);
  b.add("SLD defining-equation residual", d_sldres, 1e-6);
  b.add("classical Fisher in SLD eigenbasis vs QFI", d_cfish, 1e-5);
}

void check_closed_forms(Battery& b) {
  Rng rng(0x5eed0002);
  double worst_u = 0.0, worst_br = 0.0;
  for (int i = 0; i < 50; ++i) {
    PtParams p;
    p.s = uniform(rng, 0.3, 1.5);
    p.omega = uniform(rng, 0.3, kPi - 0.3);
    const double u = uniform(rng, 0.05, 0.85);
    p.r = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * u * p.s /
          std::sin(p.omega);
    double m = uniform(rng, 0.1, 1.6) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1);
    const double phi = uniform(rng, 0.0, 2.0 * kPi);
    const double theta = uniform(rng, 0.0, 3.0);

    double closed = qfi_closed_unbroken(p, m, phi, theta);
    if (b.inject_fault) closed *= 1.0 + 1e-3;
    const double engine =
        qfi_expectation(build(p), eigen_state(p, m, phi), theta).qfi;
    worst_u = std::max(worst_u, std::abs(closed - engine));
  }
  for (int i = 0; i < 50; ++i) {
    PtParams p;
    p.s = uniform(rng, 0.3, 1.5);
    p.omega = uniform(rng, 0.3, kPi - 0.3);
    const double u = uniform(rng, 1.15, 3.0);
    p.r = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * u * p.s /
          std::sin(p.omega);
    double m = uniform(rng, 0.1, 1.6) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1);
    const double phi = uniform(rng, 0.0, 2.0 * kPi);
    const double theta = uniform(rng, 0.0, 3.0);

    const double closed = qfi_closed_broken(p, m, phi, theta);
    const double engine =
        qfi_expectation(build(p), eigen_state(p, m, phi), theta).qfi;
    worst_br = std::max(worst_br, std::abs(closed - engine));
  }
  b.add("PT closed form vs engine (unbroken, 50 random)", worst_u, 1e-8,
        b.inject_fault ? "fault injected" : "");
  b.add("PT closed form vs engine (broken, 50 random)", worst_br, 1e-8);
}

void check_bosonic(Battery& b) {
  Rng rng(0x5eed0003);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    BosonicParams p;
    p.omega0 = uniform(rng, 0.0, 2.0);
    p.g = uniform(rng, 0.5, 2.0);
    do {
      p.gamma_a = uniform(rng, 0.0, 1.5);
      p.gamma_b = uniform(rng, 0.0, 1.5);
    } while (xi_squared(p) < 0.1 * p.g * p.g);
    const double theta = uniform(rng, 0.0, 3.0);

    const Matrix h = effective_hamiltonian(p);
    Vector psi0 = Vector::Zero(2);
    psi0(0) = 1.0;
    const double engine = qfi_expectation(h, psi0, theta).qfi;
    worst = std::max(worst, std::abs(qfi_bosonic_closed(p, theta) - engine));
    // golden value at theta = 0: 4 g^2
    worst = std::max(
        worst, std::abs(qfi_bosonic_closed(p, 0.0) - 4.0 * p.g * p.g));
  }
  b.add("bosonic closed form vs engine, incl. golden 4g^2 at theta=0", worst,
        1e-8);
}

void check_channel(Battery& b) {
  const PtParams unbroken{0.25, 1.0, kPi / 2.0};
  const PtParams broken{1.0, 0.25, kPi / 2.0};
  const double e1 = std::abs(channel_qfi(unbroken).value - 6.25);
  const double e2 = std::abs(channel_qfi(broken).value - 6.25);
  b.add("channel QFI golden value 6.25 (formula, both regimes)",
        std::max(e1, e2), 1e-12);

  const double o1 = std::abs(channel_qfi_numeric(unbroken).value - 6.25);
  const double o2 = std::abs(channel_qfi_numeric(broken).value - 6.25);
  b.add("channel QFI golden value 6.25 (numeric optimizer)", std::max(o1, o2),
        1e-4);
}

void check_ep(Battery& b) {
  const PtParams ep{2.0, 2.0, kPi / 2.0};
  Vector zero_state = Vector::Zero(2);
  zero_state(0) = 1.0;
  b.add("EP golden value 16 (psi0 = |0>, theta = 0)",
        std::abs(qfi_at_ep(ep, zero_state, 0.0) - 16.0), 1e-9);
}

void check_ratios(Battery& b) {
  double max_s0 = 0.0, max_s1 = 0.0;
  const PtParams p06{0.6, 1.0, kPi / 2.0};
  const PtParams p02{0.2, 1.0, kPi / 2.0};
  for (int i = 0; i <= 40000; ++i) {
    const double theta = 14.0 * i / 40000.0;
    max_s0 = std::max(max_s0, hermitian_ratios(p06, 1.0, 0.0, theta).s0);
    max_s1 = std::max(max_s1, hermitian_ratios(p02, 1.0, 0.0, theta).s1);
  }
  // Analytic argmax: cos(2 sqrt(nu0) theta) = -1.
  const double t06 = kPi / (2.0 * std::sqrt(1.0 - 0.36));
  const double t02 = kPi / (2.0 * std::sqrt(1.0 - 0.04));
  max_s0 = std::max(max_s0, hermitian_ratios(p06, 1.0, 0.0, t06).s0);
  max_s1 = std::max(max_s1, hermitian_ratios(p02, 1.0, 0.0, t02).s1);
  b.add("ratio golden value 4 (S0 max, kappa = 0.6)", std::abs(max_s0 - 4.0),
        1e-6);
  b.add("ratio golden value 36 (S1 max, kappa = 0.2)", std::abs(max_s1 - 36.0),
        1e-4);
}

void check_crb(Battery& b) {
  const PtParams p{0.25, 0.5, kPi / 2.0};
  const Matrix h = build(p);
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;

  double worst_sat = 0.0;
  double best_excess = 0.0;
  const Vector opt = eigen_state(p, 1.0, 0.0);
  const Vector off = eigen_state(p, 1.2, 0.0);
  for (int i = 0; i < 100; ++i) {
    const double theta = 0.02 + (6.0 - 0.02) * i / 99.0;
    try {
      const double prod = error_propagation(h, a, opt, theta, 1) *
                          qfi_expectation(h, opt, theta).qfi;
      worst_sat = std::max(worst_sat, std::abs(prod - 1.0));
    } catch (const Error& e) {
      if (e.code() != Errc::kZeroSignal) throw;
    }
    try {
      const double prod = error_propagation(h, a, off, theta, 1) *
                          qfi_expectation(h, off, theta).qfi;
      best_excess = std::max(best_excess, prod - 1.0);
    } catch (const Error& e) {
      if (e.code() != Errc::kZeroSignal) throw;
    }
  }
  b.add("CRB saturation with |0><0| at m=1 (|var*F - 1|)", worst_sat, 1e-6);
  b.add("CRB decline at m=1.2 (excess above bound)",
        best_excess > 1e-3 ? 0.0 : 1.0, 0.5,
        "max excess " + std::to_string(best_excess));
}

void battery_condition(Battery& b) {
  const PtParams p{0.25, 0.5, kPi / 2.0};
  const Matrix h = build(p);
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  const double kappa = p.r / p.s;
  const double nu0 = p.s * p.s - p.r * p.r;

  const Vector opt = eigen_state(p, 1.0, 0.0);
  double worst_resid = 0.0;
  int evaluated = 0;
  for (int i = 0; i < 200; ++i) {
    const double theta = 0.02 + (5.0 - 0.02) * i / 199.0;
    if (std::abs(std::cos(2.0 * std::sqrt(nu0) * theta) + kappa) < 0.05) {
      continue;  // ZERO_SIGNAL neighborhood, condition vacuous there
    }
    const auto [f, g] = deviation_vectors(h, a, opt, theta);
    const ConditionReport rep = check_condition(f, g, 1e-8);
    worst_resid = std::max(worst_resid, rep.residual);
    worst_resid = std::max(
        worst_resid, std::abs(rep.c_estimate.imag()) /
                         std::max(1e-300, std::abs(rep.c_estimate)));
    ++evaluated;
  }
  b.add("optimal measurement condition holds at m=1 (residual, Im C)",
        evaluated > 100 ? worst_resid : 1.0, 1e-8);

  const Vector off = eigen_state(p, 1.2, 0.0);
  int violated = 0, total = 0;
  for (int i = 0; i < 200; ++i) {
    const double theta = 0.02 + (5.0 - 0.02) * i / 199.0;
    if (std::abs(std::cos(2.0 * std::sqrt(nu0) * theta) + kappa) < 0.05) {
      continue;
    }
    const auto [f, g] = deviation_vectors(h, a, off, theta);
    if (!check_condition(f, g, 1e-8).satisfied) ++violated;
    ++total;
  }
  const double frac = total > 0 ? static_cast<double>(violated) / total : 0.0;
  b.add("condition violated at m=1.2 on >= 90% of grid", frac >= 0.9 ? 0.0 : 1.0,
        0.5, "violated fraction " + std::to_string(frac));
}

void check_hermitian(Battery& b) {
  Rng rng(0x5eed0004);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Matrix raw = random_matrix(rng, 2, 2.0);
    const Matrix h = 0.5 * (raw + raw.adjoint());
    const Vector psi0 = random_state(rng, 2);

    const Vector hpsi = h * psi0;
    const double var0 = hpsi.squaredNorm() - std::norm(inner(psi0, hpsi));

    double fmin = 1e300, fmax = -1e300;
    for (int t = 0; t <= 10; ++t) {
      const double theta = 0.3 * t;
      const QfiResult r = qfi_expectation(h, psi0, theta);
      worst = std::max(worst, std::abs(r.k_theta - 1.0) * 1e2);  // vs 1e-10
      fmin = std::min(fmin, r.qfi);
      fmax = std::max(fmax, r.qfi);
    }
    worst = std::max(worst, fmax - fmin);
    worst = std::max(worst, std::abs(qfi_expectation(h, psi0, 0.7).qfi -
                                     4.0 * var0));
  }
  b.add("Hermitian reduction: K=1, theta-constant QFI = 4 Var (50 random)",
        worst, 1e-8);
}

}  // namespace

ValidationReport validate_suite(const ValidateOptions& options) {
  Battery b;
  b.inject_fault = options.inject_fault;

  check_routes(b);
  check_closed_forms(b);
  check_bosonic(b);
  check_channel(b);
  check_ep(b);
  check_ratios(b);
  check_crb(b);
  battery_condition(b);
  check_hermitian(b);

  b.report.all_passed = true;
  for (const CheckResult& c : b.report.checks) {
    if (!c.passed) b.report.all_passed = false;
  }
  return b.report;
}

void print_report(const ValidationReport& report, std::ostream& os) {
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": max residual "
       << c.max_residual << " (tol " << c.tolerance << ")";
    if (!c.note.empty()) os << " [" << c.note << "]";
    os << "\n";
    if (c.passed) ++passed;
  }
  os << (report.all_passed ? "OK" : "FAILED") << ": " << passed << "/"
     << report.checks.size() << " checks passed\n";
}

}  // namespace nhqfi
