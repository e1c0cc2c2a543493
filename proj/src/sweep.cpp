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

#include "nhqfi/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "nhqfi/evolution.hpp"
#include "nhqfi/linalg.hpp"
#include "nhqfi/measurement.hpp"
#include "nhqfi/qfi.hpp"

namespace nhqfi {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* model_name(Model m) {
  switch (m) {
    case Model::kPt: return "pt";
    case Model::kBosonic: return "bosonic";
    case Model::kCustomMatrix: return "custom-matrix";
  }
  return "unknown";
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kQfi: return "qfi";
    case Quantity::kITheta: return "i_theta";
    case Quantity::kKTheta: return "k_theta";
    case Quantity::kChannelQfi: return "channel_qfi";
    case Quantity::kVariance: return "variance";
    case Quantity::kCrbGap: return "crb_gap";
    case Quantity::kSensor: return "sensor";
    case Quantity::kRatios: return "ratios";
    case Quantity::kConditionResidual: return "condition_residual";
  }
  return "unknown";
}

const char* basis_name(StateBasis b) {
  switch (b) {
    case StateBasis::kEigenAuto: return "eigen";
    case StateBasis::kEigenUnbroken: return "eigen-unbroken";
    case StateBasis::kEigenBroken: return "eigen-broken";
    case StateBasis::kExplicit: return "explicit";
  }
  return "unknown";
}

Model model_from(const std::string& s) {
  if (s == "pt") return Model::kPt;
  if (s == "bosonic") return Model::kBosonic;
  if (s == "custom-matrix") return Model::kCustomMatrix;
  fail(Errc::kInvalidArgument, "model: unknown value '" + s + "'");
}

Quantity quantity_from(const std::string& s) {
  for (Quantity q :
       {Quantity::kQfi, Quantity::kITheta, Quantity::kKTheta,
        Quantity::kChannelQfi, Quantity::kVariance, Quantity::kCrbGap,
        Quantity::kSensor, Quantity::kRatios, Quantity::kConditionResidual}) {
    if (s == quantity_name(q)) return q;
  }
  fail(Errc::kInvalidArgument, "quantity: unknown value '" + s + "'");
}

StateBasis basis_from(const std::string& s) {
  for (StateBasis b : {StateBasis::kEigenAuto, StateBasis::kEigenUnbroken,
                       StateBasis::kEigenBroken, StateBasis::kExplicit}) {
    if (s == basis_name(b)) return b;
  }
  fail(Errc::kInvalidArgument, "initial_state.basis: unknown value '" + s + "'");
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.empty()) {
    fail(Errc::kInvalidArgument, std::string(field) + ": expected a 2-D array");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(Errc::kInvalidArgument, std::string(field) + ": ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& cell = row.at(k);
      if (cell.is_number()) {
        m(i, k) = Complex(cell.get<double>(), 0.0);
      } else {
        m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
      }
    }
  }
  return m;
}

Vector vector_from_json(const nlohmann::json& j, const char* field) {
  const Matrix m = matrix_from_json(j, field);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  fail(Errc::kInvalidArgument, std::string(field) + ": expected a vector");
}

struct Columns {
  std::vector<std::string> names;  // value columns only
};

Columns value_columns(Quantity q) {
  switch (q) {
    case Quantity::kQfi: return {{"qfi"}};
    case Quantity::kITheta: return {{"i_theta"}};
    case Quantity::kKTheta: return {{"k_theta"}};
    case Quantity::kChannelQfi: return {{"channel_qfi"}};
    case Quantity::kVariance: return {{"variance", "inv_qfi"}};
    case Quantity::kCrbGap: return {{"crb_gap"}};
    case Quantity::kSensor: return {{"sensor"}};
    case Quantity::kRatios: return {{"s0", "s1"}};
    case Quantity::kConditionResidual: return {{"residual", "c_re", "c_im"}};
  }
  return {};
}

bool is_gap_code(Errc code) {
  switch (code) {
    case Errc::kCollapse:
    case Errc::kNonreal:
    case Errc::kSingularOutcome:
    case Errc::kZeroSignal:
    case Errc::kDegenerate:
    case Errc::kEpCoalescence:
    case Errc::kRegimeMismatch:
    case Errc::kBrokenRegime:
    case Errc::kZeroDenominator:
      return true;
    default:
      return false;
  }
}

// Spec with the grid variable substituted for one evaluation point.
struct PointSpec {
  const SweepSpec* base = nullptr;
  PtParams pt;
  BosonicParams bosonic;
  InitialStateSpec state;
  double theta = 0.0;
};

PointSpec at_point(const SweepSpec& spec, double v) {
  PointSpec p;
  p.base = &spec;
  p.pt = spec.pt;
  p.bosonic = spec.bosonic;
  p.state = spec.initial_state;
  p.theta = spec.theta;

  const std::string& var = spec.grid.variable;
  if (var == "theta") p.theta = v;
  else if (var == "s") p.pt.s = v;
  else if (var == "r") p.pt.r = v;
  else if (var == "omega") p.pt.omega = v;
  else if (var == "m") p.state.m = v;
  else if (var == "phi") p.state.phi = v;
  else if (var == "g") p.bosonic.g = v;
  else if (var == "gamma_a") p.bosonic.gamma_a = v;
  else if (var == "gamma_b") p.bosonic.gamma_b = v;
  else if (var == "omega0") p.bosonic.omega0 = v;
  else fail(Errc::kInvalidArgument, "grid.variable: unknown name '" + var + "'");
  return p;
}

// Generator and initial state for the point, whatever the model.
void resolve_system(const PointSpec& p, Matrix* h, Vector* psi0) {
  switch (p.base->model) {
    case Model::kPt:
      *h = build(p.pt);
      *psi0 = initial_state(p.pt, p.state);
      return;
    case Model::kBosonic: {
      *h = effective_hamiltonian(p.bosonic);
      if (p.state.basis == StateBasis::kExplicit) {
        *psi0 = p.state.explicit_vector / p.state.explicit_vector.norm();
      } else {
        *psi0 = Vector::Zero(2);
        (*psi0)(0) = 1.0;  // |0,1>, the lossy-mode single excitation
      }
      return;
    }
    case Model::kCustomMatrix: {
      *h = *p.base->custom_matrix;
      Vector v = p.state.explicit_vector;
      *psi0 = v / v.norm();
      return;
    }
  }
}

Matrix default_measurement(Eigen::Index d) {
  Matrix a = Matrix::Zero(d, d);
  a(0, 0) = 1.0;
  return a;
}

SweepRow evaluate_point(const SweepSpec& spec, double v) {
  SweepRow row;
  row.grid = v;
  row.status = "ok";
  const PointSpec p = at_point(spec, v);
  try {
    switch (spec.quantity) {
      case Quantity::kQfi:
      case Quantity::kITheta:
      case Quantity::kKTheta: {
        Matrix h;
        Vector psi0;
        resolve_system(p, &h, &psi0);
        const QfiResult r = qfi_expectation(h, psi0, p.theta);
        if (spec.quantity == Quantity::kQfi) row.values = {r.qfi};
        if (spec.quantity == Quantity::kITheta) row.values = {r.i_theta};
        if (spec.quantity == Quantity::kKTheta) row.values = {r.k_theta};
        if (spec.model == Model::kPt &&
            classify(p.pt).tag == Regime::kExceptionalPoint) {
          row.status = "ep";
        }
        break;
      }
      case Quantity::kChannelQfi: {
        const ChannelQfi c = channel_qfi(p.pt);
        row.values = {c.value};
        if (c.at_ep) row.status = "ep";
        break;
      }
      case Quantity::kVariance: {
        Matrix h;
        Vector psi0;
        resolve_system(p, &h, &psi0);
        const Matrix a = spec.measurement.value_or(default_measurement(h.rows()));
        const double var = error_propagation(h, a, psi0, p.theta, 1);
        const double qfi = qfi_expectation(h, psi0, p.theta).qfi;
        if (qfi <= 0.0) {
          fail(Errc::kZeroSignal, "variance: QFI vanishes, bound diverges");
        }
        row.values = {var, 1.0 / qfi};
        break;
      }
      case Quantity::kCrbGap: {
        Matrix h;
        Vector psi0;
        resolve_system(p, &h, &psi0);
        const Matrix a = spec.measurement.value_or(default_measurement(h.rows()));
        row.values = {crb_gap(h, a, psi0, p.theta)};
        break;
      }
      case Quantity::kSensor:
        row.values = {sensor_expectation(p.pt, p.theta)};
        break;
      case Quantity::kRatios: {
        const HermitianRatios r =
            hermitian_ratios(p.pt, p.state.m, p.state.phi, p.theta);
        row.values = {r.s0, r.s1};
        break;
      }
      case Quantity::kConditionResidual: {
        Matrix h;
        Vector psi0;
        resolve_system(p, &h, &psi0);
        const Matrix a = spec.measurement.value_or(default_measurement(h.rows()));
        const auto [f, g] = deviation_vectors(h, a, psi0, p.theta);
        const ConditionReport rep = check_condition(f, g, spec.tol);
        row.values = {rep.residual, rep.c_estimate.real(),
                      rep.c_estimate.imag()};
        break;
      }
    }
  } catch (const Error& e) {
    if (!is_gap_code(e.code())) throw;
    row.values.clear();
    row.status = errc_name(e.code());
  }
  return row;
}

void validate_spec(const SweepSpec& spec) {
  const GridSpec& g = spec.grid;
  if (g.steps < 2) {
    fail(Errc::kInvalidArgument, "grid.steps: must be at least 2");
  }
  if (!std::isfinite(g.min) || !std::isfinite(g.max)) {
    fail(Errc::kInvalidArgument, "grid.min/max: bounds must be finite");
  }
  if (!(g.min < g.max)) {
    fail(Errc::kInvalidArgument, "grid.min/max: need min < max (degenerate grid)");
  }
  at_point(spec, g.min);  // rejects unknown variable names early

  const bool pt_only = spec.quantity == Quantity::kChannelQfi ||
                       spec.quantity == Quantity::kSensor ||
                       spec.quantity == Quantity::kRatios;
  if (pt_only && spec.model != Model::kPt) {
    fail(Errc::kInvalidArgument,
         std::string("quantity: ") + quantity_name(spec.quantity) +
             " is defined for the pt model only");
  }
  if (spec.model == Model::kCustomMatrix) {
    if (!spec.custom_matrix) {
      fail(Errc::kInvalidArgument, "matrix: required for custom-matrix model");
    }
    detail::require_square(*spec.custom_matrix, "matrix");
    detail::require_finite(*spec.custom_matrix, "matrix");
    if (spec.initial_state.basis != StateBasis::kExplicit ||
        spec.initial_state.explicit_vector.size() !=
            spec.custom_matrix->rows()) {
      fail(Errc::kInvalidArgument,
           "initial_state: custom-matrix model needs an explicit vector of "
           "matching dimension");
    }
    const std::string& var = spec.grid.variable;
    if (var != "theta") {
      fail(Errc::kInvalidArgument,
           "grid.variable: custom-matrix sweeps support theta only");
    }
  }
  if (spec.measurement) {
    detail::require_square(*spec.measurement, "measurement");
  }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  validate_spec(spec);

  SweepResult out;
  out.columns.push_back(spec.grid.variable);
  for (const std::string& c : value_columns(spec.quantity).names) {
    out.columns.push_back(c);
  }
  out.metadata["tool"] = "nhqfi";
  out.metadata["version"] = kVersion;
  out.metadata["spec"] = spec_to_json(spec);

  const GridSpec& g = spec.grid;
  out.rows.reserve(g.steps);
  for (int i = 0; i < g.steps; ++i) {
    const double v = g.min + (g.max - g.min) * i / (g.steps - 1);
    out.rows.push_back(evaluate_point(spec, v));
  }
  return out;
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "# nhqfi " << kVersion << "\n";
  os << "# " << result.metadata.dump() << "\n";
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    os << (i ? "," : "") << result.columns[i];
  }
  os << ",status\n";
  const std::size_t nvals = result.columns.size() - 1;
  for (const SweepRow& row : result.rows) {
    os << fmt(row.grid);
    for (std::size_t i = 0; i < nvals; ++i) {
      os << ',' << (i < row.values.size() ? fmt(row.values[i]) : "NA");
    }
    os << ',' << row.status << "\n";
  }
  return os.str();
}

std::string to_json(const SweepResult& result) {
  nlohmann::ordered_json doc;
  doc["metadata"] = result.metadata;
  doc["columns"] = result.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : result.rows) {
    nlohmann::ordered_json rec;
    rec[result.columns.front()] = row.grid;
    for (std::size_t i = 0; i + 1 < result.columns.size(); ++i) {
      if (i < row.values.size()) {
        rec[result.columns[i + 1]] = row.values[i];
      } else {
        rec[result.columns[i + 1]] = nullptr;
      }
    }
    rec["status"] = row.status;
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

nlohmann::ordered_json spec_to_json(const SweepSpec& spec) {
  nlohmann::ordered_json j;
  j["model"] = model_name(spec.model);
  j["quantity"] = quantity_name(spec.quantity);
  j["grid"] = {{"variable", spec.grid.variable},
               {"min", spec.grid.min},
               {"max", spec.grid.max},
               {"steps", spec.grid.steps}};
  j["pt"] = {{"r", spec.pt.r}, {"s", spec.pt.s}, {"omega", spec.pt.omega}};
  j["bosonic"] = {{"omega0", spec.bosonic.omega0},
                  {"g", spec.bosonic.g},
                  {"gamma_a", spec.bosonic.gamma_a},
                  {"gamma_b", spec.bosonic.gamma_b}};
  nlohmann::ordered_json st;
  st["basis"] = basis_name(spec.initial_state.basis);
  st["m"] = spec.initial_state.m;
  st["phi"] = spec.initial_state.phi;
  if (spec.initial_state.basis == StateBasis::kExplicit) {
    st["vector"] = matrix_to_json(spec.initial_state.explicit_vector);
  }
  j["initial_state"] = std::move(st);
  if (spec.measurement) j["measurement"] = matrix_to_json(*spec.measurement);
  if (spec.custom_matrix) j["matrix"] = matrix_to_json(*spec.custom_matrix);
  j["theta"] = spec.theta;
  j["tol"] = spec.tol;
  if (!spec.preset.empty()) j["preset"] = spec.preset;
  return j;
}

SweepSpec spec_from_json(const nlohmann::json& j) {
  SweepSpec spec;
  try {
    if (j.contains("model")) spec.model = model_from(j.at("model"));
    if (j.contains("quantity")) spec.quantity = quantity_from(j.at("quantity"));
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (g.contains("variable")) spec.grid.variable = g.at("variable");
      if (g.contains("min")) spec.grid.min = g.at("min");
      if (g.contains("max")) spec.grid.max = g.at("max");
      if (g.contains("steps")) spec.grid.steps = g.at("steps");
    }
    if (j.contains("pt")) {
      const auto& p = j.at("pt");
      if (p.contains("r")) spec.pt.r = p.at("r");
      if (p.contains("s")) spec.pt.s = p.at("s");
      if (p.contains("omega")) spec.pt.omega = p.at("omega");
    }
    if (j.contains("bosonic")) {
      const auto& b = j.at("bosonic");
      if (b.contains("omega0")) spec.bosonic.omega0 = b.at("omega0");
      if (b.contains("g")) spec.bosonic.g = b.at("g");
      if (b.contains("gamma_a")) spec.bosonic.gamma_a = b.at("gamma_a");
      if (b.contains("gamma_b")) spec.bosonic.gamma_b = b.at("gamma_b");
    }
    if (j.contains("initial_state")) {
      const auto& s = j.at("initial_state");
      if (s.contains("basis")) {
        spec.initial_state.basis = basis_from(s.at("basis"));
      }
      if (s.contains("m")) spec.initial_state.m = s.at("m");
      if (s.contains("phi")) spec.initial_state.phi = s.at("phi");
      if (s.contains("vector")) {
        spec.initial_state.explicit_vector =
            vector_from_json(s.at("vector"), "initial_state.vector");
      }
    }
    if (j.contains("measurement")) {
      spec.measurement = matrix_from_json(j.at("measurement"), "measurement");
    }
    if (j.contains("matrix")) {
      spec.custom_matrix = matrix_from_json(j.at("matrix"), "matrix");
    }
    if (j.contains("theta")) spec.theta = j.at("theta");
    if (j.contains("tol")) spec.tol = j.at("tol");
    if (j.contains("preset")) spec.preset = j.at("preset");
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kInvalidArgument, std::string("config: ") + e.what());
  }
  return spec;
}

namespace {

SweepSpec pt_theta_sweep(Quantity q, PtParams pt, StateBasis basis, double m,
                         double phi, double tmax, int steps) {
  SweepSpec s;
  s.model = Model::kPt;
  s.quantity = q;
  s.grid = {"theta", 0.0, tmax, steps};
  s.pt = pt;
  s.initial_state.basis = basis;
  s.initial_state.m = m;
  s.initial_state.phi = phi;
  return s;
}

}  // namespace

SweepSpec preset(const std::string& name) {
  const double half_pi = kPi / 2.0;
  SweepSpec s;
  if (name == "fig1a") {
    s = pt_theta_sweep(Quantity::kQfi, {0.25, 1.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 14.0, 701);
  } else if (name == "fig1a-broken") {
    s = pt_theta_sweep(Quantity::kQfi, {1.0, 0.25, half_pi},
                       StateBasis::kEigenBroken, -1.0, 0.0, 14.0, 701);
  } else if (name == "fig1b") {
    s = pt_theta_sweep(Quantity::kITheta, {0.25, 1.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 14.0, 701);
  } else if (name == "fig1b-broken") {
    s = pt_theta_sweep(Quantity::kITheta, {1.0, 0.25, half_pi},
                       StateBasis::kEigenBroken, -1.0, 0.0, 14.0, 701);
  } else if (name == "fig2a") {
    s.model = Model::kPt;
    s.quantity = Quantity::kQfi;
    s.grid = {"s", 1.5, 2.5, 501};
    s.pt = {2.0, 2.0, half_pi};
    s.initial_state.basis = StateBasis::kEigenAuto;
    s.theta = 0.0;
  } else if (name == "fig2b") {
    s.model = Model::kPt;
    s.quantity = Quantity::kChannelQfi;
    s.grid = {"s", 1.5, 2.5, 501};
    s.pt = {2.0, 2.0, half_pi};
  } else if (name == "fig3a" || name == "fig3b" || name == "fig3c" ||
             name == "fig3d") {
    const double m = name == "fig3a"   ? 1.0
                     : name == "fig3b" ? 1.1
                     : name == "fig3c" ? 1.2
                                       : 1.3;
    s = pt_theta_sweep(Quantity::kVariance, {0.25, 0.5, half_pi},
                       StateBasis::kEigenUnbroken, m, 0.0, 12.0, 601);
  } else if (name == "fig5a" || name == "fig5b" || name == "fig5c") {
    const double phi = name == "fig5a" ? 0.0 : name == "fig5b" ? half_pi : kPi;
    s = pt_theta_sweep(Quantity::kITheta, {0.4, 1.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, phi, 14.0, 701);
  } else if (name == "fig6a") {
    s = pt_theta_sweep(Quantity::kSensor, {2.0, 3.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 4.0, 401);
  } else if (name == "fig6b") {
    s = pt_theta_sweep(Quantity::kQfi, {2.0, 3.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 4.0, 401);
  } else if (name == "fig7a") {
    s = pt_theta_sweep(Quantity::kRatios, {0.6, 1.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 14.0, 701);
  } else if (name == "fig7b") {
    s = pt_theta_sweep(Quantity::kRatios, {0.2, 1.0, half_pi},
                       StateBasis::kEigenUnbroken, 1.0, 0.0, 14.0, 701);
  } else {
    fail(Errc::kInvalidArgument, "preset: unknown name '" + name + "'");
  }
  s.preset = name;
  return s;
}

std::vector<std::string> preset_names() {
  return {"fig1a", "fig1a-broken", "fig1b", "fig1b-broken", "fig2a", "fig2b",
          "fig3a", "fig3b",        "fig3c", "fig3d",        "fig5a", "fig5b",
          "fig5c", "fig6a",        "fig6b", "fig7a",        "fig7b"};
}

}  // namespace nhqfi
