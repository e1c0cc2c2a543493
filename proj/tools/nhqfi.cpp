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

// Command-line front end: parameter sweeps, regime/eigensystem dumps,
// channel-QFI evaluation and the cross-oracle validation battery.
// Exit codes: 0 success, 1 validation failure, 2 spec error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nhqfi/linalg.hpp"
#include "nhqfi/sweep.hpp"
#include "nhqfi/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitSpecError = 2;

struct SweepFlags {
  std::string config;
  std::string preset;
  std::string model;
  std::string quantity;
  std::string basis;
  std::string grid_var;
  std::optional<double> theta_min, theta_max;
  std::optional<int> theta_steps;
  std::optional<double> grid_min, grid_max;
  std::optional<int> grid_steps;
  std::optional<double> r, s, omega, m, phi;
  std::optional<double> g, gamma_a, gamma_b, omega0;
  std::optional<double> theta_fixed, tol;
  std::string out;
  std::string format = "csv";
};

// Config file and preset give the base spec; explicit flags win.
nhqfi::SweepSpec resolve_spec(const SweepFlags& f) {
  nhqfi::SweepSpec spec;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) {
      nhqfi::fail(nhqfi::Errc::kInvalidArgument,
                  "config: cannot open '" + f.config + "'");
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      nhqfi::fail(nhqfi::Errc::kInvalidArgument,
                  std::string("config: parse error: ") + e.what());
    }
    spec = nhqfi::spec_from_json(j);
  }
  if (!f.preset.empty()) spec = nhqfi::preset(f.preset);

  nlohmann::ordered_json patch = nhqfi::spec_to_json(spec);
  if (!f.model.empty()) patch["model"] = f.model;
  if (!f.quantity.empty()) patch["quantity"] = f.quantity;
  if (!f.basis.empty()) patch["initial_state"]["basis"] = f.basis;
  if (!f.grid_var.empty()) patch["grid"]["variable"] = f.grid_var;
  if (f.theta_min) {
    patch["grid"]["variable"] = "theta";
    patch["grid"]["min"] = *f.theta_min;
  }
  if (f.theta_max) {
    patch["grid"]["variable"] = "theta";
    patch["grid"]["max"] = *f.theta_max;
  }
  if (f.theta_steps) patch["grid"]["steps"] = *f.theta_steps;
  if (f.grid_min) patch["grid"]["min"] = *f.grid_min;
  if (f.grid_max) patch["grid"]["max"] = *f.grid_max;
  if (f.grid_steps) patch["grid"]["steps"] = *f.grid_steps;
  if (f.r) patch["pt"]["r"] = *f.r;
  if (f.s) patch["pt"]["s"] = *f.s;
  if (f.omega) patch["pt"]["omega"] = *f.omega;
  if (f.m) patch["initial_state"]["m"] = *f.m;
  if (f.phi) patch["initial_state"]["phi"] = *f.phi;
  if (f.g) patch["bosonic"]["g"] = *f.g;
  if (f.gamma_a) patch["bosonic"]["gamma_a"] = *f.gamma_a;
  if (f.gamma_b) patch["bosonic"]["gamma_b"] = *f.gamma_b;
  if (f.omega0) patch["bosonic"]["omega0"] = *f.omega0;
  if (f.theta_fixed) patch["theta"] = *f.theta_fixed;
  if (f.tol) patch["tol"] = *f.tol;
  return nhqfi::spec_from_json(patch);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    nhqfi::fail(nhqfi::Errc::kInvalidArgument,
                "out: cannot open '" + path + "' for writing");
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nhqfi: Fisher-information engine for non-Hermitian two-level "
               "models"};
  app.require_subcommand(1);

  SweepFlags f;
  double r = 0.25, s = 1.0, omega = 1.5707963267948966;
  bool inject_fault = false;
  std::string format = "csv";

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a quantity over a grid");
  sweep->add_option("--config", f.config, "JSON sweep spec file");
  sweep->add_option("--preset", f.preset, "named figure recipe (see --list-presets)");
  sweep->add_option("--model", f.model, "pt | bosonic | custom-matrix");
  sweep->add_option("--quantity", f.quantity,
                    "qfi | i_theta | k_theta | channel_qfi | variance | "
                    "crb_gap | sensor | ratios | condition_residual");
  sweep->add_option("--basis", f.basis,
                    "eigen | eigen-unbroken | eigen-broken | explicit");
  sweep->add_option("--grid-var", f.grid_var, "grid variable name");
  sweep->add_option("--grid-min", [&f](const CLI::results_t& v) {
    f.grid_min = std::stod(v[0]); return true; }, "grid lower bound");
  sweep->add_option("--grid-max", [&f](const CLI::results_t& v) {
    f.grid_max = std::stod(v[0]); return true; }, "grid upper bound");
  sweep->add_option("--grid-steps", [&f](const CLI::results_t& v) {
    f.grid_steps = std::stoi(v[0]); return true; }, "grid point count");
  sweep->add_option("--theta-min", [&f](const CLI::results_t& v) {
    f.theta_min = std::stod(v[0]); return true; }, "theta grid lower bound");
  sweep->add_option("--theta-max", [&f](const CLI::results_t& v) {
    f.theta_max = std::stod(v[0]); return true; }, "theta grid upper bound");
  sweep->add_option("--theta-steps", [&f](const CLI::results_t& v) {
    f.theta_steps = std::stoi(v[0]); return true; }, "theta grid point count");
  sweep->add_option("--r", [&f](const CLI::results_t& v) {
    f.r = std::stod(v[0]); return true; }, "PT parameter r");
  sweep->add_option("--s", [&f](const CLI::results_t& v) {
    f.s = std::stod(v[0]); return true; }, "PT parameter s");
  sweep->add_option("--omega", [&f](const CLI::results_t& v) {
    f.omega = std::stod(v[0]); return true; }, "PT parameter omega");
  sweep->add_option("--m", [&f](const CLI::results_t& v) {
    f.m = std::stod(v[0]); return true; }, "initial-state weight m");
  sweep->add_option("--phi", [&f](const CLI::results_t& v) {
    f.phi = std::stod(v[0]); return true; }, "initial-state phase phi");
  sweep->add_option("--g", [&f](const CLI::results_t& v) {
    f.g = std::stod(v[0]); return true; }, "bosonic coupling g");
  sweep->add_option("--gamma-a", [&f](const CLI::results_t& v) {
    f.gamma_a = std::stod(v[0]); return true; }, "bosonic loss rate gamma_a");
  sweep->add_option("--gamma-b", [&f](const CLI::results_t& v) {
    f.gamma_b = std::stod(v[0]); return true; }, "bosonic loss rate gamma_b");
  sweep->add_option("--omega0", [&f](const CLI::results_t& v) {
    f.omega0 = std::stod(v[0]); return true; }, "bosonic mode frequency");
  sweep->add_option("--theta", [&f](const CLI::results_t& v) {
    f.theta_fixed = std::stod(v[0]); return true; },
    "fixed theta for parameter grids");
  sweep->add_option("--tol", [&f](const CLI::results_t& v) {
    f.tol = std::stod(v[0]); return true; }, "condition tolerance");
  sweep->add_option("--out", f.out, "output path (default stdout)");
  sweep->add_option("--format", f.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  bool list_presets = false;
  sweep->add_flag("--list-presets", list_presets, "list preset names and exit");

  CLI::App* validate =
      app.add_subcommand("validate", "run the cross-oracle validation battery");
  validate->add_flag("--inject-fault", inject_fault,
                     "negative control: corrupt one closed form");

  CLI::App* channel = app.add_subcommand(
      "channel-qfi", "input-optimized QFI: closed form and numeric optimizer");
  channel->add_option("--r", r, "PT parameter r");
  channel->add_option("--s", s, "PT parameter s");
  channel->add_option("--omega", omega, "PT parameter omega");
  channel->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* regime =
      app.add_subcommand("regime", "classify parameters and dump eigensystem");
  regime->add_option("--r", r, "PT parameter r");
  regime->add_option("--s", s, "PT parameter s");
  regime->add_option("--omega", omega, "PT parameter omega");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? kExitOk : kExitSpecError;
  }

  try {
    if (sweep->parsed()) {
      if (list_presets) {
        for (const std::string& name : nhqfi::preset_names()) {
          std::cout << name << "\n";
        }
        return kExitOk;
      }
      const nhqfi::SweepSpec spec = resolve_spec(f);
      const nhqfi::SweepResult result = nhqfi::run_sweep(spec);
      write_output(f.format == "json" ? nhqfi::to_json(result)
                                      : nhqfi::to_csv(result),
                   f.out);
      return kExitOk;
    }
    if (validate->parsed()) {
      nhqfi::ValidateOptions opts;
      opts.inject_fault = inject_fault;
      const nhqfi::ValidationReport report = nhqfi::validate_suite(opts);
      nhqfi::print_report(report, std::cout);
      return report.all_passed ? kExitOk : kExitValidationFailure;
    }
    if (channel->parsed()) {
      const nhqfi::PtParams p{r, s, omega};
      const nhqfi::ChannelQfi closed = nhqfi::channel_qfi(p);
      if (closed.at_ep) {
        if (format == "json") {
          std::cout << "{\"channel_qfi\": 0.0, \"at_ep\": true}\n";
        } else {
          std::cout << "channel_qfi 0 (exactly at the exceptional point)\n";
        }
        return kExitOk;
      }
      const nhqfi::ChannelQfiSearch best = nhqfi::channel_qfi_numeric(p);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["channel_qfi"] = closed.value;
        j["optimizer"] = {{"value", best.value},
                          {"m", best.m},
                          {"phi", best.phi},
                          {"theta", best.theta}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "channel_qfi " << closed.value << "\n"
                  << "optimizer   " << best.value << " at m=" << best.m
                  << " phi=" << best.phi << " theta=" << best.theta << "\n";
      }
      return kExitOk;
    }
    if (regime->parsed()) {
      const nhqfi::PtParams p{r, s, omega};
      const nhqfi::PtRegime reg = nhqfi::classify(p);
      std::cout << "regime " << nhqfi::regime_name(reg.tag) << "\n"
                << "mu " << reg.mu << "\n"
                << "nu " << reg.nu << "\n";
      if (reg.tag != nhqfi::Regime::kExceptionalPoint) {
        const nhqfi::PtEigensystem eig = nhqfi::eigensystem(p);
        std::cout << "value+ " << eig.value_plus << "\n"
                  << "value- " << eig.value_minus << "\n"
                  << "state+ [" << eig.state_plus(0) << ", "
                  << eig.state_plus(1) << "]\n"
                  << "state- [" << eig.state_minus(0) << ", "
                  << eig.state_minus(1) << "]\n"
                  << "overlap "
                  << nhqfi::inner(eig.state_plus, eig.state_minus) << "\n";
      }
      return kExitOk;
    }
  } catch (const nhqfi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
  return kExitSpecError;
}
