// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSV_CLI_COMMANDS_HPP_
#define QSV_CLI_COMMANDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsv_cli/config.hpp"
#include "qsv_cli/table.hpp"

namespace qsv::cli {

/// A command's data plus any failed invariant checks. `json`, when set,
/// replaces the row-object rendering of `table` for --format json.
struct CommandOutput {
  Table table;
  std::optional<nlohmann::ordered_json> json;
  std::vector<std::string> violations;
};

// tau, strategy_kind, alpha, theta3, beta_basis, beta_spectral, n
CommandOutput sweep_verify(const SweepConfig& config);

// tau, then chi_<label> for every label in the support of any row
// (Weyl: chi_<label>_re and chi_<label>_im).
CommandOutput sweep_charfunc(const SweepConfig& config);

// tau, negativity
CommandOutput sweep_negativity(const SweepConfig& config);

// tau, label, chi, prob, m, ell, expected_draws, expected_measurements
CommandOutput dfe_plan(const SweepConfig& config);

// tau, repeat, seed, y_tilde, true_fidelity, total_single_measurements
CommandOutput dfe_run(const SweepConfig& config);

struct FidelityResult {
  double value = 0.0;   // characteristic-function overlap
  double direct = 0.0;  // |<a|b>|^2
  std::vector<std::string> violations;
};

FidelityResult fidelity(const std::string& spec_a, const std::string& spec_b,
                        BasisKind basis);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Library self-test run by `qsv check` and `--check`: basis orthogonality,
/// the purity identity, strategy soundness on a coarse grid and plan
/// bookkeeping. Deterministic.
std::vector<CheckResult> invariant_suite();

}  // namespace qsv::cli

#endif  // QSV_CLI_COMMANDS_HPP_
