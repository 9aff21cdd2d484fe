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

#include "qsv_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qsv/charfunc.hpp"
#include "qsv/constants.hpp"
#include "qsv/dfe.hpp"
#include "qsv/error.hpp"
#include "qsv/random_states.hpp"
#include "qsv/serialize.hpp"

namespace qsv::cli {
namespace {

std::string at_tau(double tau) { return "tau=" + format_number(tau) + ": "; }

Strategy build_strategy(const TargetPoint& point, const SweepConfig& config) {
  if (point.target.schmidt_rank() == 1) return strategy_separable(point.target);
  if (!config.schmidt_path.empty()) return strategy_qudit_general(point.target);
  if (config.d == 2) return strategy_two_qubit(point.tau);
  return strategy_two_qutrit(point.tau, config.theta3);
}

void check_strategy(const Strategy& s, const StrategyReport& r,
                    const std::string& where, std::vector<std::string>& out) {
  const double fixed = (s.omega * s.target.vector - s.target.vector).norm();
  if (fixed > 1e-8) {
    out.push_back(where + "target not accepted with certainty (" +
                  format_number(fixed) + ")");
  }
  const auto eig = hermitian_eig(s.omega);
  if (eig.eigenvalues.minCoeff() < -1e-9 || eig.eigenvalues.maxCoeff() > 1.0 + 1e-9) {
    out.push_back(where + "strategy spectrum leaves [0, 1]");
  }
  if (r.beta_basis < -1e-12 || r.beta_basis > r.beta_spectral + 1e-9) {
    out.push_back(where + "beta_basis outside [0, beta_spectral]");
  }
  if (!(r.beta_spectral < 1.0)) out.push_back(where + "beta_spectral reached 1");
}

CharFunction char_for(const ComplexMatrix& rho, int d, BasisKind basis) {
  return basis == BasisKind::kSud ? char_sud(rho, d, d) : char_weyl(rho, d);
}

Cell opt_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

}  // namespace

CommandOutput sweep_verify(const SweepConfig& config) {
  config.validate();
  CommandOutput out;
  out.table.columns = {"tau",    "strategy_kind", "alpha", "theta3",
                       "beta_basis", "beta_spectral", "n"};
  for (const auto& point : sweep_targets(config)) {
    const Strategy s = build_strategy(point, config);
    const StrategyReport r = report(s, config.epsilon, config.delta);
    out.table.add_row({point.tau, to_string(s.kind), s.alpha, opt_cell(s.theta3),
                       r.beta_basis, r.beta_spectral, r.n});
    check_strategy(s, r, at_tau(point.tau), out.violations);
  }
  return out;
}

CommandOutput sweep_charfunc(const SweepConfig& config) {
  config.validate();
  CommandOutput out;
  const auto points = sweep_targets(config);
  std::vector<CharFunction> chis;
  std::vector<bool> in_support;
  for (const auto& point : points) {
    chis.push_back(char_for(projector(point.target.vector), point.target.d,
                            config.basis));
    const auto& chi = chis.back();
    if (in_support.empty()) in_support.assign(chi.values.size(), false);
    if (chi.values.size() != in_support.size()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "all rows of a characteristic-function sweep need one dimension");
    }
    for (std::size_t k = 0; k < chi.values.size(); ++k) {
      if (std::abs(chi.values[k]) > tol::kSupport) in_support[k] = true;
    }
    const double purity = chi.purity();
    if (std::abs(purity - 1.0) > 1e-10) {
      out.violations.push_back(at_tau(point.tau) + "sum chi^2 = " +
                               format_number(purity));
    }
  }
  const bool weyl = config.basis == BasisKind::kWeyl;
  out.table.columns = {"tau"};
  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < in_support.size(); ++k) {
    if (!in_support[k]) continue;
    selected.push_back(k);
    const std::string name = "chi_" + chis.front().labels[k].name();
    if (weyl) {
      out.table.columns.push_back(name + "_re");
      out.table.columns.push_back(name + "_im");
    } else {
      out.table.columns.push_back(name);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Cell> row{points[i].tau};
    for (std::size_t k : selected) {
      const Complex v = chis[i].values[k];
      row.emplace_back(v.real());
      if (weyl) {
        row.emplace_back(v.imag());
      } else if (std::abs(v.imag()) > 1e-12) {
        out.violations.push_back(at_tau(points[i].tau) +
                                 "complex SU(d) coefficient");
      }
    }
    out.table.add_row(std::move(row));
  }
  return out;
}

CommandOutput sweep_negativity(const SweepConfig& config) {
  config.validate();
  CommandOutput out;
  out.table.columns = {"tau", "negativity"};
  for (const auto& point : sweep_targets(config)) {
    const int d = point.target.d;
    const double n = negativity(projector(point.target.vector), {d, d});
    double sum = 0.0;
    for (double c : point.target.coeffs) sum += c;
    const double expected = (sum * sum - 1.0) / 2.0;
    if (std::abs(n - expected) > 1e-9) {
      out.violations.push_back(at_tau(point.tau) +
                               "negativity disagrees with the Schmidt formula");
    }
    out.table.add_row({point.tau, n});
  }
  return out;
}

CommandOutput dfe_plan(const SweepConfig& config) {
  config.validate();
  CommandOutput out;
  const bool weyl = config.basis == BasisKind::kWeyl;
  out.table.columns = {"tau", "label"};
  if (weyl) {
    out.table.columns.insert(out.table.columns.end(), {"chi_re", "chi_im"});
  } else {
    out.table.columns.push_back("chi");
  }
  out.table.columns.insert(out.table.columns.end(),
                           {"prob", "m", "ell", "expected_draws",
                            "expected_measurements"});
  nlohmann::ordered_json plans = nlohmann::ordered_json::array();
  for (const auto& point : sweep_targets(config)) {
    const auto chi = char_for(projector(point.target.vector), point.target.d,
                              config.basis);
    const SamplingPlan plan = make_plan(chi, config.epsilon, config.delta);
    const auto schedule = expected_schedule(plan);
    double total = 0.0;
    for (std::size_t i = 0; i < plan.entries.size(); ++i) {
      const auto& e = plan.entries[i];
      std::vector<Cell> row{point.tau, e.label.name(), e.chi.real()};
      if (weyl) row.emplace_back(e.chi.imag());
      row.insert(row.end(), {e.probability, e.m, plan.ell,
                             schedule[i].expected_draws,
                             schedule[i].expected_measurements});
      out.table.add_row(std::move(row));
      total += e.probability;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      out.violations.push_back(at_tau(point.tau) + "plan probabilities sum to " +
                               format_number(total));
    }
    nlohmann::ordered_json entry;
    entry["tau"] = point.tau;
    entry["plan"] = nlohmann::ordered_json(to_json(plan));
    plans.push_back(std::move(entry));
  }
  out.json = std::move(plans);
  return out;
}

CommandOutput dfe_run(const SweepConfig& config) {
  config.validate();
  if (config.basis != BasisKind::kSud) {
    throw Error(ErrorKind::kUnsupportedBasis,
                "dfe-run simulates SU(d) measurements only; use dfe-plan for Weyl");
  }
  CommandOutput out;
  out.table.columns = {"tau",     "repeat",        "seed",
                       "y_tilde", "true_fidelity", "total_single_measurements"};
  const auto points = sweep_targets(config);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& point = points[i];
    const ComplexMatrix rho_target = projector(point.target.vector);
    const ComplexMatrix rho_true = apply_noise(point.target, config.noise);
    const SamplingPlan plan =
        make_plan(char_sud(rho_target, point.target.d, point.target.d),
                  config.epsilon, config.delta);
    const double direct = (rho_true * rho_target).trace().real();
    const std::uint64_t row_seed = derive_seed(config.seed, i);
    for (std::uint64_t r = 0; r < config.repeats; ++r) {
      const EstimateReport rep = estimate(plan, rho_true, derive_seed(row_seed, r));
      out.table.add_row({point.tau, r, rep.seed, rep.y_tilde,
                         opt_cell(rep.true_fidelity), rep.total_single_measurements});
      if (!rep.true_fidelity || std::abs(*rep.true_fidelity - direct) > 1e-9) {
        out.violations.push_back(at_tau(point.tau) +
                                 "plan fidelity disagrees with Tr[rho sigma]");
      }
    }
  }
  return out;
}

FidelityResult fidelity(const std::string& spec_a, const std::string& spec_b,
                        BasisKind basis) {
  const SchmidtState a = parse_state_spec(spec_a);
  const SchmidtState b = parse_state_spec(spec_b);
  if (a.d != b.d) {
    throw Error(ErrorKind::kDimensionMismatch,
                "states have local dimensions " + std::to_string(a.d) + " and " +
                    std::to_string(b.d));
  }
  FidelityResult result;
  result.value = fidelity_overlap(char_for(projector(a.vector), a.d, basis),
                                  char_for(projector(b.vector), b.d, basis));
  result.direct = std::norm(a.vector.dot(b.vector));
  if (std::abs(result.value - result.direct) > 1e-10) {
    result.violations.push_back("overlap " + format_number(result.value) +
                                " differs from |<a|b>|^2 = " +
                                format_number(result.direct));
  }
  return result;
}

std::vector<CheckResult> invariant_suite() {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    results.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
      for (int a = 0; a < d * d; ++a) {
        const ComplexMatrix la = sud_generator(d, a);
        for (int b = 0; b < d * d; ++b) {
          const double want = a != b ? 0.0 : (a == 0 ? d : 2.0);
          worst = std::max(worst,
                           std::abs((la * sud_generator(d, b)).trace() - want));
        }
      }
    }
    record("sud_orthogonality", worst < 1e-12, "max error " + format_number(worst));
  }
  {
    double worst = 0.0;
    for (int d : {3, 5}) {
      for (int k = 0; k < d * d; ++k) {
        const ComplexMatrix dk = weyl_D(d, k / d, k % d);
        worst = std::max(worst, (dk.adjoint() * dk - identity(d)).norm());
        for (int j = 0; j < d * d; ++j) {
          const double want = j == k ? d : 0.0;
          worst = std::max(
              worst, std::abs((dk.adjoint() * weyl_D(d, j / d, j % d)).trace() - want));
        }
      }
    }
    record("weyl_unitary_orthogonal", worst < 1e-12, "max error " + format_number(worst));
  }
  {
    Rng rng(2024);
    double worst = 0.0;
    for (int d : {2, 3}) {
      for (int rep = 0; rep < 5; ++rep) {
        const ComplexMatrix rho = random_density_matrix(d * d, 1 + rep % (d * d), rng);
        const double purity = (rho * rho).trace().real();
        worst = std::max(worst, std::abs(char_sud(rho, d, d).purity() - purity));
        if (d % 2 == 1) {
          worst = std::max(worst, std::abs(char_weyl(rho, d).purity() - purity));
        }
        worst = std::max(worst, (reconstruct(char_sud(rho, d, d)) - rho).norm());
      }
    }
    record("purity_and_reconstruction", worst < 1e-10, "max error " + format_number(worst));
  }
  {
    std::vector<std::string> bad;
    for (int i = 1; i < 25; ++i) {
      const double tau = 2.0 * std::numbers::pi * i / 25.0;
      const auto q3 = strategy_two_qutrit(tau, Theta3Policy::Fixed(0.0));
      check_strategy(q3, report(q3, 0.01, 0.1), at_tau(tau), bad);
      if (std::abs(std::sin(2.0 * tau)) > 1e-9) {
        const auto q2 = strategy_two_qubit(tau);
        check_strategy(q2, report(q2, 0.01, 0.1), at_tau(tau), bad);
      }
    }
    record("strategy_soundness", bad.empty(), bad.empty() ? "" : bad.front());
  }
  {
    const auto n_sep = n_measurements(0.0, 0.01, 0.1);
    const auto n_bell = n_measurements(1.0 / 3.0, 0.01, 0.1);
    record("measurement_counts", n_sep == 230 && n_bell == 345,
           "n(0) = " + std::to_string(n_sep) + ", n(1/3) = " + std::to_string(n_bell));
  }
  {
    const auto target = two_qutrit_target(1.0);
    const auto plan = make_plan(char_sud(projector(target.vector), 3, 3), 0.01, 0.1);
    double total = 0.0;
    for (const auto& e : plan.entries) total += e.probability;
    record("plan_bookkeeping",
           plan.ell == 100000 && std::abs(total - 1.0) < 1e-10,
           "ell = " + std::to_string(plan.ell) + ", sum p = " + format_number(total));
  }
  {
    const auto me = max_entangled(3);
    const double n = negativity(projector(me.vector), {3, 3});
    record("negativity_max_entangled", std::abs(n - 1.0) < 1e-10,
           "N = " + format_number(n));
  }
  return results;
}

}  // namespace qsv::cli
