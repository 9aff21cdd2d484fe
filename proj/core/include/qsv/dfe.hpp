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

#ifndef QSV_DFE_HPP_
#define QSV_DFE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsv/bases.hpp"
#include "qsv/charfunc.hpp"
#include "qsv/linalg.hpp"
#include "qsv/rng.hpp"
#include "qsv/states.hpp"

namespace qsv {

struct PlanEntry {
  ObservablePair label;
  Complex chi;         // target characteristic function value
  double probability;  // |chi|^2
  std::uint64_t m;     // single-shot repetitions when this label is drawn
};

/// Importance-sampling schedule for direct fidelity estimation against a pure
/// target: ell labels drawn i.i.d. with probability |chi|^2, each measured m
/// times.
struct SamplingPlan {
  BasisKind basis = BasisKind::kSud;
  int d1 = 2;
  int d2 = 2;
  std::uint64_t ell = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::vector<PlanEntry> entries;
};

struct EstimateReport {
  double y_tilde = 0.0;
  std::optional<double> true_fidelity;
  std::uint64_t total_single_measurements = 0;
  std::uint64_t seed = 0;
};

// ceil(1 / (eps^2 delta)).
std::uint64_t label_draws(double epsilon, double delta);

/// ceil(2 ln(2/delta) / (N^2 ell eps^2 chi^2)) with N the two-site
/// normalizer. N^2 = 4 gives the qubit form ln(2/delta) / (2 ell eps^2 chi^2).
std::uint64_t repetitions(double chi_abs, double normalizer, std::uint64_t ell,
                          double epsilon, double delta);

/// Throws ImpureTarget when sum |chi|^2 differs from 1 by more than 1e-6.
/// Labels with |chi| <= 1e-12 are left out.
SamplingPlan make_plan(const CharFunction& target, double epsilon,
                       double delta);

/// Born-rule outcome distribution of an SU(d) (x) SU(d) observable on a
/// fixed state. Outcomes are the distinct eigenvalues of the observable
/// (including 0); probabilities are Tr[rho Pi] over the eigenspaces.
class MeasurementModel {
 public:
  MeasurementModel(const ComplexMatrix& rho, const ObservablePair& pair);

  const std::vector<double>& outcomes() const { return outcomes_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  double expectation() const;
  double sample(Rng& rng) const;

 private:
  std::vector<double> outcomes_;
  std::vector<double> probabilities_;
  std::vector<double> cdf_;
};

std::vector<double> measure_observable(const ComplexMatrix& rho_true,
                                       const ObservablePair& pair,
                                       std::uint64_t m, std::uint64_t seed);

/// Y~ = (1/ell) sum_i sum_j M_ij / (m_i N(k_i) chi(k_i)). The true fidelity is
/// filled in from the plan's labels, sum chi_target chi_true.
EstimateReport estimate(const SamplingPlan& plan, const ComplexMatrix& rho_true,
                        std::uint64_t seed);

struct CoverageResult {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  // trials with |Y~ - F| <= 2 eps
  double coverage = 0.0;
  double ci_low = 0.0;     // Wilson score interval, 95%
  double ci_high = 0.0;
  double true_fidelity = 0.0;
  double mean_y = 0.0;
  double std_error = 0.0;  // of mean_y
};

/// Repeats estimate() with independent streams derive_seed(seed, trial).
CoverageResult coverage_experiment(const SchmidtState& target,
                                   const ComplexMatrix& rho_true, double epsilon,
                                   double delta, std::uint64_t trials,
                                   std::uint64_t seed);

struct ScheduleEntry {
  ObservablePair label;
  double probability;
  std::uint64_t m;
  double expected_draws;        // ell * probability
  double expected_measurements; // ell * probability * m
};

std::vector<ScheduleEntry> expected_schedule(const SamplingPlan& plan);

}  // namespace qsv

#endif  // QSV_DFE_HPP_
