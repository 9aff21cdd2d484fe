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

#include "qsv/dfe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsv/constants.hpp"
#include "qsv/error.hpp"

namespace qsv {
namespace {

void require_accuracy(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "epsilon and delta must lie in (0, 1)");
  }
}

std::vector<MeasurementModel> build_models(const SamplingPlan& plan,
                                           const ComplexMatrix& rho_true) {
  if (plan.basis != BasisKind::kSud) {
    throw Error(ErrorKind::kUnsupportedBasis,
                "measurement simulation is implemented for the SU(d) basis only");
  }
  require_density_matrix(rho_true, plan.d1 * plan.d2);
  std::vector<MeasurementModel> models;
  models.reserve(plan.entries.size());
  for (const auto& e : plan.entries) models.emplace_back(rho_true, e.label);
  return models;
}

double plan_fidelity(const SamplingPlan& plan,
                     const std::vector<MeasurementModel>& models) {
  double f = 0.0;
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const auto& e = plan.entries[i];
    f += e.chi.real() * models[i].expectation() / pair_normalizer(e.label);
  }
  return f;
}

EstimateReport run_estimate(const SamplingPlan& plan,
                            const std::vector<MeasurementModel>& models,
                            const std::vector<double>& cdf,
                            std::uint64_t seed) {
  Rng rng(seed);
  EstimateReport report;
  report.seed = seed;
  double y = 0.0;
  for (std::uint64_t i = 0; i < plan.ell; ++i) {
    const std::size_t idx = rng.categorical(cdf);
    const auto& entry = plan.entries[idx];
    double outcomes = 0.0;
    for (std::uint64_t j = 0; j < entry.m; ++j) outcomes += models[idx].sample(rng);
    y += outcomes / (static_cast<double>(entry.m) * pair_normalizer(entry.label) *
                     entry.chi.real());
    report.total_single_measurements += entry.m;
  }
  report.y_tilde = y / static_cast<double>(plan.ell);
  return report;
}

std::vector<double> plan_cdf(const SamplingPlan& plan) {
  if (plan.entries.empty()) {
    throw Error(ErrorKind::kInvalidParameter, "sampling plan has no entries");
  }
  std::vector<double> cdf;
  cdf.reserve(plan.entries.size());
  double acc = 0.0;
  for (const auto& e : plan.entries) {
    acc += e.probability;
    cdf.push_back(acc);
  }
  return cdf;
}

}  // namespace

std::uint64_t label_draws(double epsilon, double delta) {
  require_accuracy(epsilon, delta);
  return static_cast<std::uint64_t>(std::ceil(1.0 / (epsilon * epsilon * delta)));
}

std::uint64_t repetitions(double chi_abs, double normalizer, std::uint64_t ell,
                          double epsilon, double delta) {
  require_accuracy(epsilon, delta);
  if (!(chi_abs > 0.0) || !(normalizer > 0.0) || ell == 0) {
    throw Error(ErrorKind::kInvalidParameter,
                "repetitions need chi > 0, N > 0 and ell > 0");
  }
  const double n2 = normalizer * normalizer;
  const double m = 2.0 * std::log(2.0 / delta) /
                   (n2 * static_cast<double>(ell) * epsilon * epsilon *
                    chi_abs * chi_abs);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m)));
}

SamplingPlan make_plan(const CharFunction& target, double epsilon,
                       double delta) {
  require_accuracy(epsilon, delta);
  const double purity = target.purity();
  if (std::abs(purity - 1.0) > 1e-6) {
    throw Error(ErrorKind::kImpureTarget,
                "target characteristic function has sum |chi|^2 = " +
                    std::to_string(purity));
  }
  SamplingPlan plan;
  plan.basis = target.basis;
  plan.d1 = target.d1;
  plan.d2 = target.d2;
  plan.ell = label_draws(epsilon, delta);
  plan.epsilon = epsilon;
  plan.delta = delta;
  for (const auto& s : support(target, tol::kSupport)) {
    plan.entries.push_back(
        {s.label, s.chi, s.probability,
         repetitions(std::abs(s.chi), pair_normalizer(s.label), plan.ell,
                     epsilon, delta)});
  }
  return plan;
}

MeasurementModel::MeasurementModel(const ComplexMatrix& rho,
                                   const ObservablePair& pair) {
  if (pair.kind() != BasisKind::kSud) {
    throw Error(ErrorKind::kUnsupportedBasis,
                "Weyl operators are not observables; no measurement model");
  }
  const ComplexMatrix observable = pair_operator(pair);
  if (rho.rows() != observable.rows() || rho.cols() != observable.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "state and observable dimensions differ");
  }
  const auto clusters = hermitian_eig(observable).clusters(tol::kDegenerateGap);
  double acc = 0.0;
  for (const auto& c : clusters) {
    const double p = std::max((rho * c.projector).trace().real(), 0.0);
    outcomes_.push_back(c.eigenvalue);
    probabilities_.push_back(p);
    acc += p;
    cdf_.push_back(acc);
  }
  if (!(acc > 0.0)) {
    throw Error(ErrorKind::kInvalidDensityMatrix,
                "Born probabilities sum to zero");
  }
}

double MeasurementModel::expectation() const {
  double e = 0.0;
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    e += outcomes_[i] * probabilities_[i];
  }
  return e;
}

double MeasurementModel::sample(Rng& rng) const {
  return outcomes_[rng.categorical(cdf_)];
}

std::vector<double> measure_observable(const ComplexMatrix& rho_true,
                                       const ObservablePair& pair,
                                       std::uint64_t m, std::uint64_t seed) {
  if (pair.kind() == BasisKind::kSud) {
    const auto& a = pair.sud_first();
    const auto& b = pair.sud_second();
    require_density_matrix(rho_true, a.d * b.d);
  }
  const MeasurementModel model(rho_true, pair);
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(model.sample(rng));
  return out;
}

EstimateReport estimate(const SamplingPlan& plan, const ComplexMatrix& rho_true,
                        std::uint64_t seed) {
  const auto models = build_models(plan, rho_true);
  auto report = run_estimate(plan, models, plan_cdf(plan), seed);
  report.true_fidelity = plan_fidelity(plan, models);
  return report;
}

CoverageResult coverage_experiment(const SchmidtState& target,
                                   const ComplexMatrix& rho_true, double epsilon,
                                   double delta, std::uint64_t trials,
                                   std::uint64_t seed) {
  if (trials < 100) {
    throw Error(ErrorKind::kInvalidParameter,
                "coverage experiments need at least 100 trials");
  }
  const ComplexMatrix rho_target = projector(target.vector);
  const auto plan =
      make_plan(char_sud(rho_target, target.d, target.d), epsilon, delta);
  const auto models = build_models(plan, rho_true);
  const auto cdf = plan_cdf(plan);

  CoverageResult result;
  result.trials = trials;
  result.true_fidelity = (rho_true * rho_target).trace().real();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double y = run_estimate(plan, models, cdf, derive_seed(seed, t)).y_tilde;
    sum += y;
    sum_sq += y * y;
    if (std::abs(y - result.true_fidelity) <= 2.0 * epsilon) ++result.hits;
  }
  const double n = static_cast<double>(trials);
  result.mean_y = sum / n;
  const double var = std::max(sum_sq / n - result.mean_y * result.mean_y, 0.0) *
                     n / (n - 1.0);
  result.std_error = std::sqrt(var / n);
  result.coverage = static_cast<double>(result.hits) / n;

  constexpr double z = 1.959963984540054;
  const double p = result.coverage;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  result.ci_low = std::max(0.0, centre - half);
  result.ci_high = std::min(1.0, centre + half);
  return result;
}

std::vector<ScheduleEntry> expected_schedule(const SamplingPlan& plan) {
  std::vector<ScheduleEntry> out;
  out.reserve(plan.entries.size());
  const double ell = static_cast<double>(plan.ell);
  for (const auto& e : plan.entries) {
    out.push_back({e.label, e.probability, e.m, ell * e.probability,
                   ell * e.probability * static_cast<double>(e.m)});
  }
  return out;
}

}  // namespace qsv
