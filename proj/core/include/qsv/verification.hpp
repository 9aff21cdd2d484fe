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

#ifndef QSV_VERIFICATION_HPP_
#define QSV_VERIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsv/linalg.hpp"
#include "qsv/states.hpp"

namespace qsv {

enum class StrategyKind {
  kSeparable,     // |psi><psi| for product targets
  kBell,          // (Pi^1 + Pi^2 + Pi^3) / 3 for (|00> + |11>)/sqrt(2)
  kTwoQubit,      // alpha P_Z + (1 - alpha) Omega_3
  kTwoQutrit,     // alpha P_Z + (1 - alpha) sum_j Omega_7^j
  kQuditGeneral,  // the two-qutrit construction with extra angles at 0
};

std::string to_string(StrategyKind kind);

struct NamedOperator {
  std::string name;
  ComplexMatrix op;
};

/// A verification operator 0 <= omega <= I with omega |target> = |target>.
///
/// For the two-component constructions omega = alpha * components[0] +
/// (1 - alpha) * components[1]; single-component strategies report
/// alpha = 1. `orthogonal_basis` completes the target to an orthonormal
/// basis and is the set the basis-wise beta maximizes over.
struct Strategy {
  StrategyKind kind = StrategyKind::kSeparable;
  ComplexMatrix omega;
  double alpha = 1.0;
  std::vector<NamedOperator> components;
  SchmidtState target;
  std::optional<double> theta3;
  std::vector<ComplexVector> orthogonal_basis;
};

struct StrategyReport {
  double beta_basis = 0.0;
  double beta_spectral = 0.0;
  std::uint64_t n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Acceptance of a fixed state as an affine function of the mixing weight:
/// intercept + slope * alpha.
struct AffineAcceptance {
  double intercept = 0.0;
  double slope = 0.0;
  double at(double alpha) const { return intercept + slope * alpha; }
};

/// argmin over alpha in [0, 1] of max_i lines[i].at(alpha). Evaluated exactly
/// over the candidates {0, 1} and every pairwise intersection in [0, 1];
/// ties go to the smallest alpha.
double minimax_alpha(std::span<const AffineAcceptance> lines);

Strategy strategy_separable(const SchmidtState& psi);
Strategy strategy_bell_2qubit();
Strategy strategy_bell_general(int d);

// Throws SingularAngle where sin or cos tau vanishes.
Strategy strategy_two_qubit(double tau);

struct Theta3Policy {
  std::optional<double> fixed;  // empty: optimize

  static Theta3Policy Fixed(double theta3) { return {theta3}; }
  static Theta3Policy Optimize() { return {}; }
};

Strategy strategy_two_qutrit(double tau, Theta3Policy policy);

struct Theta3Optimum {
  double theta3 = 0.0;
  Strategy strategy;
};

/// Minimizes beta_spectral over theta3 in [0, 2 pi): 181-point grid, then
/// golden-section refinement to 1e-6 inside the bracketing grid cells.
Theta3Optimum optimize_theta3(double tau);

inline constexpr int kDefaultMaxQuditDimension = 6;

/// General-d construction for a target in Schmidt form. For d = 3 this
/// agrees with strategy_two_qutrit(tau, Fixed(0)).
Strategy strategy_qudit_general(const SchmidtState& psi,
                                int max_dimension = kDefaultMaxQuditDimension);

/// ceil(ln(1/delta) / ln(1 / (1 - eps (1 - beta)))).
std::uint64_t n_measurements(double beta, double epsilon, double delta);

// Largest <b|omega|b> over the strategy's orthogonal basis.
double beta_basis(const Strategy& strategy);

// Largest eigenvalue of omega restricted to the complement of the target.
double beta_spectral(const Strategy& strategy);

// Eigenvector achieving beta_spectral (orthogonal to the target).
ComplexVector worst_orthogonal_state(const Strategy& strategy);

StrategyReport report(const Strategy& strategy, double epsilon, double delta);

// Tr[omega rho], clamped to [0, 1].
double accept_probability(const Strategy& strategy, const ComplexMatrix& rho);

/// Number of accepted rounds among n independent tests of `rho`, each
/// accepting with probability accept_probability(strategy, rho).
std::uint64_t verify_simulate(const Strategy& strategy, const ComplexMatrix& rho,
                              std::uint64_t n, std::uint64_t seed);

}  // namespace qsv

#endif  // QSV_VERIFICATION_HPP_
