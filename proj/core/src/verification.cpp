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

#include "qsv/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsv/bases.hpp"
#include "qsv/constants.hpp"
#include "qsv/error.hpp"
#include "qsv/rng.hpp"

namespace qsv {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kTheta3GridPoints = 181;
constexpr double kTheta3Tolerance = 1e-6;

ComplexVector computational_ket(int index, int dim) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

// Orthonormal basis of the complement of `target`, by Gram-Schmidt over the
// computational basis.
std::vector<ComplexVector> complement_basis(const ComplexVector& target) {
  const int dim = static_cast<int>(target.size());
  std::vector<ComplexVector> basis{target.normalized()};
  for (int i = 0; i < dim && static_cast<int>(basis.size()) < dim; ++i) {
    ComplexVector v = computational_ket(i, dim);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double norm = v.norm();
    if (norm > 1e-8) basis.push_back(v / norm);
  }
  basis.erase(basis.begin());
  return basis;
}

ComplexMatrix diagonal_projector(int d) {
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) p(i * d + i, i * d + i) = 1.0;
  return p;
}

// Sum over the +-1 eigenvectors v of `generator` of |v><v| (x) |v*><v*|.
ComplexMatrix bell_projector(const ComplexMatrix& generator) {
  const auto eig = hermitian_eig(generator);
  const auto dim = generator.rows();
  ComplexMatrix out = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double e = eig.eigenvalues(i);
    if (std::abs(std::abs(e) - 1.0) > tol::kDegenerateGap) continue;
    const ComplexVector v = eig.eigenvectors.col(i);
    out += kron(projector(v), projector(v.conjugate()));
  }
  return out;
}

Strategy bell_strategy(int d, bool embedded) {
  ComplexMatrix omega = ComplexMatrix::Zero(d * d, d * d);
  std::vector<NamedOperator> components;
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix pi =
        bell_projector(embedded ? embedded_lambda(d, i) : pauli(i));
    omega += pi / 3.0;
    components.push_back({"Pi_" + std::to_string(i), pi});
  }
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<double, 2> coeffs{h, h};
  Strategy s;
  s.kind = StrategyKind::kBell;
  s.omega = std::move(omega);
  s.components = std::move(components);
  s.target = general_schmidt(coeffs, d);
  s.orthogonal_basis = complement_basis(s.target.vector);
  return s;
}

/// alpha P_Z + (1 - alpha) sub, with alpha chosen by minimax over `basis`.
Strategy mix_with_projector(StrategyKind kind, const ComplexMatrix& p_z,
                            const ComplexMatrix& sub, std::string sub_name,
                            SchmidtState target,
                            std::vector<ComplexVector> basis) {
  std::vector<AffineAcceptance> lines;
  lines.reserve(basis.size());
  for (const auto& b : basis) {
    const double at_zero = b.dot(sub * b).real();
    const double at_one = b.dot(p_z * b).real();
    lines.push_back({at_zero, at_one - at_zero});
  }
  Strategy s;
  s.kind = kind;
  s.alpha = minimax_alpha(lines);
  s.omega = s.alpha * p_z + (1.0 - s.alpha) * sub;
  s.components = {{"P_Z", p_z}, {std::move(sub_name), sub}};
  s.target = std::move(target);
  s.orthogonal_basis = std::move(basis);
  return s;
}

Strategy two_qutrit_fixed(double tau, double theta3) {
  QutritAngles angles = theta_params(tau);
  angles.theta3 = theta3;
  const auto orth = qutrit_orthobasis(angles);

  constexpr int kDim = 9;
  const std::array<double, 3> phases{0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0};
  ComplexMatrix omega7 = ComplexMatrix::Zero(kDim, kDim);
  for (double phi1 : phases) {
    for (double phi2 : phases) {
      const auto sep = qutrit_separable_states(angles, {phi1, phi2});
      const ComplexMatrix rejected = projector(kron(sep[0], sep[1])) +
                                     projector(kron(sep[2], sep[3]));
      omega7 += (identity(kDim) - rejected) / 9.0;
    }
  }
  Strategy s = mix_with_projector(
      StrategyKind::kTwoQutrit, diagonal_projector(3), omega7, "Omega_7",
      two_qutrit_target(tau),
      std::vector<ComplexVector>(orth.begin(), orth.end()));
  s.theta3 = theta3;
  return s;
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kSeparable: return "separable";
    case StrategyKind::kBell: return "bell";
    case StrategyKind::kTwoQubit: return "two_qubit";
    case StrategyKind::kTwoQutrit: return "two_qutrit";
    case StrategyKind::kQuditGeneral: return "qudit_general";
  }
  return "unknown";
}

double minimax_alpha(std::span<const AffineAcceptance> lines) {
  if (lines.empty()) return 0.0;
  std::vector<double> candidates{0.0, 1.0};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double dslope = lines[i].slope - lines[j].slope;
      if (std::abs(dslope) < 1e-15) continue;
      const double alpha = (lines[j].intercept - lines[i].intercept) / dslope;
      if (alpha > 0.0 && alpha < 1.0) candidates.push_back(alpha);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  double best_alpha = 0.0;
  double best_value = std::numeric_limits<double>::infinity();
  for (double alpha : candidates) {
    double value = -std::numeric_limits<double>::infinity();
    for (const auto& line : lines) value = std::max(value, line.at(alpha));
    if (value < best_value - 1e-15) {
      best_value = value;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

Strategy strategy_separable(const SchmidtState& psi) {
  if (psi.schmidt_rank() != 1) {
    throw Error(ErrorKind::kNotSeparable,
                "target has Schmidt rank " + std::to_string(psi.schmidt_rank()));
  }
  Strategy s;
  s.kind = StrategyKind::kSeparable;
  s.omega = projector(psi.vector);
  s.components = {{"target_projector", s.omega}};
  s.target = psi;
  s.orthogonal_basis = complement_basis(psi.vector);
  return s;
}

Strategy strategy_bell_2qubit() { return bell_strategy(2, false); }

Strategy strategy_bell_general(int d) {
  if (d < 2) {
    throw Error(ErrorKind::kInvalidParameter, "dimension must be >= 2");
  }
  return bell_strategy(d, true);
}

Strategy strategy_two_qubit(double tau) {
  // two_qubit_orth_state rejects the singular angles.
  ComplexMatrix rejected = ComplexMatrix::Zero(4, 4);
  for (int j = 1; j <= 3; ++j) {
    rejected += projector(two_qubit_orth_state(tau, j)) / 3.0;
  }
  const double s = std::sin(tau);
  const double c = std::cos(tau);
  const std::array<double, 2> perp{s, -c};
  std::vector<ComplexVector> basis{diagonal_state(perp, 2),
                                   computational_ket(1, 4),
                                   computational_ket(2, 4)};
  return mix_with_projector(StrategyKind::kTwoQubit, diagonal_projector(2),
                            identity(4) - rejected, "Omega_3",
                            two_qubit_target(tau), std::move(basis));
}

Strategy strategy_two_qutrit(double tau, Theta3Policy policy) {
  if (!policy.fixed) return optimize_theta3(tau).strategy;
  return two_qutrit_fixed(tau, *policy.fixed);
}

Theta3Optimum optimize_theta3(double tau) {
  const double step = kTwoPi / kTheta3GridPoints;
  double best_theta = 0.0;
  double best_beta = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kTheta3GridPoints; ++i) {
    const double theta = step * i;
    const double beta = beta_spectral(two_qutrit_fixed(tau, theta));
    if (beta < best_beta) {
      best_beta = beta;
      best_theta = theta;
    }
  }

  // Golden-section search on [best - step, best + step].
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - step;
  double hi = best_theta + step;
  auto objective = [tau](double t) {
    return beta_spectral(two_qutrit_fixed(tau, wrap_angle(t)));
  };
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > kTheta3Tolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double refined = wrap_angle(0.5 * (lo + hi));
  Strategy refined_strategy = two_qutrit_fixed(tau, refined);
  if (beta_spectral(refined_strategy) < best_beta - 1e-12) {
    return {refined, std::move(refined_strategy)};
  }
  return {best_theta, two_qutrit_fixed(tau, best_theta)};
}

Strategy strategy_qudit_general(const SchmidtState& psi, int max_dimension) {
  const int d = psi.d;
  if (d < 2) {
    throw Error(ErrorKind::kInvalidParameter, "dimension must be >= 2");
  }
  if (d > max_dimension) {
    throw Error(ErrorKind::kUnsupportedDimension,
                "d = " + std::to_string(d) + " exceeds the configured maximum " +
                    std::to_string(max_dimension));
  }
  const auto amplitudes = psi.amplitudes();
  const auto frame = schmidt_orthogonal_frame(amplitudes);
  const int dim = d * d;

  // Separable partners of each frame vector u: rho = sum_k e^{i phi_k}
  // sqrt(u_k)|k>, sigma = sum_k e^{-i phi_k} sqrt(u_k)|k>, phi_0 = 0.
  std::vector<ComplexVector> roots;
  for (const auto& u : frame) {
    ComplexVector r(d);
    for (int k = 0; k < d; ++k) r(k) = std::sqrt(Complex(u[k], 0.0));
    const double norm = r.norm();
    if (norm < 1e-12) {
      throw Error(ErrorKind::kDegenerateState,
                  "orthogonal state has vanishing normalization");
    }
    roots.push_back(r / norm);
  }

  // Phase tuples over the third roots of unity on levels 1..d-1.
  const std::array<Complex, 3> unity{1.0, std::polar(1.0, kTwoPi / 3.0),
                                     std::polar(1.0, 2.0 * kTwoPi / 3.0)};
  std::size_t tuples = 1;
  for (int k = 1; k < d; ++k) tuples *= 3;
  ComplexMatrix rejected = ComplexMatrix::Zero(dim, dim);
  ComplexVector phase(d);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t code = t;
    phase(0) = 1.0;
    for (int k = d - 1; k >= 1; --k) {
      phase(k) = unity[code % 3];
      code /= 3;
    }
    for (const auto& r : roots) {
      const ComplexVector rho = phase.cwiseProduct(r);
      const ComplexVector sigma = phase.conjugate().cwiseProduct(r);
      const ComplexVector product = kron(rho, sigma);
      rejected.noalias() += product * product.adjoint();
    }
  }
  const ComplexMatrix sub =
      identity(dim) - rejected / static_cast<double>(tuples);

  std::vector<ComplexVector> basis;
  for (const auto& u : frame) basis.push_back(diagonal_state(u, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) basis.push_back(computational_ket(i * d + j, dim));
    }
  }
  Strategy s = mix_with_projector(StrategyKind::kQuditGeneral,
                                  diagonal_projector(d), sub, "Omega_sub", psi,
                                  std::move(basis));
  if (d == 3) s.theta3 = 0.0;
  return s;
}

std::uint64_t n_measurements(double beta, double epsilon, double delta) {
  if (!(beta >= -1e-12 && beta < 1.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "beta = " + std::to_string(beta) + " outside [0, 1)");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "epsilon and delta must lie in (0, 1)");
  }
  const double gap = epsilon * (1.0 - std::max(beta, 0.0));
  const double n = std::log(1.0 / delta) / -std::log1p(-gap);
  if (!std::isfinite(n) || n > 9.0e18) {
    throw Error(ErrorKind::kInvalidParameter, "measurement count overflows");
  }
  return static_cast<std::uint64_t>(std::ceil(n));
}

double beta_basis(const Strategy& strategy) {
  double beta = 0.0;
  for (const auto& b : strategy.orthogonal_basis) {
    beta = std::max(beta, b.dot(strategy.omega * b).real());
  }
  return beta;
}

namespace {

// Spectrum of omega compressed to the orthogonal complement of the target,
// plus the isometry B mapping complement coordinates back to the full space.
struct ComplementSpectrum {
  EigenDecomposition eig;
  ComplexMatrix isometry;
};

ComplementSpectrum complement_spectrum(const Strategy& strategy) {
  const auto basis = complement_basis(strategy.target.vector);
  const auto dim = strategy.target.vector.size();
  ComplexMatrix b(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    b.col(static_cast<Eigen::Index>(i)) = basis[i];
  }
  ComplexMatrix compressed = b.adjoint() * strategy.omega * b;
  compressed = (compressed + compressed.adjoint()) / 2.0;
  return {hermitian_eig(compressed), std::move(b)};
}

}  // namespace

double beta_spectral(const Strategy& strategy) {
  const auto spec = complement_spectrum(strategy);
  const auto& ev = spec.eig.eigenvalues;
  return std::max(ev(ev.size() - 1), 0.0);
}

ComplexVector worst_orthogonal_state(const Strategy& strategy) {
  const auto spec = complement_spectrum(strategy);
  const auto& vecs = spec.eig.eigenvectors;
  return spec.isometry * vecs.col(vecs.cols() - 1);
}

StrategyReport report(const Strategy& strategy, double epsilon, double delta) {
  StrategyReport r;
  r.beta_basis = beta_basis(strategy);
  r.beta_spectral = beta_spectral(strategy);
  r.n = n_measurements(r.beta_spectral, epsilon, delta);
  r.epsilon = epsilon;
  r.delta = delta;
  return r;
}

double accept_probability(const Strategy& strategy, const ComplexMatrix& rho) {
  require_density_matrix(rho, static_cast<int>(strategy.omega.rows()));
  const double p = (strategy.omega * rho).trace().real();
  return std::clamp(p, 0.0, 1.0);
}

std::uint64_t verify_simulate(const Strategy& strategy, const ComplexMatrix& rho,
                              std::uint64_t n, std::uint64_t seed) {
  const double p = accept_probability(strategy, rho);
  Rng rng(seed);
  std::uint64_t passed = 0;
  for (std::uint64_t i = 0; i < n; ++i) passed += rng.bernoulli(p) ? 1 : 0;
  return passed;
}

}  // namespace qsv
