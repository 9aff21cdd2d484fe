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

#include "qsv/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsv/constants.hpp"
#include "qsv/error.hpp"

namespace qsv {
namespace {

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -tol::kRadicand) {
    throw Error(ErrorKind::kNumericalDomain,
                std::string(what) + " radicand " + std::to_string(radicand) +
                    " is negative");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

double checked_acos(double x) {
  if (x > 1.0 + tol::kRadicand || x < -1.0 - tol::kRadicand) {
    throw Error(ErrorKind::kNumericalDomain,
                "arccos argument " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

ComplexVector basis_ket(int i, int j, int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  v(i * d + j) = 1.0;
  return v;
}

// Unit vector psi_m in R^d built from angles t_1..t_{m-1}; psi_1 = e_0.
std::vector<double> hyperspherical_prefix(std::span<const double> angles,
                                          int m, int d) {
  std::vector<double> v(d, 0.0);
  v[0] = 1.0;
  if (m >= 2) {
    v[0] = std::cos(angles[0]);
    v[1] = std::sin(angles[0]);
  }
  for (int level = 2; level < m; ++level) {
    const double t = angles[level - 1];
    for (int i = 0; i < level; ++i) v[i] *= std::sin(t);
    v[level] = std::cos(t);
  }
  return v;
}

}  // namespace

int SchmidtState::schmidt_rank() const {
  return static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(), [](double c) {
    return c > tol::kSchmidtRank;
  }));
}

std::vector<double> SchmidtState::amplitudes() const {
  std::vector<double> out(d, 0.0);
  for (int i = 0; i < d; ++i) out[i] = vector(i * d + i).real();
  return out;
}

ComplexVector diagonal_state(std::span<const double> amplitudes, int d) {
  if (static_cast<int>(amplitudes.size()) > d) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(amplitudes.size()) +
                    " Schmidt coefficients exceed dimension " +
                    std::to_string(d));
  }
  ComplexVector v = ComplexVector::Zero(d * d);
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    v(static_cast<Eigen::Index>(i) * d + static_cast<Eigen::Index>(i)) = amplitudes[i];
  }
  return v;
}

SchmidtState two_qubit_target(double tau) {
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  const std::array<double, 2> amps{c, s};
  return {2, {std::abs(c), std::abs(s)}, diagonal_state(amps, 2)};
}

double squeezing_gamma(double tau) {
  const double c = std::cos(tau);
  return (2.0 * c + 2.0) * std::sqrt(c * c - 2.0 * c + 5.0);
}

SchmidtState two_qutrit_target(double tau) {
  const double c = std::cos(tau);
  const double plus = checked_sqrt(2.0 * c * c + 6.0 + squeezing_gamma(tau),
                                   "two-qutrit |00>");
  // (2c^2 + 6)^2 - gamma^2 = 16 (1 - c)^2, so the |22> radicand
  // 2c^2 + 6 - gamma equals 16 (1 - c)^2 / (2c^2 + 6 + gamma).
  const double half = std::sin(0.5 * tau);
  const double c22 = plus > 0.0 ? 2.0 * half * half / plus : 0.0;
  const std::vector<double> coeffs{0.25 * plus, 0.5 * std::abs(std::sin(tau)),
                                   c22};
  return {3, coeffs, diagonal_state(coeffs, 3)};
}

QutritAngles theta_params(double tau) {
  const auto target = two_qutrit_target(tau);
  const auto& c = target.coeffs;
  return {std::atan2(c[1], c[0]), checked_acos(c[2]), 0.0};
}

ComplexVector qutrit_state_from_angles(double theta1, double theta2) {
  const std::array<double, 3> amps{std::sin(theta2) * std::cos(theta1),
                                   std::sin(theta2) * std::sin(theta1),
                                   std::cos(theta2)};
  return diagonal_state(amps, 3);
}

SchmidtState general_schmidt(std::span<const double> coeffs, int d) {
  if (d < 2) {
    throw Error(ErrorKind::kInvalidParameter, "dimension must be >= 2");
  }
  if (coeffs.empty() || static_cast<int>(coeffs.size()) > d) {
    throw Error(ErrorKind::kDimensionMismatch,
                "expected between 1 and " + std::to_string(d) +
                    " Schmidt coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  double norm2 = 0.0;
  for (double c : coeffs) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw Error(ErrorKind::kNotNormalized,
                "sum of squared Schmidt coefficients is " +
                    std::to_string(norm2));
  }
  const double norm = std::sqrt(norm2);
  std::vector<double> amps(coeffs.begin(), coeffs.end());
  for (double& a : amps) a /= norm;
  std::vector<double> abs_coeffs(amps.size());
  std::transform(amps.begin(), amps.end(), abs_coeffs.begin(),
                 [](double a) { return std::abs(a); });
  return {d, abs_coeffs, diagonal_state(amps, d)};
}

SchmidtState max_entangled(int d) {
  if (d < 2) {
    throw Error(ErrorKind::kInvalidParameter, "dimension must be >= 2");
  }
  const std::vector<double> coeffs(d, 1.0 / std::sqrt(static_cast<double>(d)));
  return {d, coeffs, diagonal_state(coeffs, d)};
}

std::array<ComplexVector, 8> qutrit_orthobasis(const QutritAngles& angles) {
  const double s1 = std::sin(angles.theta1), c1 = std::cos(angles.theta1);
  const double s2 = std::sin(angles.theta2), c2 = std::cos(angles.theta2);
  const double s3 = std::sin(angles.theta3), c3 = std::cos(angles.theta3);
  const std::array<double, 3> perp1{c1 * c2 * c3 - s1 * s3,
                                    s1 * c2 * c3 + c1 * s3, -s2 * c3};
  const std::array<double, 3> perp2{c1 * c2 * s3 + s1 * c3,
                                    s1 * c2 * s3 - c1 * c3, -s2 * s3};
  return {diagonal_state(perp1, 3), diagonal_state(perp2, 3),
          basis_ket(0, 1, 3),       basis_ket(0, 2, 3),
          basis_ket(1, 0, 3),       basis_ket(1, 2, 3),
          basis_ket(2, 0, 3),       basis_ket(2, 1, 3)};
}

std::array<ComplexVector, 4> qutrit_separable_states(const QutritAngles& angles,
                                                     const PhasePair& phases) {
  const auto basis = qutrit_orthobasis(angles);
  const std::array<Complex, 3> plus{1.0, std::polar(1.0, phases.phi1),
                                    std::polar(1.0, phases.phi2)};
  std::array<ComplexVector, 4> out;
  for (int which = 0; which < 2; ++which) {
    const ComplexVector& perp = basis[which];
    ComplexVector rho(3), sigma(3);
    for (int k = 0; k < 3; ++k) {
      // Principal branch: sqrt(-x) = i sqrt(x), so sqrt(a)^2 = a.
      const Complex root = std::sqrt(Complex(perp(k * 3 + k).real(), 0.0));
      rho(k) = plus[k] * root;
      sigma(k) = std::conj(plus[k]) * root;
    }
    const double norm = rho.norm();
    if (norm < 1e-12) {
      throw Error(ErrorKind::kDegenerateState,
                  "separable qutrit state has vanishing normalization");
    }
    out[2 * which] = rho / norm;
    out[2 * which + 1] = sigma / norm;
  }
  return out;
}

ComplexVector two_qubit_orth_state(double tau, int j) {
  if (j < 1 || j > 3) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "phase index " + std::to_string(j) + " outside [1, 3]");
  }
  const double s = std::sin(tau);
  const double c = std::cos(tau);
  if (std::abs(s) < 1e-12 || std::abs(c) < 1e-12) {
    throw Error(ErrorKind::kSingularAngle,
                "tau = " + std::to_string(tau) +
                    " has a vanishing sin or cos; use a special-case strategy");
  }
  const double phi = 2.0 * std::numbers::pi * j / 3.0;
  const double norm = std::sqrt(std::abs(s) + std::abs(c));
  const Complex root_s = std::sqrt(Complex(s, 0.0));
  const Complex root_c = std::sqrt(Complex(c, 0.0));
  ComplexVector first(2), second(2);
  first << root_s / norm, std::polar(1.0, phi) * root_c / norm;
  second << root_s / norm,
      std::polar(1.0, std::numbers::pi - phi) * root_c / norm;
  return kron(first, second);
}

std::vector<double> hyperspherical_angles(std::span<const double> amplitudes) {
  const int d = static_cast<int>(amplitudes.size());
  if (d < 2) {
    throw Error(ErrorKind::kInvalidParameter,
                "hyperspherical angles need at least two amplitudes");
  }
  std::vector<double> angles(d - 1, 0.0);
  double norm2 = 0.0;
  for (double a : amplitudes) norm2 += a * a;
  for (int m = d - 1; m >= 2; --m) {
    const double norm = std::sqrt(norm2);
    angles[m - 1] = norm > 1e-300 ? checked_acos(amplitudes[m] / norm) : 0.0;
    norm2 = std::max(norm2 - amplitudes[m] * amplitudes[m], 0.0);
  }
  angles[0] = std::atan2(amplitudes[1], amplitudes[0]);
  return angles;
}

std::vector<std::vector<double>> schmidt_orthogonal_frame(
    std::span<const double> amplitudes) {
  const int d = static_cast<int>(amplitudes.size());
  const auto angles = hyperspherical_angles(amplitudes);
  std::vector<std::vector<double>> frame;
  frame.reserve(d - 1);
  for (int m = d - 1; m >= 2; --m) {
    const double t = angles[m - 1];
    auto u = hyperspherical_prefix(angles, m, d);
    for (double& x : u) x *= std::cos(t);
    u[m] = -std::sin(t);
    frame.push_back(std::move(u));
  }
  std::vector<double> u1(d, 0.0);
  u1[0] = std::sin(angles[0]);
  u1[1] = -std::cos(angles[0]);
  frame.push_back(std::move(u1));
  return frame;
}

ComplexMatrix depolarize(const ComplexMatrix& rho, double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::kInvalidParameter,
                "depolarizing probability " + std::to_string(p) +
                    " outside [0, 1]");
  }
  const auto dim = rho.rows();
  return (1.0 - p) * rho +
         (p / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
}

ComplexVector mix_orthogonal(const SchmidtState& psi,
                             const ComplexVector& psi_perp, double eps) {
  if (eps < 0.0 || eps > 1.0) {
    throw Error(ErrorKind::kInvalidParameter,
                "mixing weight " + std::to_string(eps) + " outside [0, 1]");
  }
  if (psi_perp.size() != psi.vector.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "orthogonal state has the wrong dimension");
  }
  if (std::abs(psi.vector.dot(psi_perp)) > tol::kOrthogonal) {
    throw Error(ErrorKind::kNotOrthogonal,
                "state is not orthogonal to the target");
  }
  ComplexVector out =
      std::sqrt(1.0 - eps) * psi.vector + std::sqrt(eps) * psi_perp;
  return out / out.norm();
}

}  // namespace qsv
