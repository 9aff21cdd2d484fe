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

#ifndef QSV_STATES_HPP_
#define QSV_STATES_HPP_

#include <array>
#include <span>
#include <vector>

#include "qsv/linalg.hpp"

namespace qsv {

/// Bipartite pure state in Schmidt form, sum_i a_i |ii>.
///
/// `coeffs` holds the Schmidt coefficients |a_i| (non-negative, unit 2-norm).
/// `vector` holds the d^2 amplitudes and may carry the signs of the a_i, which
/// are local phases; e.g. cos(tau)|00> + sin(tau)|11> for any tau.
struct SchmidtState {
  int d = 2;
  std::vector<double> coeffs;
  ComplexVector vector;

  int schmidt_rank() const;
  // Signed real amplitudes <ii|vector>, zero-padded to length d.
  std::vector<double> amplitudes() const;
};

/// Hyperspherical angles of the two-qutrit target
/// sin(t2)cos(t1)|00> + sin(t2)sin(t1)|11> + cos(t2)|22>, plus the free
/// rotation angle t3 of the two orthogonal states in the Schmidt span.
struct QutritAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

// Phases on |1> and |2> of the separable qutrit states.
struct PhasePair {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

// Sum_i a_i |ii> in C^d (x) C^d.
ComplexVector diagonal_state(std::span<const double> amplitudes, int d);

// cos(tau)|00> + sin(tau)|11>; coeffs are (|cos tau|, |sin tau|).
SchmidtState two_qubit_target(double tau);

/// (2 cos tau + 2) sqrt(cos^2 tau - 2 cos tau + 5).
double squeezing_gamma(double tau);

/// Two-qutrit squeezing target in Schmidt form:
/// 1/4 sqrt(2cos^2 + 6 + gamma)|00> + 1/2|sin tau||11>
///   + 1/4 sqrt(2cos^2 + 6 - gamma)|22>.
SchmidtState two_qutrit_target(double tau);

/// Angles (theta1, theta2) whose hyperspherical state equals
/// two_qutrit_target(tau). theta3 is left at zero.
QutritAngles theta_params(double tau);

ComplexVector qutrit_state_from_angles(double theta1, double theta2);

// Requires sum c_i^2 = 1 within 1e-9 and at most d entries. The result is
// renormalized to unit norm.
SchmidtState general_schmidt(std::span<const double> coeffs, int d);

SchmidtState max_entangled(int d);

/// Psi_perp_1(theta), Psi_perp_2(theta), then |01>, |02>, |10>, |12>, |20>,
/// |21>. Together with qutrit_state_from_angles(theta1, theta2) these form an
/// orthonormal basis of C^3 (x) C^3.
std::array<ComplexVector, 8> qutrit_orthobasis(const QutritAngles& angles);

/// rho_7, sigma_7, rho_7_perp, sigma_7_perp. Amplitudes are principal square
/// roots of the Psi_perp amplitudes with phases e^{+-i phi}, so that each
/// product rho (x) sigma has |kk> amplitudes proportional to Psi_perp.
std::array<ComplexVector, 4> qutrit_separable_states(const QutritAngles& angles,
                                                     const PhasePair& phases);

/// Product state phi_j (j = 1, 2, 3) orthogonal to cos(tau)|00> +
/// sin(tau)|11>, with first-factor phase 2 pi j / 3 and second-factor phase
/// pi - 2 pi j / 3. Throws SingularAngle where sin or cos tau vanishes.
ComplexVector two_qubit_orth_state(double tau, int j);

/// Hyperspherical angles of a real unit vector a in R^d, d >= 2:
/// a = sin(t_{d-1}) psi_{d-1} + cos(t_{d-1}) e_{d-1} recursively, with
/// psi_2 = cos(t_1) e_0 + sin(t_1) e_1. Returned as (t_1, ..., t_{d-1}).
std::vector<double> hyperspherical_angles(std::span<const double> amplitudes);

/// Orthonormal real vectors spanning the complement of `amplitudes` inside
/// R^d, ordered u_{d-1}, ..., u_1 where
/// u_m = cos(t_m) psi_m - sin(t_m) e_m and u_1 = sin(t_1) e_0 - cos(t_1) e_1.
/// For d = 3 this is Psi_perp_1, Psi_perp_2 at theta3 = 0.
std::vector<std::vector<double>> schmidt_orthogonal_frame(
    std::span<const double> amplitudes);

/// (1 - p) rho + p I / dim.
ComplexMatrix depolarize(const ComplexMatrix& rho, double p);

/// sqrt(1 - eps)|psi> + sqrt(eps)|psi_perp>, normalized.
ComplexVector mix_orthogonal(const SchmidtState& psi,
                             const ComplexVector& psi_perp, double eps);

}  // namespace qsv

#endif  // QSV_STATES_HPP_
