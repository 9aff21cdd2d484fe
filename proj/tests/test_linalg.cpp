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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "qsv/error.hpp"
#include "qsv/linalg.hpp"
#include "qsv/random_states.hpp"

namespace qsv {
namespace {

using testing::kind_of;

TEST(Kron, IdentityAndDiagonal) {
  EXPECT_TRUE(kron(identity(2), identity(2)).isApprox(identity(4)));
  ComplexMatrix zz_expected = ComplexMatrix::Zero(4, 4);
  zz_expected.diagonal() << 1, -1, -1, 1;
  EXPECT_EQ(kron(oracle::pauli(3), oracle::pauli(3)), zz_expected);
}

TEST(Kron, BellStateIsXXEigenvector) {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexVector out = kron(oracle::pauli(1), oracle::pauli(1)) * bell;
  EXPECT_LT((out - bell).norm(), 1e-15);
}

TEST(Kron, MatchesIndexOracle) {
  Rng rng(1);
  const ComplexMatrix a = random_ginibre(2, 3, rng);
  const ComplexMatrix b = random_ginibre(3, 2, rng);
  EXPECT_LT((kron(a, b) - oracle::kron(a, b)).norm(), 1e-14);
  const ComplexVector u = random_pure_state(3, rng);
  const ComplexVector v = random_pure_state(4, rng);
  EXPECT_LT((kron(u, v) - oracle::kron(u, v)).norm(), 1e-15);
}

TEST(HermitianEig, PauliSpectra) {
  const auto z = hermitian_eig(oracle::pauli(3));
  EXPECT_NEAR(z.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(z.eigenvalues(1), 1.0, 1e-15);

  const auto x = hermitian_eig(oracle::pauli(1));
  EXPECT_NEAR(x.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(x.eigenvalues(1), 1.0, 1e-15);
  ComplexVector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  // Up to phase.
  EXPECT_NEAR(std::abs(minus.dot(x.eigenvectors.col(0))), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(plus.dot(x.eigenvectors.col(1))), 1.0, 1e-14);
}

TEST(HermitianEig, GellMannEight) {
  const auto e = hermitian_eig(oracle::gellmann(8));
  EXPECT_NEAR(e.eigenvalues(0), -2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(e.eigenvalues(1), 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(e.eigenvalues(2), 1.0 / std::sqrt(3.0), 1e-14);
}

TEST(HermitianEig, RandomReconstructionAndOrthonormality) {
  Rng rng(7);
  for (int dim : {2, 3, 4, 9, 16, 25}) {
    const ComplexMatrix m = random_hermitian(dim, rng);
    const auto e = hermitian_eig(m);
    EXPECT_LT((e.reconstruct() - m).norm(), 1e-10) << dim;
    EXPECT_LT((e.eigenvectors.adjoint() * e.eigenvectors - identity(dim)).norm(), 1e-10);
    for (int i = 1; i < dim; ++i) EXPECT_LE(e.eigenvalues(i - 1), e.eigenvalues(i));
  }
}

TEST(HermitianEig, ClustersGroupDegenerateEigenvalues) {
  const auto e = hermitian_eig(kron(oracle::pauli(3), oracle::pauli(3)));
  const auto clusters = e.clusters(1e-9);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_NEAR(clusters[0].eigenvalue, -1.0, 1e-15);
  EXPECT_NEAR(clusters[0].projector.trace().real(), 2.0, 1e-14);
  EXPECT_LT((clusters[0].projector + clusters[1].projector - identity(4)).norm(), 1e-14);
}

TEST(HermitianEig, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_EQ(kind_of([&] { hermitian_eig(m); }), ErrorKind::kNotHermitian);
}

TEST(PartialTranspose, ProductStateUnchanged) {
  const ComplexMatrix p = projector(oracle::ket2(2, 0, 0));
  EXPECT_EQ(partial_transpose(p, {2, 2}, 1), p);
  EXPECT_EQ(partial_transpose(p, {2, 2}, 0), p);
}

TEST(PartialTranspose, BellSpectrum) {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const auto e = hermitian_eig(partial_transpose(projector(bell), {2, 2}, 1));
  EXPECT_NEAR(e.eigenvalues(0), -0.5, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(e.eigenvalues(i), 0.5, 1e-14);
}

TEST(PartialTranspose, InvolutionTraceHermiticityAndOracle) {
  Rng rng(11);
  for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    const ComplexMatrix m = random_hermitian(d1 * d2, rng);
    const ComplexMatrix pt = partial_transpose(m, {d1, d2}, 1);
    EXPECT_EQ(partial_transpose(pt, {d1, d2}, 1), m);
    EXPECT_LT((pt - oracle::partial_transpose_second(m, d1, d2)).norm(), 1e-15);
    EXPECT_NEAR(std::abs(pt.trace() - m.trace()), 0.0, 1e-12);
    EXPECT_TRUE(is_hermitian(pt, 1e-12));
    const ComplexMatrix pt0 = partial_transpose(m, {d1, d2}, 0);
    // Transposing both factors is the full transpose.
    EXPECT_LT((partial_transpose(pt0, {d1, d2}, 1) - m.transpose()).norm(), 1e-15);
  }
}

TEST(PartialTranspose, Errors) {
  EXPECT_EQ(kind_of([] { partial_transpose(identity(5), {2, 2}, 1); }),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(kind_of([] { partial_transpose(identity(4), {2, 2}, 2); }),
            ErrorKind::kIndexOutOfRange);
}

TEST(Negativity, Landmarks) {
  EXPECT_NEAR(negativity(projector(oracle::ket2(2, 0, 0)), {2, 2}), 0.0, 1e-15);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(negativity(projector(bell), {2, 2}), 0.5, 1e-14);
  const ComplexVector v = (oracle::ket2(3, 0, 0) + oracle::ket2(3, 2, 2)) / std::sqrt(2.0);
  EXPECT_NEAR(negativity(projector(v), {3, 3}), 0.5, 1e-14);
  EXPECT_NEAR(oracle::negativity(projector(v), 3, 3), 0.5, 1e-12);
}

TEST(Negativity, ProductStatesVanish) {
  Rng rng(3);
  for (int d : {2, 3, 4}) {
    for (int i = 0; i < 50; ++i) {
      const ComplexVector psi = kron(random_pure_state(d, rng), random_pure_state(d, rng));
      EXPECT_NEAR(negativity(projector(psi), {d, d}), 0.0, 1e-12);
    }
  }
}

TEST(Negativity, LocalUnitaryInvarianceAndOracle) {
  Rng rng(5);
  for (int d : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      const ComplexMatrix rho = random_density_matrix(d * d, 1 + i % (d * d), rng);
      const ComplexMatrix u = kron(random_unitary(d, rng), random_unitary(d, rng));
      const double n = negativity(rho, {d, d});
      EXPECT_NEAR(negativity(u * rho * u.adjoint(), {d, d}), n, 1e-10);
      EXPECT_NEAR(oracle::negativity(rho, d, d), n, 1e-10);
    }
  }
}

TEST(Negativity, RejectsInvalidStates) {
  EXPECT_EQ(kind_of([] { negativity(identity(4), {2, 2}); }),
            ErrorKind::kInvalidDensityMatrix);
  ComplexMatrix m = identity(4) / 4.0;
  m(0, 1) = 0.3;
  EXPECT_EQ(kind_of([&] { negativity(m, {2, 2}); }), ErrorKind::kInvalidDensityMatrix);
  EXPECT_EQ(kind_of([] { negativity(identity(4) / 4.0, {3, 3}); }),
            ErrorKind::kDimensionMismatch);
}

TEST(Errors, MessageCarriesKind) {
  const Error e(ErrorKind::kSingularAngle, "tau = 0");
  EXPECT_EQ(e.kind(), ErrorKind::kSingularAngle);
  EXPECT_NE(std::string(e.what()).find("tau = 0"), std::string::npos);
  EXPECT_EQ(to_string(ErrorKind::kNotHermitian), "NotHermitian");
}

}  // namespace
}  // namespace qsv
