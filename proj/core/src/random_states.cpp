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

#include "qsv/random_states.hpp"

#include <Eigen/QR>

#include "qsv/error.hpp"

namespace qsv {

ComplexMatrix random_ginibre(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::kInvalidParameter, "matrix dimensions must be positive");
  }
  ComplexMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = rng.normal();
      g(r, c) = Complex(re, rng.normal());
    }
  }
  return g;
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

ComplexVector random_pure_state(int dim, Rng& rng) {
  ComplexVector v = random_ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_density_matrix(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw Error(ErrorKind::kInvalidParameter, "rank must lie in [1, dim]");
  }
  const ComplexMatrix g = random_ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, dim, rng);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace qsv
