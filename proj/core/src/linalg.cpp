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

#include "qsv/linalg.hpp"

#include <cmath>
#include <string>

#include "qsv/constants.hpp"
#include "qsv/error.hpp"

namespace qsv {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!is_hermitian(m, tol::kHermitian)) {
    throw Error(ErrorKind::kNotHermitian,
                "matrix of size " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<EigenDecomposition::Cluster> EigenDecomposition::clusters(
    double gap) const {
  std::vector<Cluster> out;
  const Eigen::Index n = eigenvalues.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && eigenvalues(stop) - eigenvalues(stop - 1) < gap) ++stop;
    const auto block = eigenvectors.middleCols(start, stop - start);
    out.push_back({eigenvalues.segment(start, stop - start).mean(),
                   block * block.adjoint()});
    start = stop;
  }
  return out;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims,
                                int subsystem) {
  const int n = dims.total();
  if (dims.first < 1 || dims.second < 1 || rho.rows() != n ||
      rho.cols() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "partial_transpose expects a " + std::to_string(n) + "x" +
                    std::to_string(n) + " matrix");
  }
  if (subsystem != 0 && subsystem != 1) {
    throw Error(ErrorKind::kIndexOutOfRange, "subsystem must be 0 or 1");
  }
  ComplexMatrix out(n, n);
  const int d2 = dims.second;
  for (int i1 = 0; i1 < dims.first; ++i1) {
    for (int i2 = 0; i2 < d2; ++i2) {
      for (int j1 = 0; j1 < dims.first; ++j1) {
        for (int j2 = 0; j2 < d2; ++j2) {
          const Complex v = rho(i1 * d2 + i2, j1 * d2 + j2);
          if (subsystem == 0) {
            out(j1 * d2 + i2, i1 * d2 + j2) = v;
          } else {
            out(i1 * d2 + j2, j1 * d2 + i2) = v;
          }
        }
      }
    }
  }
  return out;
}

void require_density_matrix(const ComplexMatrix& rho, int dim) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                "expected a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " density matrix, got " +
                    std::to_string(rho.rows()) + "x" +
                    std::to_string(rho.cols()));
  }
  if (!is_hermitian(rho, tol::kHermitian)) {
    throw Error(ErrorKind::kInvalidDensityMatrix, "matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tol::kTrace) {
    throw Error(ErrorKind::kInvalidDensityMatrix, "trace is not 1");
  }
}

double negativity(const ComplexMatrix& rho, Dims dims) {
  require_density_matrix(rho, dims.total());
  const auto spectrum = hermitian_eig(partial_transpose(rho, dims, 1));
  double sum = 0.0;
  for (double e : spectrum.eigenvalues) {
    if (e < 0.0) sum -= e;
  }
  return sum;
}

}  // namespace qsv
