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

#ifndef QSV_LINALG_HPP_
#define QSV_LINALG_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Spectrum of a Hermitian matrix. Eigenvalues ascend; eigenvectors are the
/// orthonormal columns of `eigenvectors`, in the same order. Vectors inside a
/// degenerate cluster are an arbitrary orthonormal basis of that cluster, so
/// callers needing basis-independent results should use `clusters()`.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  struct Cluster {
    double eigenvalue;  // mean of the clustered eigenvalues
    ComplexMatrix projector;
  };
  std::vector<Cluster> clusters(double gap) const;
  ComplexMatrix reconstruct() const;
};

/// Local dimensions of a bipartite space.
struct Dims {
  int first;
  int second;
  int total() const { return first * second; }
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix projector(const ComplexVector& v);
ComplexMatrix identity(int dim);

bool is_hermitian(const ComplexMatrix& m, double tol);

// Throws NotHermitian unless `m` is Hermitian within tol::kHermitian.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Transposes the given tensor factor (0 or 1) of a d1*d2 square matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims,
                                int subsystem);

// Validates that `rho` is a density matrix of dimension `dim` (square,
// Hermitian, unit trace). Throws InvalidDensityMatrix or DimensionMismatch.
void require_density_matrix(const ComplexMatrix& rho, int dim);

/// Sum of |negative eigenvalues| of the partial transpose on the second
/// factor.
double negativity(const ComplexMatrix& rho, Dims dims);

}  // namespace qsv

#endif  // QSV_LINALG_HPP_
