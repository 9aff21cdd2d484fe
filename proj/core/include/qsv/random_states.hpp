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

#ifndef QSV_RANDOM_STATES_HPP_
#define QSV_RANDOM_STATES_HPP_

#include "qsv/linalg.hpp"
#include "qsv/rng.hpp"

namespace qsv {

// Complex Ginibre matrix, i.i.d. standard normal real and imaginary parts.
ComplexMatrix random_ginibre(int rows, int cols, Rng& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(int dim, Rng& rng);

// Haar-random unit vector.
ComplexVector random_pure_state(int dim, Rng& rng);

// G G^dagger / Tr, G a dim x rank Ginibre matrix.
ComplexMatrix random_density_matrix(int dim, int rank, Rng& rng);

ComplexMatrix random_hermitian(int dim, Rng& rng);

}  // namespace qsv

#endif  // QSV_RANDOM_STATES_HPP_
