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

#ifndef QSV_CONSTANTS_HPP_
#define QSV_CONSTANTS_HPP_

namespace qsv::tol {

// Hermiticity check on inputs (elementwise).
inline constexpr double kHermitian = 1e-10;
// Unit-norm check on state vectors.
inline constexpr double kNorm = 1e-12;
// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kDegenerateGap = 1e-9;
// Trace check for density matrices.
inline constexpr double kTrace = 1e-10;
// Radicands this far below zero are clamped to zero.
inline constexpr double kRadicand = 1e-12;
// Orthogonality check for mix_orthogonal.
inline constexpr double kOrthogonal = 1e-9;
// Schmidt coefficients at or below this are outside the support.
inline constexpr double kSchmidtRank = 1e-12;
// Characteristic-function values at or below this are dropped from supports.
inline constexpr double kSupport = 1e-12;

}  // namespace qsv::tol

#endif  // QSV_CONSTANTS_HPP_
