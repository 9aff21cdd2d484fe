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

#include "qsv/error.hpp"

namespace qsv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kEvenDimension: return "EvenDimension";
    case ErrorKind::kNumericalDomain: return "NumericalDomain";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kDegenerateState: return "DegenerateState";
    case ErrorKind::kSingularAngle: return "SingularAngle";
    case ErrorKind::kNotOrthogonal: return "NotOrthogonal";
    case ErrorKind::kNotSeparable: return "NotSeparable";
    case ErrorKind::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::kUnsupportedBasis: return "UnsupportedBasis";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kIncompleteFunction: return "IncompleteFunction";
    case ErrorKind::kBasisMismatch: return "BasisMismatch";
    case ErrorKind::kImpureTarget: return "ImpureTarget";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace qsv
