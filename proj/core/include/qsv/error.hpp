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

#ifndef QSV_ERROR_HPP_
#define QSV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsv {

enum class ErrorKind {
  kNotHermitian,
  kDimensionMismatch,
  kInvalidDensityMatrix,
  kIndexOutOfRange,
  kEvenDimension,
  kNumericalDomain,
  kNotNormalized,
  kDegenerateState,
  kSingularAngle,
  kNotOrthogonal,
  kNotSeparable,
  kUnsupportedDimension,
  kUnsupportedBasis,
  kInvalidParameter,
  kIncompleteFunction,
  kBasisMismatch,
  kImpureTarget,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; `what()` carries the kind name followed by details.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsv

#endif  // QSV_ERROR_HPP_
