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

#include "qsv/bases.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsv/error.hpp"

namespace qsv {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_dimension(int d) {
  if (d < 2) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "dimension must be >= 2, got " + std::to_string(d));
  }
}

void require_sud_index(int d, int k) {
  require_dimension(d);
  if (k < 0 || k > d * d - 1) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "SU(" + std::to_string(d) + ") index " + std::to_string(k) +
                    " outside [0, " + std::to_string(d * d - 1) + "]");
  }
}

void require_weyl(int d, int p, int q) {
  require_dimension(d);
  if (d % 2 == 0) {
    throw Error(ErrorKind::kEvenDimension,
                "Weyl basis requires odd d, got " + std::to_string(d));
  }
  if (p < 0 || p >= d || q < 0 || q >= d) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "Weyl label (" + std::to_string(p) + ", " + std::to_string(q) +
                    ") outside [0, " + std::to_string(d) + ")");
  }
}

Complex root_of_unity(int d, long long power) {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(power % d) / d;
  return std::polar(1.0, angle);
}

// Generators of block m (levels 0..m) occupy indices [m^2, m^2 + 2m].
int generator_block(int k) {
  int m = static_cast<int>(std::sqrt(static_cast<double>(k)));
  while (m * m > k) --m;
  while ((m + 1) * (m + 1) <= k) ++m;
  return m;
}

}  // namespace

std::string to_string(BasisKind kind) {
  return kind == BasisKind::kSud ? "sud" : "weyl";
}

BasisKind basis_from_string(const std::string& name) {
  if (name == "sud") return BasisKind::kSud;
  if (name == "weyl") return BasisKind::kWeyl;
  throw Error(ErrorKind::kInvalidParameter, "unknown basis '" + name + "'");
}

ObservablePair ObservablePair::sud(int d1, int k1, int d2, int k2) {
  require_sud_index(d1, k1);
  require_sud_index(d2, k2);
  return ObservablePair(SudLabel{d1, k1}, SudLabel{d2, k2});
}

ObservablePair ObservablePair::weyl(int d, int p1, int q1, int p2, int q2) {
  require_weyl(d, p1, q1);
  require_weyl(d, p2, q2);
  return ObservablePair(WeylLabel{d, p1, q1}, WeylLabel{d, p2, q2});
}

BasisKind ObservablePair::kind() const {
  return std::holds_alternative<SudLabel>(first_) ? BasisKind::kSud
                                                  : BasisKind::kWeyl;
}

std::string ObservablePair::name() const {
  if (kind() == BasisKind::kSud) {
    return std::to_string(sud_first().k) + "_" + std::to_string(sud_second().k);
  }
  const auto& a = weyl_first();
  const auto& b = weyl_second();
  return std::to_string(a.p) + "." + std::to_string(a.q) + "_" +
         std::to_string(b.p) + "." + std::to_string(b.q);
}

ComplexMatrix to_dense(const SparseOperator& op, int d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& e : op) out(e.row, e.col) += e.value;
  return out;
}

ComplexMatrix pauli(int i) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (i) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default:
      throw Error(ErrorKind::kIndexOutOfRange,
                  "Pauli index " + std::to_string(i) + " outside [0, 3]");
  }
  return m;
}

ComplexMatrix gellmann3(int k) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  switch (k) {
    case 0: m = ComplexMatrix::Identity(3, 3); break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = 1.0; m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 6: m(1, 2) = 1.0; m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s; m(1, 1) = s; m(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw Error(ErrorKind::kIndexOutOfRange,
                  "Gell-Mann index " + std::to_string(k) + " outside [0, 8]");
  }
  return m;
}

bool sud_is_diagonal(int k, int* n) {
  if (k <= 0) return false;
  const int m = generator_block(k);
  if (k - m * m == 2 * m) {
    if (n != nullptr) *n = m + 1;
    return true;
  }
  return false;
}

SparseOperator sud_generator_sparse(int d, int k) {
  require_sud_index(d, k);
  SparseOperator op;
  if (k == 0) {
    for (int i = 0; i < d; ++i) op.push_back({i, i, 1.0});
    return op;
  }
  const int m = generator_block(k);
  const int r = k - m * m;
  if (r == 2 * m) {
    const int n = m + 1;
    const double upper = std::sqrt(2.0 / (n * (n - 1.0)));
    const double lower = -std::sqrt(2.0 * (n - 1.0) / n);
    for (int i = 0; i < n - 1; ++i) op.push_back({i, i, upper});
    op.push_back({n - 1, n - 1, lower});
    return op;
  }
  const int lo = r / 2;
  const int hi = m;
  if (r % 2 == 0) {
    op.push_back({lo, hi, 1.0});
    op.push_back({hi, lo, 1.0});
  } else {
    op.push_back({lo, hi, -kI});
    op.push_back({hi, lo, kI});
  }
  return op;
}

ComplexMatrix sud_generator(int d, int k) {
  return to_dense(sud_generator_sparse(d, k), d);
}

ComplexMatrix embedded_lambda(int d, int i) {
  require_dimension(d);
  if (i < 1 || i > 3) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "embedded lambda index " + std::to_string(i) +
                    " outside [1, 3]");
  }
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m.topLeftCorner(2, 2) = pauli(i);
  return m;
}

ComplexMatrix weyl_Z(int d) {
  require_dimension(d);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m(k, k) = root_of_unity(d, k);
  return m;
}

ComplexMatrix weyl_X(int d) {
  require_dimension(d);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m((k + 1) % d, k) = 1.0;
  return m;
}

SparseOperator weyl_D_sparse(int d, int p, int q) {
  require_weyl(d, p, q);
  // Z^p X^q |k> = omega^{p (k + q)} |k + q>.
  const Complex phase =
      std::polar(1.0, -std::numbers::pi * static_cast<double>(p * q) / d);
  SparseOperator op;
  op.reserve(d);
  for (int k = 0; k < d; ++k) {
    const int row = (k + q) % d;
    op.push_back({row, k, phase * root_of_unity(d, static_cast<long long>(p) * row)});
  }
  return op;
}

ComplexMatrix weyl_D(int d, int p, int q) {
  return to_dense(weyl_D_sparse(d, p, q), d);
}

double site_normalizer(BasisKind kind, int d, int index) {
  if (kind == BasisKind::kWeyl || index == 0) return std::sqrt(static_cast<double>(d));
  return std::sqrt(2.0);
}

double pair_normalizer(const ObservablePair& pair) {
  if (pair.kind() == BasisKind::kSud) {
    const auto& a = pair.sud_first();
    const auto& b = pair.sud_second();
    return site_normalizer(BasisKind::kSud, a.d, a.k) *
           site_normalizer(BasisKind::kSud, b.d, b.k);
  }
  return static_cast<double>(pair.weyl_first().d);
}

ComplexMatrix pair_operator(const ObservablePair& pair) {
  if (pair.kind() == BasisKind::kSud) {
    const auto& a = pair.sud_first();
    const auto& b = pair.sud_second();
    return kron(sud_generator(a.d, a.k), sud_generator(b.d, b.k));
  }
  const auto& a = pair.weyl_first();
  const auto& b = pair.weyl_second();
  return kron(weyl_D(a.d, a.p, a.q), weyl_D(b.d, b.p, b.q));
}

}  // namespace qsv
