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

#ifndef QSV_BASES_HPP_
#define QSV_BASES_HPP_

#include <string>
#include <variant>
#include <vector>

#include "qsv/linalg.hpp"

namespace qsv {

enum class BasisKind { kSud, kWeyl };

std::string to_string(BasisKind kind);
BasisKind basis_from_string(const std::string& name);

/// Generalized Gell-Mann index: k = 0 is the identity, 1..d^2-1 the
/// traceless generators in canonical order (see sud_generator).
struct SudLabel {
  int d = 2;
  int k = 0;
  friend bool operator==(const SudLabel&, const SudLabel&) = default;
};

/// Weyl displacement label (p, q), 0 <= p, q < d.
struct WeylLabel {
  int d = 3;
  int p = 0;
  int q = 0;
  friend bool operator==(const WeylLabel&, const WeylLabel&) = default;
};

/// Two-site operator label. Both sites share a basis kind; the per-site
/// dimensions may differ for the SU(d) basis.
class ObservablePair {
 public:
  static ObservablePair sud(int d1, int k1, int d2, int k2);
  static ObservablePair weyl(int d, int p1, int q1, int p2, int q2);

  BasisKind kind() const;
  const SudLabel& sud_first() const { return std::get<SudLabel>(first_); }
  const SudLabel& sud_second() const { return std::get<SudLabel>(second_); }
  const WeylLabel& weyl_first() const { return std::get<WeylLabel>(first_); }
  const WeylLabel& weyl_second() const { return std::get<WeylLabel>(second_); }

  // "k_k'" for SU(d), "p.q_p'.q'" for Weyl. Used for CSV column names.
  std::string name() const;

  friend bool operator==(const ObservablePair&,
                         const ObservablePair&) = default;

 private:
  using Site = std::variant<SudLabel, WeylLabel>;
  ObservablePair(Site first, Site second) : first_(first), second_(second) {}
  Site first_;
  Site second_;
};

/// Nonzero entries of a d x d operator; every basis element here has at
/// most d of them.
struct SparseEntry {
  int row;
  int col;
  Complex value;
};
using SparseOperator = std::vector<SparseEntry>;

ComplexMatrix to_dense(const SparseOperator& op, int d);

// Identity and the Pauli matrices x, y, z for i = 0..3.
ComplexMatrix pauli(int i);

// The SU(3) Gell-Mann matrices, k = 0 giving the identity.
ComplexMatrix gellmann3(int k);

/// Generalized Gell-Mann generator lambda_k for SU(d).
///
/// Ordering: for n = 2..d, for each j < n-1 emit the symmetric generator
/// |j><n-1| + |n-1><j| followed by the antisymmetric one
/// -i|j><n-1| + i|n-1><j|, then the diagonal generator
/// sqrt(2/(n(n-1))) sum_{i<n-1} |i><i| - sqrt(2(n-1)/n) |n-1><n-1|.
/// The diagonal generator for a given n lands at index n^2-1, and d = 3
/// reproduces the standard Gell-Mann numbering.
ComplexMatrix sud_generator(int d, int k);
SparseOperator sud_generator_sparse(int d, int k);

/// True when lambda_k is one of the diagonal generators; `n` receives its
/// level count (lambda_{n^2-1}).
bool sud_is_diagonal(int k, int* n = nullptr);

// d x d matrix with Pauli sigma_i in the top-left block, i in {1, 2, 3}.
ComplexMatrix embedded_lambda(int d, int i);

// Clock: diag(omega^k), omega = exp(2 pi i / d).
ComplexMatrix weyl_Z(int d);
// Shift: |k> -> |k + 1 mod d>.
ComplexMatrix weyl_X(int d);

/// D(p, q) = exp(-i pi p q / d) Z^p X^q. Odd d only.
ComplexMatrix weyl_D(int d, int p, int q);
SparseOperator weyl_D_sparse(int d, int p, int q);

/// Per-site normalizer sqrt(Tr[A^dagger A]): sqrt(d) for the identity and
/// sqrt(2) for the SU(d) generators; sqrt(d) for every Weyl operator.
double site_normalizer(BasisKind kind, int d, int index);

// Product of the two site normalizers of `pair`.
double pair_normalizer(const ObservablePair& pair);

// Dense matrix of the two-site operator (A (x) B) named by `pair`.
ComplexMatrix pair_operator(const ObservablePair& pair);

}  // namespace qsv

#endif  // QSV_BASES_HPP_
