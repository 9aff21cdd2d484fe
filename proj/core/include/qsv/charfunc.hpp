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

#ifndef QSV_CHARFUNC_HPP_
#define QSV_CHARFUNC_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "qsv/bases.hpp"
#include "qsv/linalg.hpp"

namespace qsv {

/// Expansion coefficients of a bipartite operator in a two-site operator
/// basis, chi(k, k') = Tr[rho A_k^dagger (x) B_k'^dagger] / (N_k N_k').
///
/// With N the Hilbert-Schmidt norm of each basis element, sum |chi|^2 equals
/// Tr[rho^2]. `labels` and `values` run in parallel; a complete function holds
/// every label exactly once, in canonical order when produced by char_sud or
/// char_weyl.
struct CharFunction {
  BasisKind basis = BasisKind::kSud;
  int d1 = 2;
  int d2 = 2;
  std::vector<ObservablePair> labels;
  std::vector<Complex> values;

  std::size_t full_size() const;
  bool complete() const;
  // Sum of |chi|^2 over the stored labels.
  double purity() const;
  std::optional<Complex> find(const ObservablePair& label) const;
};

/// Every label of the two-site basis. SU(d): first-site index major.
/// Weyl: (p1, q1, p2, q2) lexicographic.
std::vector<ObservablePair> canonical_labels(BasisKind basis, int d1, int d2);

// Position of `label` within canonical_labels.
std::size_t canonical_index(const ObservablePair& label);

/// SU(d1) x SU(d2) characteristic function. Accepts any square operator of
/// size d1*d2; values are real for Hermitian input.
CharFunction char_sud(const ComplexMatrix& rho, int d1, int d2);

/// Weyl characteristic function for two qudits of odd dimension d.
CharFunction char_weyl(const ComplexMatrix& rho, int d);

/// Inverse of char_sud / char_weyl. Throws IncompleteFunction unless every
/// label is present.
ComplexMatrix reconstruct(const CharFunction& chi);

/// Re sum chi_1 conj(chi_2) over shared labels, which is Tr[rho_1 rho_2] for
/// Hermitian operators. Throws BasisMismatch for differing bases or dims.
double fidelity_overlap(const CharFunction& a, const CharFunction& b);

struct SupportEntry {
  ObservablePair label;
  Complex chi;
  double probability;  // |chi|^2
};

/// Labels with |chi| > threshold, in stored order.
std::vector<SupportEntry> support(const CharFunction& chi,
                                  double threshold = 1e-12);

}  // namespace qsv

#endif  // QSV_CHARFUNC_HPP_
