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

#include "qsv/charfunc.hpp"

#include <string>

#include "qsv/error.hpp"

namespace qsv {
namespace {

void require_square(const ComplexMatrix& rho, int dim) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                "expected a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " operator, got " +
                    std::to_string(rho.rows()) + "x" +
                    std::to_string(rho.cols()));
  }
}

SparseOperator site_operator(const ObservablePair& label, bool first) {
  if (label.kind() == BasisKind::kSud) {
    const auto& s = first ? label.sud_first() : label.sud_second();
    return sud_generator_sparse(s.d, s.k);
  }
  const auto& w = first ? label.weyl_first() : label.weyl_second();
  return weyl_D_sparse(w.d, w.p, w.q);
}

// Tr[rho (A (x) B)^dagger] for sparse site operators.
Complex trace_against_adjoint(const ComplexMatrix& rho, const SparseOperator& a,
                              const SparseOperator& b, int d2) {
  Complex sum = 0.0;
  for (const auto& ea : a) {
    for (const auto& eb : b) {
      sum += std::conj(ea.value * eb.value) *
             rho(ea.row * d2 + eb.row, ea.col * d2 + eb.col);
    }
  }
  return sum;
}

CharFunction compute(const ComplexMatrix& rho, BasisKind basis, int d1,
                     int d2) {
  CharFunction chi{basis, d1, d2, canonical_labels(basis, d1, d2), {}};
  // Cache site operators; the label list is a product of two site lists.
  const std::size_t n1 = static_cast<std::size_t>(d1) * d1;
  const std::size_t n2 = static_cast<std::size_t>(d2) * d2;
  std::vector<SparseOperator> first(n1), second(n2);
  for (std::size_t i = 0; i < n1; ++i) first[i] = site_operator(chi.labels[i * n2], true);
  for (std::size_t j = 0; j < n2; ++j) second[j] = site_operator(chi.labels[j], false);
  chi.values.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const double norm = pair_normalizer(chi.labels[i * n2 + j]);
      chi.values.push_back(trace_against_adjoint(rho, first[i], second[j], d2) / norm);
    }
  }
  return chi;
}

}  // namespace

std::size_t CharFunction::full_size() const {
  return static_cast<std::size_t>(d1) * d1 * d2 * d2;
}

bool CharFunction::complete() const {
  if (labels.size() != full_size() || values.size() != labels.size()) {
    return false;
  }
  std::vector<bool> seen(full_size(), false);
  for (const auto& label : labels) {
    const auto idx = canonical_index(label);
    if (label.kind() != basis || idx >= seen.size() || seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

double CharFunction::purity() const {
  double sum = 0.0;
  for (const auto& v : values) sum += std::norm(v);
  return sum;
}

std::optional<Complex> CharFunction::find(const ObservablePair& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return values[i];
  }
  return std::nullopt;
}

std::vector<ObservablePair> canonical_labels(BasisKind basis, int d1, int d2) {
  std::vector<ObservablePair> labels;
  if (basis == BasisKind::kSud) {
    labels.reserve(static_cast<std::size_t>(d1) * d1 * d2 * d2);
    for (int k1 = 0; k1 < d1 * d1; ++k1) {
      for (int k2 = 0; k2 < d2 * d2; ++k2) {
        labels.push_back(ObservablePair::sud(d1, k1, d2, k2));
      }
    }
    return labels;
  }
  if (d1 != d2) {
    throw Error(ErrorKind::kDimensionMismatch,
                "Weyl characteristic functions need equal site dimensions");
  }
  const int d = d1;
  for (int p1 = 0; p1 < d; ++p1) {
    for (int q1 = 0; q1 < d; ++q1) {
      for (int p2 = 0; p2 < d; ++p2) {
        for (int q2 = 0; q2 < d; ++q2) {
          labels.push_back(ObservablePair::weyl(d, p1, q1, p2, q2));
        }
      }
    }
  }
  return labels;
}

std::size_t canonical_index(const ObservablePair& label) {
  if (label.kind() == BasisKind::kSud) {
    const auto& a = label.sud_first();
    const auto& b = label.sud_second();
    return static_cast<std::size_t>(a.k) * b.d * b.d + b.k;
  }
  const auto& a = label.weyl_first();
  const auto& b = label.weyl_second();
  const std::size_t d = a.d;
  return ((a.p * d + a.q) * d + b.p) * d + b.q;
}

CharFunction char_sud(const ComplexMatrix& rho, int d1, int d2) {
  if (d1 < 2 || d2 < 2) {
    throw Error(ErrorKind::kDimensionMismatch, "site dimensions must be >= 2");
  }
  require_square(rho, d1 * d2);
  return compute(rho, BasisKind::kSud, d1, d2);
}

CharFunction char_weyl(const ComplexMatrix& rho, int d) {
  if (d < 2) {
    throw Error(ErrorKind::kDimensionMismatch, "site dimension must be >= 2");
  }
  if (d % 2 == 0) {
    throw Error(ErrorKind::kEvenDimension,
                "Weyl basis requires odd d, got " + std::to_string(d));
  }
  require_square(rho, d * d);
  return compute(rho, BasisKind::kWeyl, d, d);
}

ComplexMatrix reconstruct(const CharFunction& chi) {
  if (!chi.complete()) {
    throw Error(ErrorKind::kIncompleteFunction,
                "reconstruction needs all " + std::to_string(chi.full_size()) +
                    " labels, got " + std::to_string(chi.labels.size()));
  }
  const int d2 = chi.d2;
  const int dim = chi.d1 * chi.d2;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < chi.labels.size(); ++i) {
    const auto& label = chi.labels[i];
    const Complex weight = chi.values[i] / pair_normalizer(label);
    const auto a = site_operator(label, true);
    const auto b = site_operator(label, false);
    for (const auto& ea : a) {
      for (const auto& eb : b) {
        rho(ea.row * d2 + eb.row, ea.col * d2 + eb.col) +=
            weight * ea.value * eb.value;
      }
    }
  }
  return rho;
}

double fidelity_overlap(const CharFunction& a, const CharFunction& b) {
  if (a.basis != b.basis || a.d1 != b.d1 || a.d2 != b.d2) {
    throw Error(ErrorKind::kBasisMismatch,
                "characteristic functions use different bases or dimensions");
  }
  std::vector<std::optional<Complex>> lookup(b.full_size());
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    lookup[canonical_index(b.labels[i])] = b.values[i];
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const auto& other = lookup[canonical_index(a.labels[i])];
    if (other) sum += a.values[i] * std::conj(*other);
  }
  return sum.real();
}

std::vector<SupportEntry> support(const CharFunction& chi, double threshold) {
  if (threshold < 0.0) {
    throw Error(ErrorKind::kInvalidParameter, "threshold must be >= 0");
  }
  std::vector<SupportEntry> out;
  for (std::size_t i = 0; i < chi.labels.size(); ++i) {
    if (std::abs(chi.values[i]) > threshold) {
      out.push_back({chi.labels[i], chi.values[i], std::norm(chi.values[i])});
    }
  }
  return out;
}

}  // namespace qsv
