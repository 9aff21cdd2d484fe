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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qsv/bases.hpp"
#include "qsv/random_states.hpp"
#include "test_util.hpp"

namespace qsv {
namespace {

using testing::kind_of;

TEST(Pauli, Conventions) {
  for (int i = 0; i < 4; ++i) EXPECT_EQ(pauli(i), oracle::pauli(i)) << i;
  EXPECT_EQ(pauli(0), identity(2));
  ComplexMatrix y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  EXPECT_EQ(pauli(2), y);
  EXPECT_EQ(kind_of([] { pauli(4); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { pauli(-1); }), ErrorKind::kIndexOutOfRange);
}

TEST(GellMann, ListedMatrices) {
  for (int k = 0; k < 9; ++k) {
    EXPECT_LT((gellmann3(k) - oracle::gellmann(k)).norm(), 1e-15) << k;
  }
  ComplexMatrix l1 = ComplexMatrix::Zero(3, 3);
  l1(0, 1) = l1(1, 0) = 1.0;
  EXPECT_EQ(gellmann3(1), l1);
  for (int k = 1; k < 9; ++k) {
    EXPECT_NEAR((gellmann3(k) * gellmann3(k)).trace().real(), 2.0, 1e-14);
  }
  EXPECT_EQ(kind_of([] { gellmann3(9); }), ErrorKind::kIndexOutOfRange);
}

TEST(SudGenerator, ReducesToGellMannAndPauli) {
  for (int k = 0; k < 9; ++k) {
    EXPECT_LT((sud_generator(3, k) - oracle::gellmann(k)).norm(), 1e-15) << k;
  }
  for (int k = 0; k < 4; ++k) {
    EXPECT_LT((sud_generator(2, k) - oracle::pauli(k)).norm(), 1e-15) << k;
  }
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(sud_generator(d, 0), identity(d));
}

TEST(SudGenerator, DiagonalAtFifteen) {
  const ComplexMatrix l = sud_generator(4, 15);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, 1, 1, -3;
  expected /= std::sqrt(6.0);
  EXPECT_LT((l - expected).norm(), 1e-15);
  int n = 0;
  EXPECT_TRUE(sud_is_diagonal(15, &n));
  EXPECT_EQ(n, 4);
  EXPECT_TRUE(sud_is_diagonal(8));
  EXPECT_FALSE(sud_is_diagonal(7));
  EXPECT_FALSE(sud_is_diagonal(0));
}

TEST(SudGenerator, OrthogonalHermitianTraceless) {
  for (int d = 2; d <= 5; ++d) {
    for (int a = 1; a < d * d; ++a) {
      const ComplexMatrix la = sud_generator(d, a);
      EXPECT_TRUE(is_hermitian(la, 0.0));
      EXPECT_NEAR(std::abs(la.trace()), 0.0, 1e-14);
      EXPECT_LT((to_dense(sud_generator_sparse(d, a), d) - la).norm(), 1e-15);
      for (int b = 1; b < d * d; ++b) {
        const Complex t = (la * sud_generator(d, b)).trace();
        EXPECT_NEAR(std::abs(t - (a == b ? 2.0 : 0.0)), 0.0, 1e-13) << d << " " << a << " " << b;
      }
    }
  }
  EXPECT_EQ(kind_of([] { sud_generator(3, 9); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { sud_generator(1, 0); }), ErrorKind::kIndexOutOfRange);
}

// Each generator is one of the textbook symmetric, antisymmetric or
// diagonal generalized Gell-Mann matrices, and all of them occur.
TEST(SudGenerator, CoversTextbookSet) {
  for (int d = 2; d <= 5; ++d) {
    std::vector<ComplexMatrix> textbook;
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        ComplexMatrix s = ComplexMatrix::Zero(d, d);
        ComplexMatrix a = ComplexMatrix::Zero(d, d);
        s(j, k) = s(k, j) = 1.0;
        a(j, k) = -oracle::kI;
        a(k, j) = oracle::kI;
        textbook.push_back(s);
        textbook.push_back(a);
      }
    }
    for (int l = 1; l < d; ++l) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      const double c = std::sqrt(2.0 / (l * (l + 1.0)));
      for (int j = 0; j < l; ++j) m(j, j) = c;
      m(l, l) = -l * c;
      textbook.push_back(m);
    }
    std::set<std::size_t> seen;
    for (int k = 1; k < d * d; ++k) {
      const ComplexMatrix g = sud_generator(d, k);
      for (std::size_t t = 0; t < textbook.size(); ++t) {
        if ((g - textbook[t]).norm() < 1e-14) seen.insert(t);
      }
    }
    EXPECT_EQ(seen.size(), textbook.size()) << d;
  }
}

TEST(SudGenerator, CompletenessOnRandomHermitian) {
  Rng rng(17);
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = random_hermitian(d, rng);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
      for (int k = 0; k < d * d; ++k) {
        const ComplexMatrix g = sud_generator(d, k);
        const double norm2 = (g * g).trace().real();
        rebuilt += (h * g).trace().real() / norm2 * g;
      }
      EXPECT_LT((rebuilt - h).norm(), 1e-10);
    }
  }
}

TEST(EmbeddedLambda, Blocks) {
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(embedded_lambda(2, i), pauli(i));
  ComplexMatrix z3 = ComplexMatrix::Zero(3, 3);
  z3.diagonal() << 1, -1, 0;
  EXPECT_EQ(embedded_lambda(3, 3), z3);
  const ComplexMatrix x4 = embedded_lambda(4, 1);
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (x4(r, c) != Complex(0.0)) ++nonzero;
  EXPECT_EQ(nonzero, 2);
  EXPECT_EQ(x4(0, 1), Complex(1.0));
  EXPECT_EQ(x4(1, 0), Complex(1.0));
  EXPECT_EQ(kind_of([] { embedded_lambda(3, 0); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { embedded_lambda(3, 4); }), ErrorKind::kIndexOutOfRange);
}

TEST(Weyl, ClockAndShift) {
  const ComplexVector shifted = weyl_X(3) * oracle::basis_ket(3, 2);
  EXPECT_LT((shifted - oracle::basis_ket(3, 0)).norm(), 1e-15);
  ComplexMatrix z2 = ComplexMatrix::Zero(2, 2);
  z2.diagonal() << 1, -1;
  EXPECT_LT((weyl_Z(2) - z2).norm(), 1e-15);
  for (int d = 2; d <= 6; ++d) {
    ComplexMatrix xp = identity(d);
    ComplexMatrix zp = identity(d);
    for (int i = 0; i < d; ++i) {
      xp = xp * weyl_X(d);
      zp = zp * weyl_Z(d);
    }
    EXPECT_LT((xp - identity(d)).norm(), 1e-12);
    EXPECT_LT((zp - identity(d)).norm(), 1e-12);
  }
}

TEST(Weyl, DisplacementBasis) {
  EXPECT_LT((weyl_D(3, 0, 0) - identity(3)).norm(), 1e-15);
  const ComplexMatrix d11 = weyl_D(3, 1, 1);
  EXPECT_LT((d11.adjoint() * d11 - identity(3)).norm(), 1e-12);
  for (int d : {3, 5}) {
    for (int p = 0; p < d; ++p) {
      for (int q = 0; q < d; ++q) {
        const ComplexMatrix a = weyl_D(d, p, q);
        EXPECT_LT((a - oracle::weyl_D(d, p, q)).norm(), 1e-13);
        EXPECT_LT((to_dense(weyl_D_sparse(d, p, q), d) - a).norm(), 1e-15);
        for (int p2 = 0; p2 < d; ++p2) {
          for (int q2 = 0; q2 < d; ++q2) {
            const Complex t = (a.adjoint() * weyl_D(d, p2, q2)).trace();
            const double want = (p == p2 && q == q2) ? d : 0.0;
            EXPECT_NEAR(std::abs(t - want), 0.0, 1e-12);
          }
        }
      }
    }
  }
  // D(p, q) = exp(-i pi p q / d) Z^p X^q.
  const ComplexMatrix zx = weyl_Z(5) * weyl_Z(5) * weyl_X(5) * weyl_X(5) * weyl_X(5);
  const Complex phase = std::exp(Complex(0, -std::numbers::pi * 6.0 / 5.0));
  EXPECT_LT((weyl_D(5, 2, 3) - phase * zx).norm(), 1e-12);
}

TEST(Weyl, Errors) {
  EXPECT_EQ(kind_of([] { weyl_D(4, 1, 1); }), ErrorKind::kEvenDimension);
  EXPECT_EQ(kind_of([] { weyl_D(3, 3, 0); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { weyl_D(3, 0, -1); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([] { ObservablePair::weyl(2, 0, 0, 0, 0); }), ErrorKind::kEvenDimension);
}

TEST(Normalizers, SiteAndPair) {
  EXPECT_DOUBLE_EQ(site_normalizer(BasisKind::kSud, 3, 0), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(site_normalizer(BasisKind::kSud, 3, 5), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(site_normalizer(BasisKind::kWeyl, 5, 7), std::sqrt(5.0));
  EXPECT_NEAR(pair_normalizer(ObservablePair::sud(3, 0, 3, 0)), 3.0, 1e-15);
  EXPECT_NEAR(pair_normalizer(ObservablePair::sud(3, 4, 3, 8)), 2.0, 1e-15);
  EXPECT_NEAR(pair_normalizer(ObservablePair::sud(2, 0, 2, 3)), 2.0, 1e-15);
  EXPECT_NEAR(pair_normalizer(ObservablePair::weyl(3, 1, 2, 0, 1)), 3.0, 1e-15);
  for (int d = 2; d <= 4; ++d) {
    for (int k = 0; k < d * d; ++k) {
      const ComplexMatrix g = sud_generator(d, k);
      EXPECT_NEAR(site_normalizer(BasisKind::kSud, d, k),
                  std::sqrt((g.adjoint() * g).trace().real()), 1e-14);
    }
  }
}

TEST(ObservablePairs, LabelsAndOperators) {
  const auto p = ObservablePair::sud(3, 1, 3, 8);
  EXPECT_EQ(p.kind(), BasisKind::kSud);
  EXPECT_EQ(p.name(), "1_8");
  EXPECT_EQ(p.sud_first().k, 1);
  EXPECT_EQ(p.sud_second().k, 8);
  EXPECT_LT((pair_operator(p) - oracle::kron(oracle::gellmann(1), oracle::gellmann(8))).norm(), 1e-15);
  EXPECT_EQ(p, ObservablePair::sud(3, 1, 3, 8));
  EXPECT_FALSE(p == ObservablePair::sud(3, 8, 3, 1));

  const auto w = ObservablePair::weyl(3, 1, 2, 0, 1);
  EXPECT_EQ(w.kind(), BasisKind::kWeyl);
  EXPECT_EQ(w.name(), "1.2_0.1");
  EXPECT_LT((pair_operator(w) - oracle::kron(oracle::weyl_D(3, 1, 2), oracle::weyl_D(3, 0, 1))).norm(), 1e-13);

  EXPECT_EQ(kind_of([] { ObservablePair::sud(3, 9, 3, 0); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(basis_from_string("weyl"), BasisKind::kWeyl);
  EXPECT_EQ(to_string(BasisKind::kSud), "sud");
  EXPECT_EQ(kind_of([] { basis_from_string("pauli"); }), ErrorKind::kInvalidParameter);
}

}  // namespace
}  // namespace qsv
