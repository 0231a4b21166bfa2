// Copyright 2026 The f2q Authors
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

#include <random>

#include "dense.h"
#include "f2q/catalog.h"
#include "f2q/lattice.h"
#include "f2q/pauli.h"
#include "f2q/transforms.h"
#include "gtest/gtest.h"

using namespace f2q;
using f2q::testing::dense;
using f2q::testing::Mat;

namespace {

PauliOperator random_pauli(size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<size_t, char>> sites;
  for (size_t q = 0; q < n; q++) {
    char l = "IXYZ"[rng() % 4];
    if (l != 'I') sites.emplace_back(q, l);
  }
  return PauliOperator::from_sites(n, sites, static_cast<int>(rng() % 4));
}

}  // namespace

TEST(Pauli, XTimesZIsMinusIY) {
  auto x = PauliOperator::single(1, 0, 'X');
  auto z = PauliOperator::single(1, 0, 'Z');
  auto p = pauli_mul(x, z);
  EXPECT_EQ(p.letter(0), 'Y');
  EXPECT_EQ(p.phase_exp(), 3);
}

TEST(Pauli, IdentityIsNeutral) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; t++) {
    auto p = random_pauli(9, rng);
    EXPECT_EQ(pauli_mul(PauliOperator::identity(9), p), p);
    EXPECT_EQ(pauli_mul(p, PauliOperator::identity(9)), p);
  }
}

TEST(Pauli, FaceLoopOfZSquaresToIdentity) {
  Torus t = Torus::build(3, 3);
  std::vector<std::pair<size_t, char>> sites;
  for (int e : t.face_boundary(t.cell(1, 2))) sites.emplace_back(static_cast<size_t>(e), 'Z');
  auto w = PauliOperator::from_sites(18, sites);
  auto sq = w * w;
  EXPECT_TRUE(sq.is_identity());
  EXPECT_EQ(sq.phase_exp(), 0);
}

TEST(Pauli, CommutationOnOneSite) {
  EXPECT_EQ(pauli_commutation_scalar(PauliOperator::single(2, 0, 'X'), PauliOperator::single(2, 0, 'Z')), -1);
  EXPECT_EQ(pauli_commutation_scalar(PauliOperator::single(2, 0, 'X'), PauliOperator::single(2, 1, 'Z')), 1);
}

// U_56 = X_56 Z_25 and U_58 = X_58 Z_45 act on disjoint edges, so they commute; the fermion
// operators they represent share no Majorana mode either.
TEST(Pauli, NeighbouringHoppingsAtOneVertexCommute) {
  // Registry: 0 = edge 56, 1 = edge 25, 2 = edge 58, 3 = edge 45.
  auto u56 = PauliOperator::from_sites(4, {{0, 'X'}, {1, 'Z'}});
  auto u58 = PauliOperator::from_sites(4, {{2, 'X'}, {3, 'Z'}});
  Mat a = dense(u56), b = dense(u58);
  bool dense_commute = (a * b).near(b * a);
  EXPECT_TRUE(dense_commute);
  EXPECT_EQ(pauli_commutation_scalar(u56, u58), 1);

  Mapping eb = exact_bosonization(4, 4);
  Torus t = eb.torus();
  const auto& h = eb.hopping[static_cast<size_t>(t.hedge(1, 1))];
  const auto& v = eb.hopping[static_cast<size_t>(t.vedge(1, 1))];
  EXPECT_EQ(pauli_commutation_scalar(h.image, v.image), 1);
  EXPECT_EQ(majorana_commutation_scalar(h.mono, v.mono), 1);
}

TEST(Pauli, Weights) {
  EXPECT_EQ(pauli_weight(PauliOperator::identity(5)), 0u);
  Mapping eb = exact_bosonization(4, 4);
  for (const auto& g : eb.stabilizers) EXPECT_EQ(pauli_weight(g), 6u);
  Mapping sc = super_compact_direct(4, 4);
  for (const auto& g : sc.stabilizers) EXPECT_EQ(pauli_weight(g), 12u);
}

TEST(Pauli, SwappedProductsDifferBySignOfCommutator) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; t++) {
    auto p = random_pauli(70, rng), q = random_pauli(70, rng);
    int pq = pauli_mul(p, q).phase_exp(), qp = pauli_mul(q, p).phase_exp();
    int offset = ((pq - qp) % 4 + 4) % 4;
    EXPECT_EQ(offset, pauli_commutation_scalar(p, q) == 1 ? 0 : 2);
  }
}

TEST(Pauli, SquaresAreScalar) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; t++) {
    auto p = random_pauli(40, rng);
    auto sq = p * p;
    EXPECT_TRUE(sq.trivial_support());
    EXPECT_EQ(sq.phase_exp() % 2, 0);
  }
}

TEST(Pauli, CatalogGeneratorsAreHermitian) {
  for (const auto& kind : catalog_kinds()) {
    if (kind == "mlsc") continue;
    Mapping m = build_mapping(kind, 4, 4);
    for (size_t g = 0; g < m.num_generators(); g++) {
      auto sq = m.generator(g).image * m.generator(g).image;
      EXPECT_TRUE(sq.is_identity()) << kind << " generator " << g;
    }
    for (const auto& s : m.stabilizers) EXPECT_TRUE((s * s).is_identity()) << kind;
  }
}

TEST(Pauli, AgreesWithDenseMatrices) {
  std::mt19937_64 rng(20260415);
  const size_t n = 6;
  for (int t = 0; t < 1000; t++) {
    auto p = random_pauli(n, rng), q = random_pauli(n, rng);
    Mat dp = dense(p), dq = dense(q);
    ASSERT_TRUE((dp * dq).near(dense(pauli_mul(p, q)))) << to_text(p) << " * " << to_text(q);
    bool commute = (dp * dq).near(dq * dp);
    ASSERT_EQ(commute, pauli_commutation_scalar(p, q) == 1);
  }
}

TEST(Pauli, TextRoundTrip) {
  auto p = PauliOperator::from_sites(5, {{4, 'Z'}, {0, 'Y'}, {2, 'X'}}, 3);
  EXPECT_EQ(to_text(p), "i^3 0:Y 2:X 4:Z");
  EXPECT_EQ(parse_pauli(to_text(p), 5), p);
  EXPECT_EQ(to_text(PauliOperator::identity(3)), "i^0");
  EXPECT_EQ(parse_pauli("i^0", 3), PauliOperator::identity(3));
  EXPECT_THROW(parse_pauli("i^1 7:X", 3), std::exception);
  EXPECT_THROW(parse_pauli("0:X", 3), std::exception);
}

TEST(Pauli, RegistryMismatchIsRejected) {
  EXPECT_THROW(pauli_mul(PauliOperator(3), PauliOperator(4)), RegistryMismatch);
  EXPECT_THROW(pauli_commutation_scalar(PauliOperator(3), PauliOperator(4)), RegistryMismatch);
}

TEST(Pauli, RemapDropsIdentitySites) {
  auto p = PauliOperator::from_sites(4, {{1, 'X'}, {3, 'Y'}}, 2);
  auto r = p.remap({-1, 0, -1, 1}, 2);
  EXPECT_EQ(r, PauliOperator::from_sites(2, {{0, 'X'}, {1, 'Y'}}, 2));
  EXPECT_THROW(p.remap({0, -1, 1, 2}, 3), std::exception);
}
