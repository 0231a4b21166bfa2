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

#include "f2q/lattice.h"
#include "f2q/separators.h"
#include "gtest/gtest.h"

using namespace f2q;

namespace {

using Role = SeparatorSet::Role;

size_t count_role(const SeparatorSet& s, Role r) {
  size_t n = 0;
  for (Role x : s.roles) n += x == r;
  return n;
}

SeparatorSet full_set(int k) {
  return fix_pauli_algebra(build_flippers(build_separators(4, 4 * k, k)));
}

}  // namespace

TEST(Separators, GreyFraction) {
  auto s1 = build_separators(4, 4, 1);
  EXPECT_EQ(s1.grey_fraction().num, 1);
  EXPECT_EQ(s1.grey_fraction().den, 2);
  auto s2 = build_separators(4, 8, 2);
  EXPECT_EQ(s2.grey_fraction().num, 1);
  EXPECT_EQ(s2.grey_fraction().den, 4);
  auto s3 = build_separators(4, 12, 3);
  EXPECT_EQ(s3.grey_fraction().num, 1);
  EXPECT_EQ(s3.grey_fraction().den, 6);
}

TEST(Separators, Counts) {
  for (int k = 1; k <= 3; k++) {
    auto s = build_separators(4, 4 * k, k);
    size_t faces = 16u * static_cast<size_t>(k);
    EXPECT_EQ(count_role(s, Role::WhiteFace) + count_role(s, Role::GreyFace), faces);
    EXPECT_EQ(count_role(s, Role::HorizontalEdge), faces);
    EXPECT_EQ(s.separators.size(), 2 * faces);
    EXPECT_TRUE(s.flippers.empty());
  }
}

TEST(Separators, SeparatorsCommute) {
  for (int k = 1; k <= 3; k++) {
    auto scan = scan_algebra(build_separators(4, 4 * k, k));
    EXPECT_EQ(scan.separator_violations, 0u) << "k=" << k << " " << scan.first_violation;
  }
}

TEST(Separators, SizeErrors) {
  EXPECT_THROW(build_separators(4, 6, 2), SizeError);
  EXPECT_THROW(build_separators(5, 4, 1), SizeError);
  EXPECT_THROW(build_separators(4, 4, 0), std::invalid_argument);
}

TEST(Separators, GreyColumnStringFlipsOneGreyOperator) {
  auto s = build_separators(4, 8, 2);
  Torus t = Torus::build(4, 8);
  for (size_t i = 0; i < s.separators.size(); i++) {
    if (s.roles[i] != Role::GreyFace) continue;
    auto [x, y] = s.cells[i];
    std::vector<std::pair<size_t, char>> sites;
    for (int yy = y - s.k + 1; yy <= y + s.k; yy++) sites.emplace_back(static_cast<size_t>(t.hedge(x + 1, yy)), 'X');
    auto str = PauliOperator::from_sites(s.num_qubits(), sites);
    size_t grey_hits = 0;
    for (size_t j = 0; j < s.separators.size(); j++) {
      if (s.roles[j] == Role::GreyFace && pauli_commutation_scalar(str, s.separators[j]) == -1) {
        grey_hits++;
        EXPECT_EQ(j, i);
      }
    }
    EXPECT_EQ(grey_hits, 1u);
  }
}

TEST(Separators, SomeWhiteFlipperIsABareString) {
  auto s = build_flippers(build_separators(4, 4, 1));
  Torus t = Torus::build(4, 4);
  size_t bare = 0;
  for (size_t i = 0; i < s.separators.size(); i++) {
    if (s.roles[i] != Role::WhiteFace) continue;
    auto [x, y] = s.cells[i];
    int below = y - 1;
    while (!is_grey_face(s.k, x, below)) below--;
    std::vector<std::pair<size_t, char>> sites;
    for (int yy = below + 1; yy <= y; yy++) sites.emplace_back(static_cast<size_t>(t.hedge(x, yy)), 'X');
    bare += s.flippers[i] == PauliOperator::from_sites(s.num_qubits(), sites);
  }
  EXPECT_GT(bare, 0u);
}

TEST(Separators, FlippersFlipExactlyTheirOwnSeparator) {
  for (int k = 1; k <= 2; k++) {
    auto s = build_flippers(build_separators(4, 4 * k, k));
    auto scan = scan_algebra(s);
    EXPECT_EQ(scan.cross_violations, 0u) << scan.first_violation;
  }
}

TEST(Separators, FixGivesFullPauliAlgebra) {
  for (int k = 1; k <= 3; k++) {
    size_t fixes = 0;
    auto s = fix_pauli_algebra(build_flippers(build_separators(4, 4 * k, k)), &fixes);
    EXPECT_GT(fixes, 0u);
    auto scan = scan_algebra(s, 4);
    EXPECT_TRUE(scan.ok()) << "k=" << k << " " << scan.str() << " " << scan.first_violation;
    EXPECT_EQ(s.flippers.size(), s.separators.size());
  }
}

TEST(Separators, FixLeavesCommutingFlippersAlone) {
  auto s = full_set(1);
  size_t fixes = 1;
  auto again = fix_pauli_algebra(s, &fixes);
  EXPECT_EQ(fixes, 0u);
  EXPECT_EQ(again.flippers, s.flippers);
}

TEST(Separators, FixRepairsOneBrokenPair) {
  auto s = full_set(1);
  auto broken = s;
  broken.flippers[0] = (broken.flippers[0] * broken.separators[1]).with_phase_exp(0);
  auto scan = scan_algebra(broken);
  EXPECT_EQ(scan.flipper_violations, 1u);
  EXPECT_EQ(scan.cross_violations, 0u);
  size_t fixes = 0;
  auto fixed = fix_pauli_algebra(broken, &fixes);
  EXPECT_EQ(fixes, 1u);
  EXPECT_TRUE(scan_algebra(fixed).ok());
  EXPECT_EQ(fixed.flippers[0], s.flippers[0]);
}

TEST(Separators, FixNeedsFlippers) {
  EXPECT_THROW(fix_pauli_algebra(build_separators(4, 4, 1)), std::invalid_argument);
}

TEST(Separators, Text) {
  auto s = full_set(1);
  std::string text = to_text(s);
  EXPECT_NE(text.find("G f(1,0) SEP "), std::string::npos);
  EXPECT_NE(text.find("U h(0,0) FLIP "), std::string::npos);
  EXPECT_NE(text.find("G' f(0,0) SEP "), std::string::npos);
  EXPECT_EQ(s.label(0), "G f(1,0)");
}

TEST(Separators, ParallelScanAgrees) {
  auto s = full_set(2);
  auto a = scan_algebra(s, 1), b = scan_algebra(s, 8);
  EXPECT_EQ(a.str(), b.str());
}
