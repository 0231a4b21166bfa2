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

#include <cstdlib>

#include "f2q/catalog.h"
#include "f2q/transforms.h"
#include "f2q/verifier.h"
#include "gtest/gtest.h"

using namespace f2q;

namespace {

const CheckResult* find_check(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Swap the letter on one qubit of a generator image between Z and X (or I and Z).
Mapping corrupt_image(Mapping m, size_t gen) {
  auto& img = m.hopping[gen].image;
  size_t q = 0;
  while (img.letter(q) == 'I') q++;
  char flipped = img.letter(q) == 'Z' ? 'X' : 'Z';
  img = img.with_letter(q, flipped);
  return m;
}

}  // namespace

TEST(Verifier, CatalogPassesEverything) {
  VerifyOptions opts;
  opts.checks = {"algebra", "loops", "degeneracy", "weights"};
  auto rep = verify(exact_bosonization(4, 4), opts);
  EXPECT_TRUE(rep.ok()) << rep.lines();
  EXPECT_NE(find_check(rep, "algebra"), nullptr);
  EXPECT_NE(find_check(rep, "loops"), nullptr);
}

TEST(Verifier, CorruptedImageFailsWithCounterexample) {
  Mapping bad = corrupt_image(exact_bosonization(4, 4), 5);
  auto rep = check_homomorphism(bad);
  ASSERT_FALSE(rep.ok());
  const CheckResult* c = find_check(rep, "algebra");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->counterexample.empty());
  EXPECT_NE(c->counterexample.find("fermion"), std::string::npos) << c->counterexample;
  // The parallel scan finds the same first counterexample.
  EXPECT_EQ(check_homomorphism(bad, 4).lines(), rep.lines());
}

TEST(Verifier, CorruptedImageFailsTheOracle) {
  Mapping bad = corrupt_image(exact_bosonization(2, 2), 0);
  auto rep = oracle_check(bad);
  EXPECT_FALSE(rep.ok()) << rep.lines();
  EXPECT_FALSE(find_check(rep, "oracle.products")->pass);
}

TEST(Verifier, AnticommutingStabilizerFailsTheOracleCodeSpace) {
  Mapping bad = exact_bosonization(2, 2);
  // Multiplying by one Pauli flips its commutation with the neighbouring stabilizer.
  auto& s = bad.stabilizers[0];
  size_t q = 0;
  while (s.letter(q) == 'I') q++;
  s = s.with_letter(q, s.letter(q) == 'X' ? 'Z' : 'X');
  EXPECT_FALSE(check_stabilizers(bad).ok());
  auto rep = oracle_check(bad);
  EXPECT_FALSE(rep.ok()) << rep.lines();
}

TEST(Verifier, OracleOnSmallMappings) {
  for (const char* kind : {"exact_bosonization", "verstraete_cirac", "bksf", "kitaev_honeycomb", "compact"}) {
    Mapping m = build_mapping(kind, 2, 2);
    ASSERT_LE(m.num_qubits(), 14u) << kind;
    auto rep = oracle_check(m);
    EXPECT_TRUE(rep.ok()) << kind << "\n" << rep.lines();
    EXPECT_EQ(rep.checks.size(), 3u);
  }
}

TEST(Verifier, OracleCodeSpaceDimensions) {
  auto eb = oracle_check(exact_bosonization(2, 2));
  // 8 qubits and 3 independent stabilizers leave a 32-dimensional code space.
  EXPECT_NE(find_check(eb, "oracle.codespace")->detail.find("stabilizer code space 32"), std::string::npos)
      << eb.lines();
  EXPECT_NE(find_check(eb, "oracle.codespace")->detail.find("degeneracy 4"), std::string::npos);
  auto jw = oracle_check(jordan_wigner_1d(3, 3));
  EXPECT_NE(find_check(jw, "oracle.codespace")->detail.find("stabilizer code space 512"), std::string::npos)
      << jw.lines();
  EXPECT_TRUE(jw.ok()) << jw.lines();
}

TEST(Verifier, OracleRefusesLargeMappings) {
  EXPECT_THROW(oracle_check(exact_bosonization(4, 4)), OracleSizeError);
  OracleOptions small;
  small.max_qubits = 6;
  EXPECT_THROW(oracle_check(exact_bosonization(2, 2), small), OracleSizeError);
  VerifyOptions opts;
  opts.checks = {"oracle"};
  auto rep = verify(exact_bosonization(4, 4), opts);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checks[0].detail.rfind("skipped", 0), 0u);
}

TEST(Verifier, OracleCapFromEnvironment) {
  ::setenv("F2Q_ORACLE_MAX_QUBITS", "10", 1);
  EXPECT_EQ(oracle_max_qubits_from_env(), 10);
  ::unsetenv("F2Q_ORACLE_MAX_QUBITS");
  EXPECT_EQ(oracle_max_qubits_from_env(), 14);
}

TEST(Verifier, UnknownCheck) {
  VerifyOptions opts;
  opts.checks = {"nope"};
  EXPECT_THROW(verify(exact_bosonization(2, 2), opts), std::invalid_argument);
}

TEST(Verifier, WeightRanges) {
  WeightRange r;
  EXPECT_EQ(r.str(), "-");
  r.add(3);
  EXPECT_EQ(r.str(), "3");
  r.add(6);
  r.add(2);
  EXPECT_EQ(r.str(), "2-6");
  EXPECT_EQ(parse_weight_range("2-6"), r);
  EXPECT_EQ(parse_weight_range("4").str(), "4");
  EXPECT_THROW(parse_weight_range("6-2"), std::invalid_argument);
  EXPECT_THROW(parse_weight_range("x"), std::invalid_argument);
}

TEST(Verifier, WeightTableRows) {
  EXPECT_EQ(weight_table(exact_bosonization(4, 4)).str(), "2 4 2-6 6");
  EXPECT_EQ(weight_table(verstraete_cirac(4, 4)).str(), "2 1 3-4 6");
  EXPECT_EQ(weight_table(bksf(4, 4)).str(), "2 4 2-6 6");
  EXPECT_EQ(weight_table(kitaev_honeycomb(4, 4)).str(), "2 2 2-4 6");
  EXPECT_EQ(weight_table(build_mapping("compact", 4, 4)).str(), "1.5 1 3 8");
  EXPECT_EQ(weight_table(jordan_wigner_1d(4, 4)).stabilizer.str(), "-");
}

TEST(Verifier, CheckWeightsAgainstExpected) {
  Mapping m = build_mapping("compact", 4, 4);
  WeightTable want = weight_table(m);
  EXPECT_TRUE(check_weights(m, &want).ok());
  want.hopping = parse_weight_range("2-3");
  auto rep = check_weights(m, &want);
  EXPECT_FALSE(rep.ok());
}

TEST(Verifier, LoopsUpToPerimeterSix) {
  Mapping m = exact_bosonization(4, 4);
  auto four = contractible_cycles(m, 4);
  auto six = contractible_cycles(m, 6);
  EXPECT_EQ(four.size(), 16u);
  EXPECT_GT(six.size(), four.size());
  for (const auto& c : six) EXPECT_TRUE(c.size() == 4 || c.size() == 6);
  EXPECT_TRUE(check_loops(m, 6).ok());
  EXPECT_FALSE(check_loops(corrupt_image(m, 5), 6).ok());
}

TEST(Verifier, Degeneracy) {
  EXPECT_EQ(degeneracy(exact_bosonization(2, 2)), 4);
  EXPECT_EQ(degeneracy(exact_bosonization(4, 6)), 4);
  // With an odd side the auxiliary-fermion mappings keep only a twofold degeneracy.
  EXPECT_EQ(degeneracy(bksf(3, 5)), 4);
  EXPECT_EQ(degeneracy_log2(verstraete_cirac(3, 5)), 1);
  EXPECT_EQ(degeneracy_log2(kitaev_honeycomb(3, 3)), 1);
  EXPECT_FALSE(check_degeneracy(verstraete_cirac(3, 3)).ok());
  EXPECT_EQ(degeneracy(jordan_wigner_1d(4, 4)), 1);
  EXPECT_TRUE(check_degeneracy(bksf(4, 4)).ok());
}

TEST(Verifier, ReproduceTable) {
  auto lines = reproduce_table(4, 4);
  ASSERT_EQ(lines.size(), reference_table().size());
  for (const auto& l : lines) {
    if (l.row.contingent) {
      EXPECT_EQ(l.status, TableLine::Status::Contingent);
      EXPECT_FALSE(l.computed);
      EXPECT_NE(l.error.find("not available"), std::string::npos);
    } else if (l.row.kind != "kitaev_honeycomb") {
      EXPECT_EQ(l.status, TableLine::Status::Match) << l.row.label << " got " << l.got.str();
    }
  }
  std::string text = format_table(lines);
  EXPECT_NE(text.find("CONTINGENT"), std::string::npos);
  EXPECT_NE(text.find("Super-compact"), std::string::npos);
}
