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

#include "f2q/catalog.h"
#include "f2q/transforms.h"
#include "f2q/verifier.h"
#include "gtest/gtest.h"

using namespace f2q;

TEST(Transforms, IdentityCircuitLeavesMappingUnchanged) {
  Mapping eb = exact_bosonization(4, 4);
  Mapping out = apply_circuit(eb, CliffordCircuit{});
  for (size_t g = 0; g < eb.num_generators(); g++) EXPECT_EQ(out.generator(g).image, eb.generator(g).image);
  EXPECT_EQ(out.stabilizers, eb.stabilizers);
}

TEST(Transforms, CircuitOutsideRegistryIsRejected) {
  Mapping jw = jordan_wigner_1d(4, 4);  // qubits only on vertical edges
  CliffordCircuit c;
  c.add_layer({{GateKind::H, 0}});
  EXPECT_THROW(apply_circuit(jw, c), std::exception);
}

TEST(Transforms, CircuitKeepsAlgebra) {
  Mapping eb = exact_bosonization(4, 4);
  for (const char* name : {"r15.circ", "r125.circ"}) {
    Mapping m = apply_circuit(eb, tile_pattern(eb.torus(), circuit_template(name)));
    EXPECT_TRUE(check_homomorphism(m).ok()) << name;
    EXPECT_TRUE(check_stabilizers(m).ok()) << name;
    EXPECT_EQ(degeneracy(m), 4) << name;
  }
}

TEST(Transforms, HalfCircuitSplitsStabilizers) {
  Mapping eb = exact_bosonization(4, 4);
  Mapping m = apply_circuit(eb, tile_pattern(eb.torus(), circuit_template("r15.circ")));
  size_t singles = 0;
  for (const auto& s : m.stabilizers) singles += s.weight() == 1;
  EXPECT_EQ(singles, 8u);
  auto [out, rep] = disentangle(m);
  for (const auto& s : out.stabilizers) EXPECT_EQ(s.weight(), 8u) << to_text(s, out.namer());
  EXPECT_EQ(rep.removed_sites.size(), 8u);
}

TEST(Transforms, DisentangleWithoutSingleSiteStabilizers) {
  Mapping eb = exact_bosonization(4, 4);
  auto [out, rep] = disentangle(eb);
  EXPECT_TRUE(rep.removed_sites.empty());
  EXPECT_TRUE(rep.fixed_stabilizers.empty());
  EXPECT_EQ(out.num_qubits(), eb.num_qubits());
  for (size_t g = 0; g < eb.num_generators(); g++) EXPECT_EQ(out.generator(g).image, eb.generator(g).image);
}

TEST(Transforms, CompactPipeline) {
  auto res = run_pipeline("r15", 4, 4);
  const auto& r = res.report;
  EXPECT_EQ(r.removed_sites.size(), r.fixed_stabilizers.size());
  EXPECT_EQ(r.removed_sites.size(), 8u);
  EXPECT_EQ(r.before_ratio.num * r.after_ratio.den * 3, r.after_ratio.num * r.before_ratio.den * 4);
  Torus t = Torus::build(4, 4);
  for (size_t i = 0; i < r.removed_edges.size(); i++) {
    int e = r.removed_edges[i];
    auto [x, y] = t.xy(e / 2);
    EXPECT_FALSE(t.is_horizontal(e));
    EXPECT_EQ((x + y) % 2, 0);
    EXPECT_EQ(r.fixed_letters[i], 'Y');
    EXPECT_EQ(r.fixed_signs[i], -1);
  }
  EXPECT_EQ(res.mapping.ratio().num * 2, res.mapping.ratio().den * 3);
  EXPECT_EQ(weight_table(res.mapping).str(), "1.5 1 3 8");
  EXPECT_TRUE(check_homomorphism(res.mapping).ok());
  EXPECT_TRUE(check_loops(res.mapping).ok());
  EXPECT_EQ(degeneracy(res.mapping), 4);
}

TEST(Transforms, DisentanglePreservesDegeneracy) {
  auto res = run_pipeline("r15", 4, 8);
  EXPECT_EQ(degeneracy(res.circuit_output), 4);
  EXPECT_EQ(degeneracy(res.mapping), 4);
}

TEST(Transforms, SuperCompactPipeline) {
  auto res = run_pipeline("r125", 4, 4);
  EXPECT_EQ(res.mapping.ratio().num * 4, res.mapping.ratio().den * 5);
  EXPECT_EQ(res.mapping.num_qubits(), 20u);
  EXPECT_TRUE(check_homomorphism(res.mapping).ok());
  EXPECT_TRUE(check_loops(res.mapping).ok());
  EXPECT_THROW(run_pipeline("r125", 6, 4), SizeError);
}

TEST(Transforms, VerstraeteCiracToExactBosonization) {
  auto res = run_pipeline("vc_to_eb", 4, 4);
  auto eq = compare_mappings(res.mapping, exact_bosonization(4, 4));
  EXPECT_TRUE(eq.equal()) << eq.str();
}

TEST(Transforms, InverseCircuitReturnsToVerstraeteCirac) {
  Mapping vc = verstraete_cirac(4, 4);
  CliffordCircuit c = tile_pattern(vc.torus(), circuit_template("vc_to_eb.circ"));
  Mapping back = apply_circuit(apply_circuit(vc, c), circuit_inverse(c));
  for (size_t g = 0; g < vc.num_generators(); g++) EXPECT_EQ(back.generator(g).image, vc.generator(g).image);
  EXPECT_EQ(back.stabilizers, vc.stabilizers);
}

TEST(Transforms, BksfIsDualExactBosonization) {
  auto match = relabel_closure(bksf_on_faces(bksf(4, 4)), exact_bosonization(4, 4));
  EXPECT_TRUE(match.eq.equal()) << match.eq.str();
  EXPECT_EQ(match.perm[0], "YXZ");
  EXPECT_EQ(match.perm[1], "YXZ");
}

TEST(Transforms, LetterRelabelIsAnInvolutionForSwaps) {
  Mapping eb = exact_bosonization(4, 4);
  Mapping twice = relabel_letters(relabel_letters(eb, {"YXZ", "XZY"}), {"YXZ", "XZY"});
  for (size_t g = 0; g < eb.num_generators(); g++) EXPECT_EQ(twice.generator(g).image, eb.generator(g).image);
}

TEST(Transforms, JordanWignerCircuitRemovesAllButOneRowOfQubits) {
  auto res = run_pipeline("eb_to_jw", 4, 4);
  // A torus keeps one stabilizer relation, so N + 1 qubits is the floor.
  EXPECT_EQ(res.mapping.num_qubits(), 17u);
  EXPECT_EQ(res.report.removed_sites.size(), 15u);
  EXPECT_TRUE(check_homomorphism(res.mapping).ok());
  EXPECT_EQ(degeneracy(res.mapping), degeneracy(exact_bosonization(4, 4)));
  size_t horizontal = 0;
  for (int q : res.mapping.qubits) horizontal += q % 2 == 0;
  EXPECT_EQ(horizontal, 4u);
}

TEST(Transforms, PipelineEquivalences) {
  auto rep = pipeline_equivalences(4, 4);
  for (const auto& c : rep.checks) {
    if (c.name == "eb_to_jw") continue;
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
}

TEST(Transforms, UnknownPipeline) { EXPECT_THROW(run_pipeline("r2", 4, 4), std::invalid_argument); }

TEST(Transforms, ReportText) {
  auto res = run_pipeline("r15", 4, 4);
  std::string text = to_text(res.report);
  EXPECT_NE(text.find("ratio_after 1.5"), std::string::npos);
  EXPECT_NE(text.find("fixed v(0,0) : i^2 v(0,0):Y"), std::string::npos);
}
