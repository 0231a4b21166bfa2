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

#ifndef F2Q_TRANSFORMS_H
#define F2Q_TRANSFORMS_H

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "f2q/clifford.h"
#include "f2q/mapping.h"
#include "f2q/verifier.h"

namespace f2q {

struct TransformReport {
  std::vector<std::string> removed_sites;
  std::vector<std::string> fixed_stabilizers;
  /// Index-aligned with removed_sites: torus edge id, letter and sign (+1 or -1) of the fixing
  /// single-site stabilizer.
  std::vector<int> removed_edges;
  std::vector<char> fixed_letters;
  std::vector<int> fixed_signs;
  Ratio before_ratio, after_ratio;
  WeightTable before_weights, after_weights;
  std::vector<std::string> notes;
};

std::string to_text(const TransformReport& r);

/// Conjugates every image and stabilizer. Gate sites are torus edge ids and must be registered.
Mapping apply_circuit(const Mapping& m, const CliffordCircuit& c);

/// Removes every qubit fixed by a single-site element of the stabilizer group.
std::pair<Mapping, TransformReport> disentangle(const Mapping& m);

/// Circuit data files shipped with the library, by file name (e.g. "r15.circ").
std::string circuit_data(const std::string& name);
CircuitTemplate circuit_template(const std::string& name);
std::vector<std::string> circuit_data_names();

struct PipelineResult {
  Mapping mapping;
  /// The mapping right after the circuit stages and before any re-pairing.
  Mapping circuit_output;
  TransformReport report;
};

/// Pipelines: r15, r125, vc_to_eb, eb_to_jw, mlsc_to_eb.
const std::vector<std::string>& pipeline_kinds();
PipelineResult run_pipeline(const std::string& kind, int lx, int ly);

/// Fermion re-pairings used by the compact pipelines.
Pairing compact_pairing(int lx, int ly);
Pairing super_compact_pairing(int lx, int ly);

/// The r = 1.25 mapping tiled from its stored unit-cell data.
Mapping super_compact_direct(int lx, int ly);
/// Renders a super-compact mapping as unit-cell data (inverse of super_compact_direct's parser).
std::string super_compact_cell_text(const Mapping& m);

/// MLSC: exact bosonization conjugated by the inverse of the mlsc_to_eb circuit.
Mapping mlsc(int lx, int ly);

/// Mode table and qubit shift that carry the circuit image of VC onto exact bosonization.
std::vector<std::pair<int, int>> vc_mode_shift(int lx, int ly);
int vc_site_shift(const Torus& t, int edge);
/// The inverse of vc_mode_shift as a signed re-pairing onto the fermions of exact bosonization.
Pairing vc_to_eb_pairing(int lx, int ly);
/// Torus edge bijection from the vertex-site lattice of BKSF to the face-site lattice of EB.
int bksf_dual_edge(const Torus& t, int edge);

/// Linear-depth circuit taking exact bosonization towards Jordan-Wigner, as one whole-torus cell.
CircuitTemplate eb_to_jw_template(int lx, int ly);

/// Generator-by-generator comparison of two mappings on the union of their qubit registries.
/// Each generator of `got` is compared with the target image of the same monomial.
struct Equivalence {
  size_t generators = 0;
  size_t exact = 0;
  size_t modulo_stabilizers = 0;
  /// Same letters as an allowed representative but a different sign.
  size_t sign_only = 0;
  size_t mismatched = 0;
  bool same_registry = false;
  bool same_stabilizer_group = false;
  std::string first_mismatch;

  bool equal() const { return same_registry && mismatched == 0 && sign_only == 0 && same_stabilizer_group; }
  std::string str() const;
};

Equivalence compare_mappings(const Mapping& got, const Mapping& target);

/// Letter relabeling per edge slot: perm[slot] lists the images of X, Y, Z (e.g. "YXZ").
/// Site-form phases are kept.
Mapping relabel_letters(const Mapping& m, const std::array<std::string, 2>& perm);

/// Tries every translation-invariant pair of per-slot letter permutations and returns the best.
struct RelabelMatch {
  std::array<std::string, 2> perm;
  Equivalence eq;
};
RelabelMatch relabel_closure(const Mapping& got, const Mapping& target);

/// Checks every pipeline against its target on an lx x ly torus: r15, r125, vc_to_eb, eb_to_jw and
/// bksf_dual (BKSF against exact bosonization within the letter-relabeling closure).
VerificationReport pipeline_equivalences(int lx, int ly);

/// Re-expresses an AB mapping on vertices as an SP mapping on the dual faces with the same
/// generators as exact bosonization (vertex (x,y) becomes face (x,y)).
Mapping bksf_on_faces(const Mapping& bksf_mapping);

}  // namespace f2q

#endif
