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

#ifndef F2Q_VERIFIER_H
#define F2Q_VERIFIER_H

#include <cstdint>
#include <string>
#include <vector>

#include "f2q/mapping.h"

namespace f2q {

struct WeightRange {
  size_t lo = 0, hi = 0;
  bool empty = true;

  void add(size_t w);
  /// "3", "2-6" or "-" when empty.
  std::string str() const;
  bool operator==(const WeightRange& o) const { return empty == o.empty && (empty || (lo == o.lo && hi == o.hi)); }
};

WeightRange parse_weight_range(const std::string& s);

struct WeightTable {
  Ratio ratio;
  WeightRange parity, hopping, stabilizer;

  /// ratio, parity, hopping, stabilizer separated by single spaces.
  std::string str() const;
  /// Exact comparison; ratios are compared as fractions.
  bool operator==(const WeightTable& o) const;
};

/// Parity: weights of the parity images. Hopping: for every edge, the four bilinears
/// i g^a_L g^b_R (g, g' at either end) built from the edge's hopping and the two parities, each
/// reduced by at most three overlapping stabilizer generators. Stabilizer: generator weights.
WeightTable weight_table(const Mapping& m);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  /// Filled on failure with something that reproduces it (an operator pair, a loop, ...).
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void append(const VerificationReport& o);
  /// One `CHECK <name> PASS|FAIL <detail>` line per check.
  std::string lines() const;
};

/// Every generator pair has the same commutation scalar as its image pair; images are Hermitian.
VerificationReport check_homomorphism(const Mapping& m, int jobs = 1);

/// Stabilizers commute with each other and with every image, and -I is not in the group.
VerificationReport check_stabilizers(const Mapping& m);

/// Every contractible cycle of the fermion graph with at most max_perimeter edges, closed with
/// parities, maps to its fermionic scalar times a +1 element of the stabilizer group.
VerificationReport check_loops(const Mapping& m, int max_perimeter = 8);

/// A closed cycle of the fermion graph: hopping indices in walk order.
std::vector<std::vector<int>> contractible_cycles(const Mapping& m, int max_perimeter);
/// The generators (hoppings, then parities) whose product is the scalar relation of a cycle.
std::vector<size_t> cycle_relation(const Mapping& m, const std::vector<int>& cycle);

/// log2 of the degeneracy: qubits minus the GF(2) rank of stabilizers and parity images.
int degeneracy_log2(const Mapping& m);
long degeneracy(const Mapping& m);
/// Exact check that the degeneracy is 4; mappings without stabilizers are exempt.
VerificationReport check_degeneracy(const Mapping& m);

/// Compares the weight table with an expected row when one is given.
VerificationReport check_weights(const Mapping& m, const WeightTable* expected = nullptr);

struct OracleOptions {
  int max_qubits = 14;
  int random_pairs = 1000;
  uint64_t seed = 20260415;
};

/// F2Q_ORACLE_MAX_QUBITS when set, else 14.
int oracle_max_qubits_from_env();

struct OracleSizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense-matrix ground truth: random products and commutators, image commutators, face-loop scalars
/// on the code space, and the code-space dimension against degeneracy(). Throws OracleSizeError
/// when the mapping has more than max_qubits qubits.
VerificationReport oracle_check(const Mapping& m, const OracleOptions& opts = {});

struct VerifyOptions {
  std::vector<std::string> checks = {"algebra", "loops", "degeneracy", "weights", "oracle"};
  int jobs = 1;
  int max_perimeter = 8;
  OracleOptions oracle;
  const WeightTable* expected_weights = nullptr;
};

/// Runs the named checks. An oracle run on a mapping above the cap is reported as a skipped PASS.
VerificationReport verify(const Mapping& m, const VerifyOptions& opts);

/// Table rows from the reference comparison of 2D mappings, keyed by catalog kind.
struct TableRow {
  std::string label;
  std::string kind;
  WeightTable expected;
  bool contingent = false;
};
const std::vector<TableRow>& reference_table();

struct TableLine {
  enum class Status { Match, Mismatch, Contingent };
  TableRow row;
  Status status = Status::Mismatch;
  bool computed = false;
  WeightTable got;
  /// Why the row could not be computed, when it could not.
  std::string error;
};

/// Builds every reference-table mapping on an lx x ly torus and compares its weight table.
/// Contingent rows report Contingent whether or not they match.
std::vector<TableLine> reproduce_table(int lx = 4, int ly = 4);
/// Fixed-width text table, one row per line plus a header.
std::string format_table(const std::vector<TableLine>& lines);
/// True when every non-contingent row matches.
bool table_ok(const std::vector<TableLine>& lines);

}  // namespace f2q

#endif
