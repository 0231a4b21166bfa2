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

#ifndef F2Q_SEPARATORS_H
#define F2Q_SEPARATORS_H

#include <string>
#include <vector>

#include "f2q/mapping.h"
#include "f2q/pauli.h"

namespace f2q {

/// Grey faces sit on every k-th row, on alternate columns, with the column parity flipping from one
/// grey row to the next. The fraction of grey faces is 1/(2k).
bool is_grey_face(int k, int x, int y);

struct SeparatorSet {
  enum class Role { WhiteFace, HorizontalEdge, GreyFace };

  int k = 1;
  int lx = 0, ly = 0;
  /// Qubits are the torus edges, registry index = edge id.
  std::vector<PauliOperator> separators;
  /// Index-aligned with separators; empty until build_flippers.
  std::vector<PauliOperator> flippers;
  std::vector<Role> roles;
  /// Face or edge cell (x, y) of each separator.
  std::vector<std::array<int, 2>> cells;

  size_t num_qubits() const { return 2 * static_cast<size_t>(lx) * static_cast<size_t>(ly); }
  /// "G f(x,y)", "U h(x,y)" or "G' f(x,y)".
  std::string label(size_t i) const;
  Ratio grey_fraction() const;
};

/// Gauge stabilizers of exact bosonization on white faces, its hoppings across horizontal edges and
/// the three-body operators X v(x+1,y) Y h(x+1,y+1) Z v(x+2,y) on grey faces (x, y).
/// Needs lx even and ly divisible by 2k.
SeparatorSet build_separators(int lx, int ly, int k);

/// Grey faces get X strings up the column to their right, white faces X strings down to the grey
/// face below, horizontal edges a single Z; each is then corrected with flippers found earlier.
/// Throws ConsistencyError when a correction needs a flipper that does not exist yet.
SeparatorSet build_flippers(const SeparatorSet& s);

/// Makes the flippers commute with each other: for i < j anticommuting, flipper i absorbs
/// separator j. `fixes`, when given, receives the number of pairs repaired.
SeparatorSet fix_pauli_algebra(const SeparatorSet& s, size_t* fixes = nullptr);

struct AlgebraScan {
  size_t separator_pairs = 0, flipper_pairs = 0, cross_pairs = 0;
  size_t separator_violations = 0, flipper_violations = 0, cross_violations = 0;
  std::string first_violation;

  bool ok() const { return separator_violations + flipper_violations + cross_violations == 0; }
  std::string str() const;
};

/// Exhaustive pairwise scan of the Pauli algebra. Without flippers only separators are scanned.
AlgebraScan scan_algebra(const SeparatorSet& s, int jobs = 1);

/// One line per separator: `<role label> SEP <op>` and, when present, `<role label> FLIP <op>`.
std::string to_text(const SeparatorSet& s);

}  // namespace f2q

#endif
