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

#ifndef F2Q_MAJORANA_H
#define F2Q_MAJORANA_H

#include <stdexcept>
#include <string>
#include <vector>

#include "f2q/bitvec.h"

namespace f2q {

class Torus;

/// i^phase_exp times a product of Majorana modes. Mode 2f is gamma_f and mode 2f+1 is gamma'_f.
struct MajoranaMonomial {
  int phase_exp = 0;
  std::vector<int> modes;

  size_t degree() const { return modes.size(); }
  bool is_scalar() const { return modes.empty(); }
  bool operator==(const MajoranaMonomial& o) const {
    return (phase_exp & 3) == (o.phase_exp & 3) && modes == o.modes;
  }
};

/// Sorts the modes, tracking one sign per transposition, and cancels repeated modes (gamma^2 = 1).
MajoranaMonomial majorana_canonicalize(const MajoranaMonomial& m);
MajoranaMonomial majorana(int phase_exp, std::vector<int> modes);
MajoranaMonomial majorana_mul(const MajoranaMonomial& a, const MajoranaMonomial& b);
int majorana_commutation_scalar(const MajoranaMonomial& a, const MajoranaMonomial& b);

/// Indicator vector of the modes over [0, num_modes).
BitVec mode_vector(const MajoranaMonomial& m, size_t num_modes);

std::string to_text(const MajoranaMonomial& m);
MajoranaMonomial parse_majorana(const std::string& text);

struct OpenPathError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Product of i gamma_u gamma_v over the steps u -> v of a closed edge path, taken in walking order.
/// Every closed path of length l gives i^l.
MajoranaMonomial loop_word(const Torus& t, const std::vector<int>& loop);

}  // namespace f2q

#endif
