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

#include "f2q/majorana.h"

#include <algorithm>
#include <sstream>

#include "f2q/lattice.h"

namespace f2q {

MajoranaMonomial majorana_canonicalize(const MajoranaMonomial& m) {
  const auto& a = m.modes;
  // One sign per inversion of distinct modes; equal modes never need to pass each other.
  size_t inversions = 0;
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = i + 1; j < a.size(); j++)
      if (a[i] > a[j]) inversions++;
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  MajoranaMonomial out;
  out.phase_exp = (m.phase_exp + 2 * static_cast<int>(inversions & 1)) & 3;
  for (size_t i = 0; i < sorted.size();) {
    if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1]) {
      i += 2;
    } else {
      out.modes.push_back(sorted[i]);
      i++;
    }
  }
  return out;
}

MajoranaMonomial majorana(int phase_exp, std::vector<int> modes) {
  return majorana_canonicalize(MajoranaMonomial{phase_exp, std::move(modes)});
}

MajoranaMonomial majorana_mul(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  // Merge two sorted lists: each mode of b moves left past the modes of a that exceed it.
  size_t crossings = 0;
  size_t i = 0;
  for (int mb : b.modes) {
    while (i < a.modes.size() && a.modes[i] <= mb) i++;
    crossings += a.modes.size() - i;
  }
  MajoranaMonomial out;
  out.phase_exp = (a.phase_exp + b.phase_exp + 2 * static_cast<int>(crossings & 1)) & 3;
  std::set_symmetric_difference(a.modes.begin(), a.modes.end(), b.modes.begin(), b.modes.end(),
                                std::back_inserter(out.modes));
  return out;
}

int majorana_commutation_scalar(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  std::vector<int> shared;
  std::set_intersection(a.modes.begin(), a.modes.end(), b.modes.begin(), b.modes.end(),
                        std::back_inserter(shared));
  size_t s = a.modes.size() * b.modes.size() - shared.size();
  return (s & 1) ? -1 : 1;
}

BitVec mode_vector(const MajoranaMonomial& m, size_t num_modes) {
  BitVec v(num_modes);
  for (int q : m.modes) v.set(q);
  return v;
}

std::string to_text(const MajoranaMonomial& m) {
  std::ostringstream out;
  out << "i^" << (m.phase_exp & 3);
  for (int q : m.modes) out << " g" << q;
  return out.str();
}

MajoranaMonomial parse_majorana(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok.size() != 3 || tok.rfind("i^", 0) != 0 || tok[2] < '0' || tok[2] > '3') {
    throw std::invalid_argument("majorana text must start with i^k: '" + text + "'");
  }
  MajoranaMonomial m;
  m.phase_exp = tok[2] - '0';
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'g') throw std::invalid_argument("bad mode token '" + tok + "'");
    m.modes.push_back(std::stoi(tok.substr(1)));
  }
  for (size_t i = 1; i < m.modes.size(); i++) {
    if (m.modes[i - 1] >= m.modes[i]) throw std::invalid_argument("modes must strictly increase");
  }
  return m;
}

MajoranaMonomial loop_word(const Torus& t, const std::vector<int>& loop) {
  MajoranaMonomial acc;
  if (loop.empty()) return acc;
  // Walk the path; each edge must leave from the vertex the previous one arrived at.
  auto ends = [&](int e) { return t.edge_vertices(e); };
  auto [a0, b0] = ends(loop[0]);
  int start, cur;
  if (loop.size() == 1) throw OpenPathError("a single edge is not a closed path");
  auto [a1, b1] = ends(loop[1]);
  if (b0 == a1 || b0 == b1) {
    start = a0;
    cur = b0;
  } else if (a0 == a1 || a0 == b1) {
    start = b0;
    cur = a0;
  } else {
    throw OpenPathError("consecutive loop edges do not share a vertex");
  }
  cur = start;
  for (size_t k = 0; k < loop.size(); k++) {
    auto [l, r] = ends(loop[k]);
    int from = cur;
    if (l == cur) {
      cur = r;
    } else if (r == cur) {
      cur = l;
    } else {
      throw OpenPathError("loop edge " + std::to_string(k) + " is not attached to the path");
    }
    acc = majorana_mul(acc, majorana(1, {2 * from, 2 * cur}));
  }
  if (cur != start) throw OpenPathError("path does not return to its starting vertex");
  return acc;
}

}  // namespace f2q
