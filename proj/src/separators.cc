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

#include "f2q/separators.h"

#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "f2q/catalog.h"
#include "f2q/lattice.h"

namespace f2q {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

size_t sz(int v) { return static_cast<size_t>(v); }

}  // namespace

bool is_grey_face(int k, int x, int y) {
  if (mod(y, k) != 0) return false;
  return mod(x, 2) == mod(y / k, 2);
}

std::string SeparatorSet::label(size_t i) const {
  auto [x, y] = cells.at(i);
  std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  switch (roles.at(i)) {
    case Role::WhiteFace:
      return "G f" + at;
    case Role::HorizontalEdge:
      return "U h" + at;
    default:
      return "G' f" + at;
  }
}

Ratio SeparatorSet::grey_fraction() const {
  long grey = 0;
  for (Role r : roles) grey += r == Role::GreyFace;
  long faces = static_cast<long>(lx) * ly;
  long g = std::gcd(grey, faces);
  return {grey / g, faces / g};
}

SeparatorSet build_separators(int lx, int ly, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Torus t = Torus::build(lx, ly);
  if (lx % 2 || ly % (2 * k)) {
    throw SizeError("separators for k=" + std::to_string(k) + " need an even lx and ly divisible by " +
                    std::to_string(2 * k) + ", got " + std::to_string(lx) + "x" + std::to_string(ly));
  }
  Mapping eb = exact_bosonization(lx, ly);
  SeparatorSet s;
  s.k = k;
  s.lx = lx;
  s.ly = ly;
  size_t n = s.num_qubits();
  auto add = [&](SeparatorSet::Role r, int x, int y, PauliOperator p) {
    s.separators.push_back(std::move(p));
    s.roles.push_back(r);
    s.cells.push_back({x, y});
  };
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    if (!is_grey_face(k, x, y)) add(SeparatorSet::Role::WhiteFace, x, y, eb.stabilizers[sz(f)]);
  }
  for (int c = 0; c < t.num_cells(); c++) {
    auto [x, y] = t.xy(c);
    add(SeparatorSet::Role::HorizontalEdge, x, y, eb.hopping[sz(t.hedge(x, y))].image);
  }
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    if (!is_grey_face(k, x, y)) continue;
    add(SeparatorSet::Role::GreyFace, x, y,
        PauliOperator::from_sites(n, {{sz(t.vedge(x + 1, y)), 'X'},
                                      {sz(t.hedge(x + 1, y + 1)), 'Y'},
                                      {sz(t.vedge(x + 2, y)), 'Z'}}));
  }
  return s;
}

SeparatorSet build_flippers(const SeparatorSet& in) {
  SeparatorSet s = in;
  Torus t = Torus::build(s.lx, s.ly);
  size_t n = s.num_qubits();
  size_t ns = s.separators.size();
  std::vector<PauliOperator> found(ns);
  std::vector<bool> have(ns, false);

  // X on the horizontal edges h(x, y0+1) .. h(x, y1) flips the face stabilizers of (x, y0) and (x, y1).
  auto column_string = [&](int x, int y0, int y1) {
    std::vector<std::pair<size_t, char>> sites;
    for (int y = y0 + 1; y <= y1; y++) sites.emplace_back(sz(t.hedge(x, y)), 'X');
    return PauliOperator::from_sites(n, sites);
  };
  auto attach = [&](size_t i, PauliOperator p) {
    for (size_t j = 0; j < ns; j++) {
      if (j == i || pauli_commutation_scalar(p, s.separators[j]) == 1) continue;
      if (!have[j]) {
        throw ConsistencyError("flipper for " + s.label(i) + " also flips " + s.label(j) +
                               ", whose flipper is not built yet");
      }
      p *= found[j];
    }
    if (pauli_commutation_scalar(p, s.separators[i]) != -1) {
      throw ConsistencyError("flipper for " + s.label(i) + " commutes with its separator");
    }
    found[i] = p.with_phase_exp(0);
    have[i] = true;
  };

  for (size_t i = 0; i < ns; i++) {
    if (s.roles[i] != SeparatorSet::Role::GreyFace) continue;
    auto [x, y] = s.cells[i];
    attach(i, column_string(x + 1, y - s.k, y + s.k));
  }
  for (size_t i = 0; i < ns; i++) {
    if (s.roles[i] != SeparatorSet::Role::WhiteFace) continue;
    auto [x, y] = s.cells[i];
    int below = y - 1;
    while (!is_grey_face(s.k, x, below)) below--;
    attach(i, column_string(x, below, y));
  }
  for (size_t i = 0; i < ns; i++) {
    if (s.roles[i] != SeparatorSet::Role::HorizontalEdge) continue;
    auto [x, y] = s.cells[i];
    attach(i, PauliOperator::single(n, sz(t.hedge(x, y)), 'Z'));
  }
  s.flippers = std::move(found);
  return s;
}

SeparatorSet fix_pauli_algebra(const SeparatorSet& in, size_t* fixes) {
  if (in.flippers.size() != in.separators.size()) throw std::invalid_argument("flippers are not built");
  SeparatorSet s = in;
  size_t count = 0;
  // Absorbing separator j only changes flipper i's relation with flipper j, so one pass suffices.
  for (size_t i = 0; i < s.flippers.size(); i++) {
    for (size_t j = i + 1; j < s.flippers.size(); j++) {
      if (pauli_commutation_scalar(s.flippers[i], s.flippers[j]) == -1) {
        s.flippers[i] = (s.flippers[i] * s.separators[j]).with_phase_exp(0);
        count++;
      }
    }
  }
  if (fixes) *fixes = count;
  return s;
}

std::string AlgebraScan::str() const {
  std::ostringstream out;
  out << separator_pairs << " separator pairs (" << separator_violations << " violations), " << flipper_pairs
      << " flipper pairs (" << flipper_violations << " violations), " << cross_pairs << " flipper-separator pairs ("
      << cross_violations << " violations)";
  return out.str();
}

AlgebraScan scan_algebra(const SeparatorSet& s, int jobs) {
  size_t ns = s.separators.size();
  bool with_flippers = s.flippers.size() == ns;
  AlgebraScan scan;
  scan.separator_pairs = ns * (ns - 1) / 2;
  if (with_flippers) {
    scan.flipper_pairs = scan.separator_pairs;
    scan.cross_pairs = ns * ns;
  }
  std::atomic<size_t> next{0}, sep_bad{0}, flip_bad{0}, cross_bad{0};
  std::mutex mu;
  size_t first_row = ns;
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < ns;) {
      std::string bad;
      auto note = [&](const std::string& what) {
        if (bad.empty()) bad = what;
      };
      for (size_t j = i + 1; j < ns; j++) {
        if (pauli_commutation_scalar(s.separators[i], s.separators[j]) != 1) {
          sep_bad++;
          note("separators " + s.label(i) + " and " + s.label(j) + " anticommute");
        }
        if (with_flippers && pauli_commutation_scalar(s.flippers[i], s.flippers[j]) != 1) {
          flip_bad++;
          note("flippers of " + s.label(i) + " and " + s.label(j) + " anticommute");
        }
      }
      if (with_flippers) {
        for (size_t j = 0; j < ns; j++) {
          int want = i == j ? -1 : 1;
          if (pauli_commutation_scalar(s.flippers[i], s.separators[j]) != want) {
            cross_bad++;
            note("flipper of " + s.label(i) + " vs separator " + s.label(j) + " has the wrong sign");
          }
        }
      }
      if (!bad.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < first_row) {
          first_row = i;
          scan.first_violation = bad;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; w++) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  scan.separator_violations = sep_bad;
  scan.flipper_violations = flip_bad;
  scan.cross_violations = cross_bad;
  return scan;
}

std::string to_text(const SeparatorSet& s) {
  Torus t = Torus::build(s.lx, s.ly);
  SiteNamer namer = [&](size_t q) { return t.edge_name(static_cast<int>(q)); };
  std::ostringstream out;
  for (size_t i = 0; i < s.separators.size(); i++) {
    out << s.label(i) << " SEP " << to_text(s.separators[i], namer) << "\n";
    if (i < s.flippers.size()) out << s.label(i) << " FLIP " << to_text(s.flippers[i], namer) << "\n";
  }
  return out.str();
}

}  // namespace f2q
