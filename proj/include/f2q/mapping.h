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

#ifndef F2Q_MAPPING_H
#define F2Q_MAPPING_H

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2q/gf2.h"
#include "f2q/lattice.h"
#include "f2q/majorana.h"
#include "f2q/pauli.h"

namespace f2q {

/// AB: hopping i g_L g_R, parity -i g g'. SP: hopping i g_L g'_R, parity -i g g'.
enum class Convention { AB, SP };
std::string convention_name(Convention c);
Convention parse_convention(const std::string& s);

/// One fermionic generator and its qubit image. Parity generators have site_b == -1.
struct Generator {
  MajoranaMonomial mono;
  PauliOperator image;
  int site_a = -1;
  int site_b = -1;
  /// Lattice displacement from site_a to site_b, used to tell contractible loops apart.
  std::array<int, 2> disp{0, 0};
};

struct Ratio {
  long num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

struct Mapping {
  std::string kind;
  int lx = 0, ly = 0;
  Convention convention = Convention::SP;
  int num_sites = 0;
  std::vector<std::array<int, 2>> site_pos;
  /// Registry index -> torus edge id of the qubit, strictly ascending.
  std::vector<int> qubits;
  std::vector<Generator> hopping;
  std::vector<Generator> parity;
  std::vector<PauliOperator> stabilizers;

  size_t num_qubits() const { return qubits.size(); }
  size_t num_modes() const { return 2 * static_cast<size_t>(num_sites); }
  size_t num_generators() const { return hopping.size() + parity.size(); }
  const Generator& generator(size_t i) const {
    return i < hopping.size() ? hopping[i] : parity[i - hopping.size()];
  }
  Generator& generator(size_t i) { return i < hopping.size() ? hopping[i] : parity[i - hopping.size()]; }

  Ratio ratio() const;
  Torus torus() const { return Torus::build(lx, ly); }
  std::string qubit_name(size_t q) const;
  SiteNamer namer() const;
  /// Registry index of a torus edge id, or -1.
  long index_of(int lattice_id) const;
  /// Index of the parity generator of each site.
  std::vector<int> parity_of_site() const;
  /// Hopping-generator adjacency of the fermion graph.
  std::vector<std::vector<int>> site_adjacency() const;
};

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Image of the product of the listed generators divided by the product's Majorana scalar; the
/// product of their monomials must be a scalar. This is how a fermionic relation becomes a +1
/// stabilizer.
PauliOperator relation_image(const Mapping& m, const std::vector<size_t>& gens);

/// Solves mono as a product of the listed generators (GF(2) over modes) and returns its image.
std::optional<PauliOperator> encode_with(const Mapping& m, const MajoranaMonomial& mono,
                                         const std::vector<size_t>& gens);

/// Encodes an even monomial on the covering plane of the torus. lifts[k] is the plane position of
/// mono.modes[k]; generators are taken from the bounding box of the lifts padded by `radius`, so
/// the chosen product is homotopic to the placement given. Returns nullopt when the box is too small.
std::optional<PauliOperator> encode_lifted(const Mapping& m, const MajoranaMonomial& mono,
                                           const std::vector<std::array<int, 2>>& lifts, int radius);
/// encode_lifted with the padding widened until it succeeds, falling back to all generators.
PauliOperator encode_near(const Mapping& m, const MajoranaMonomial& mono,
                          const std::vector<std::array<int, 2>>& lifts, int radius = 2);
/// encode_near with every mode placed at the copy of its site nearest the first mode's site.
/// A generator monomial returns its own image.
PauliOperator encode_local(const Mapping& m, const MajoranaMonomial& mono, int radius = 2);

/// i g_a g_b realized by the hoppings on `path` (hopping indices) and the parities of the sites
/// they touch. The path must connect the sites of the two modes.
PauliOperator encode_bilinear(const Mapping& m, int mode_a, int mode_b, const std::vector<int>& path);

/// Stabilizer group with membership tests that track phases.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(const std::vector<PauliOperator>& gens, size_t num_qubits);
  size_t rank() const { return solver_.rank(); }
  bool contains_letters(const PauliOperator& p) const { return solver_.in_span(p.symplectic()); }
  /// The group element with p's letters, if any.
  std::optional<PauliOperator> element_like(const PauliOperator& p) const;
  /// True when p itself (phase included) lies in the group.
  bool contains(const PauliOperator& p) const;

 private:
  std::vector<PauliOperator> gens_;
  size_t n_;
  Gf2Solver solver_;
};

/// Lowest-weight element of p * (product of at most max_factors stabilizers overlapping p). When at
/// most 12 stabilizers overlap p and max_factors is positive, every product of them is tried.
PauliOperator minimize_weight(const PauliOperator& p, const std::vector<PauliOperator>& stabs,
                              int max_factors = 3);

/// A re-pairing of Majorana modes into new complex fermions plus the new fermion graph.
struct Pairing {
  struct Edge {
    int a, b;
    std::array<int, 2> disp;
  };
  /// Entry f: old modes that become the new gamma_f and gamma'_f.
  std::vector<std::array<int, 2>> pairs;
  /// Optional, per entry: plane offsets of the two old sites from the new site's position. Without
  /// them the nearest copies are used.
  std::vector<std::array<std::array<int, 2>, 2>> offsets;
  /// Optional, per entry: whether the new mode is minus the old one.
  std::vector<std::array<bool, 2>> negated;
  std::vector<std::array<int, 2>> site_pos;
  std::vector<Edge> edges;
  Convention convention = Convention::AB;
  std::string kind;
};

Pairing identity_pairing(const Mapping& m);

/// Re-expresses m on the fermions of p. Stabilizers and qubits are unchanged. A new generator whose
/// old monomial and placement match a generator of m keeps that image; the rest are encoded on the
/// covering plane and reduced to minimum weight.
Mapping repair(const Mapping& m, const Pairing& p);

/// Old mode -> (new mode, sign). Applied to every generator monomial.
Mapping relabel_modes(const Mapping& m, const std::vector<std::pair<int, int>>& table);

/// Moves every qubit to a new torus edge id (a bijection on the qubits present).
Mapping relabel_sites(const Mapping& m, const std::function<int(int)>& lattice_map);

}  // namespace f2q

#endif
