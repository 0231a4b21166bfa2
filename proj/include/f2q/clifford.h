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

#ifndef F2Q_CLIFFORD_H
#define F2Q_CLIFFORD_H

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2q/lattice.h"
#include "f2q/pauli.h"

namespace f2q {

enum class GateKind { H, S, R, CNOT, CY, CZ };

int gate_arity(GateKind k);
std::string gate_name(GateKind k);
GateKind parse_gate_kind(const std::string& s);

/// Control first for two-qubit kinds.
struct Gate {
  GateKind kind;
  size_t a;
  size_t b = 0;
};

/// Layers are applied in order: layer 0 acts first.
struct CliffordCircuit {
  std::vector<std::vector<Gate>> layers;

  size_t depth() const { return layers.size(); }
  size_t num_gates() const;
  /// Appends a layer, rejecting gates whose supports overlap.
  void add_layer(std::vector<Gate> layer);
  void append(const CliffordCircuit& other);
};

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PauliOperator gate_conjugate(const PauliOperator& p, const Gate& g);
PauliOperator circuit_conjugate(const PauliOperator& p, const CliffordCircuit& c);
/// Reversed layers; S and R are inverted by applying them three times.
CliffordCircuit circuit_inverse(const CliffordCircuit& c);

/// A gate template: each site is (dx, dy, slot) relative to a cell origin; slot 0 is the
/// horizontal edge qubit and slot 1 the vertical edge qubit of that cell.
struct TemplateGate {
  GateKind kind;
  std::array<int, 3> a{};
  std::array<int, 3> b{};
};

struct CircuitTemplate {
  int cell_w = 1;
  int cell_h = 1;
  std::vector<std::vector<TemplateGate>> layers;
};

CircuitTemplate parse_circuit_template(std::istream& in);
CircuitTemplate load_circuit_template(const std::string& path);
std::string format_circuit_template(const CircuitTemplate& t);

/// Instantiates the template at every cell origin. Qubit ids are torus edge ids.
CliffordCircuit tile_pattern(const Torus& t, const CircuitTemplate& pattern);

}  // namespace f2q

#endif
