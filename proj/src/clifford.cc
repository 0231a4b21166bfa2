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

#include "f2q/clifford.h"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace f2q {

namespace {

// Pauli on at most two qubits in XZ form: i^k X^x Z^z, bit 0 = first site, bit 1 = second.
struct Local {
  int k = 0;
  unsigned x = 0, z = 0;
};

Local mul(const Local& p, const Local& q) {
  return Local{(p.k + q.k + 2 * (std::popcount(p.z & q.x) & 1)) & 3, p.x ^ q.x, p.z ^ q.z};
}

// Images of X_a, X_b, Z_a, Z_b under each gate kind.
struct GateAction {
  Local xa, xb, za, zb;
};

GateAction action_of(GateKind k) {
  const Local Xa{0, 1, 0}, Xb{0, 2, 0}, Za{0, 0, 1}, Zb{0, 0, 2};
  const Local Ya{1, 1, 1};
  switch (k) {
    case GateKind::H:
      return {Za, Xb, Xa, Zb};
    case GateKind::S:
      return {Ya, Xb, Za, Zb};
    case GateKind::R:
      return {Xa, Xb, Ya, Zb};
    case GateKind::CNOT:
      return {Local{0, 3, 0}, Xb, Za, Local{0, 0, 3}};
    case GateKind::CZ:
      return {Local{0, 1, 2}, Local{0, 2, 1}, Za, Zb};
    case GateKind::CY:
      return {Local{1, 3, 2}, Local{0, 2, 1}, Za, Local{0, 0, 3}};
  }
  throw std::logic_error("unknown gate kind");
}

// table[kind][x | z << 2]
struct Tables {
  Local t[6][16];
  Tables() {
    for (int kind = 0; kind < 6; kind++) {
      GateAction g = action_of(static_cast<GateKind>(kind));
      for (unsigned x = 0; x < 4; x++) {
        for (unsigned z = 0; z < 4; z++) {
          Local r;
          if (x & 1) r = mul(r, g.xa);
          if (x & 2) r = mul(r, g.xb);
          if (z & 1) r = mul(r, g.za);
          if (z & 2) r = mul(r, g.zb);
          t[kind][x | (z << 2)] = r;
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

int gate_arity(GateKind k) {
  return (k == GateKind::H || k == GateKind::S || k == GateKind::R) ? 1 : 2;
}

std::string gate_name(GateKind k) {
  static const char* names[] = {"H", "S", "R", "CNOT", "CY", "CZ"};
  return names[static_cast<int>(k)];
}

GateKind parse_gate_kind(const std::string& s) {
  for (int k = 0; k < 6; k++)
    if (gate_name(static_cast<GateKind>(k)) == s) return static_cast<GateKind>(k);
  throw CircuitError("unknown gate kind '" + s + "'");
}

size_t CliffordCircuit::num_gates() const {
  size_t n = 0;
  for (const auto& l : layers) n += l.size();
  return n;
}

void CliffordCircuit::add_layer(std::vector<Gate> layer) {
  std::set<size_t> used;
  for (const Gate& g : layer) {
    if (gate_arity(g.kind) == 2 && g.a == g.b) throw CircuitError("two-qubit gate on one site");
    if (!used.insert(g.a).second) {
      throw CircuitError("support collision on site " + std::to_string(g.a) + " within a layer");
    }
    if (gate_arity(g.kind) == 2 && !used.insert(g.b).second) {
      throw CircuitError("support collision on site " + std::to_string(g.b) + " within a layer");
    }
  }
  layers.push_back(std::move(layer));
}

void CliffordCircuit::append(const CliffordCircuit& other) {
  for (const auto& l : other.layers) layers.push_back(l);
}

PauliOperator gate_conjugate(const PauliOperator& p, const Gate& g) {
  size_t n = p.num_qubits();
  int ar = gate_arity(g.kind);
  if (g.a >= n || (ar == 2 && g.b >= n)) throw std::out_of_range("gate site outside registry");
  unsigned x = p.xs().get(g.a), z = p.zs().get(g.a);
  if (ar == 2) {
    x |= static_cast<unsigned>(p.xs().get(g.b)) << 1;
    z |= static_cast<unsigned>(p.zs().get(g.b)) << 1;
  }
  if (x == 0 && z == 0) return p;
  const Local& r = tables().t[static_cast<int>(g.kind)][x | (z << 2)];
  BitVec nx = p.xs(), nz = p.zs();
  nx.set(g.a, r.x & 1);
  nz.set(g.a, r.z & 1);
  if (ar == 2) {
    nx.set(g.b, r.x & 2);
    nz.set(g.b, r.z & 2);
  }
  return PauliOperator(p.xz_phase() + r.k, std::move(nx), std::move(nz));
}

PauliOperator circuit_conjugate(const PauliOperator& p, const CliffordCircuit& c) {
  PauliOperator r = p;
  for (const auto& layer : c.layers)
    for (const Gate& g : layer) r = gate_conjugate(r, g);
  return r;
}

CliffordCircuit circuit_inverse(const CliffordCircuit& c) {
  CliffordCircuit out;
  for (auto it = c.layers.rbegin(); it != c.layers.rend(); ++it) {
    std::vector<Gate> once, thrice;
    for (const Gate& g : *it) {
      if (g.kind == GateKind::S || g.kind == GateKind::R) {
        thrice.push_back(g);
      } else {
        once.push_back(g);
      }
    }
    if (thrice.empty()) {
      out.layers.push_back(once);
      continue;
    }
    std::vector<Gate> first = once;
    first.insert(first.end(), thrice.begin(), thrice.end());
    out.layers.push_back(first);
    out.layers.push_back(thrice);
    out.layers.push_back(thrice);
  }
  return out;
}

namespace {

std::array<int, 3> parse_offset(const std::string& tok, int line) {
  std::array<int, 3> r{};
  char c1, c2;
  std::istringstream in(tok);
  if (!(in >> r[0] >> c1 >> r[1] >> c2 >> r[2]) || c1 != ',' || c2 != ',' ||
      (r[2] != 0 && r[2] != 1)) {
    throw CircuitError("line " + std::to_string(line) + ": bad site offset '" + tok + "'");
  }
  return r;
}

std::string format_offset(const std::array<int, 3>& o) {
  return std::to_string(o[0]) + "," + std::to_string(o[1]) + "," + std::to_string(o[2]);
}

}  // namespace

CircuitTemplate parse_circuit_template(std::istream& in) {
  CircuitTemplate t;
  std::string raw;
  int line = 0;
  bool saw_version = false, saw_cell = false;
  while (std::getline(in, raw)) {
    line++;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (!saw_version) {
      int v = 0;
      if (word != "f2q-circuit" || !(ls >> v) || v != 1) {
        throw CircuitError("line " + std::to_string(line) + ": expected 'f2q-circuit 1'");
      }
      saw_version = true;
    } else if (word == "cell") {
      if (!(ls >> t.cell_w >> t.cell_h) || t.cell_w < 1 || t.cell_h < 1) {
        throw CircuitError("line " + std::to_string(line) + ": bad cell line");
      }
      saw_cell = true;
    } else if (word == "layer") {
      if (!saw_cell) throw CircuitError("line " + std::to_string(line) + ": layer before cell");
      t.layers.emplace_back();
    } else if (word == "gate") {
      if (t.layers.empty()) throw CircuitError("line " + std::to_string(line) + ": gate outside layer");
      std::string kind, a, b;
      ls >> kind >> a;
      TemplateGate g{parse_gate_kind(kind)};
      g.a = parse_offset(a, line);
      if (gate_arity(g.kind) == 2) {
        if (!(ls >> b)) throw CircuitError("line " + std::to_string(line) + ": missing target");
        g.b = parse_offset(b, line);
      }
      std::string extra;
      if (ls >> extra) throw CircuitError("line " + std::to_string(line) + ": trailing tokens");
      t.layers.back().push_back(g);
    } else {
      throw CircuitError("line " + std::to_string(line) + ": unknown directive '" + word + "'");
    }
  }
  if (!saw_version || !saw_cell) throw CircuitError("circuit file lacks header or cell line");
  return t;
}

CircuitTemplate load_circuit_template(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CircuitError("cannot open circuit file " + path);
  return parse_circuit_template(in);
}

std::string format_circuit_template(const CircuitTemplate& t) {
  std::ostringstream out;
  out << "f2q-circuit 1\ncell " << t.cell_w << ' ' << t.cell_h << '\n';
  for (const auto& layer : t.layers) {
    out << "layer\n";
    for (const auto& g : layer) {
      out << "gate " << gate_name(g.kind) << ' ' << format_offset(g.a);
      if (gate_arity(g.kind) == 2) out << ' ' << format_offset(g.b);
      out << '\n';
    }
  }
  return out.str();
}

CliffordCircuit tile_pattern(const Torus& t, const CircuitTemplate& pattern) {
  if (t.lx() % pattern.cell_w || t.ly() % pattern.cell_h) {
    throw SizeError("circuit cell " + std::to_string(pattern.cell_w) + "x" +
                    std::to_string(pattern.cell_h) + " does not divide the " +
                    std::to_string(t.lx()) + "x" + std::to_string(t.ly()) + " torus");
  }
  auto site = [&](const std::array<int, 3>& o, int ox, int oy) -> size_t {
    return 2 * t.cell(ox + o[0], oy + o[1]) + o[2];
  };
  CliffordCircuit c;
  for (const auto& layer : pattern.layers) {
    std::vector<Gate> gates;
    for (int oy = 0; oy < t.ly(); oy += pattern.cell_h) {
      for (int ox = 0; ox < t.lx(); ox += pattern.cell_w) {
        for (const auto& g : layer) {
          Gate out{g.kind, site(g.a, ox, oy)};
          if (gate_arity(g.kind) == 2) out.b = site(g.b, ox, oy);
          gates.push_back(out);
        }
      }
    }
    c.add_layer(std::move(gates));
  }
  return c;
}

}  // namespace f2q
