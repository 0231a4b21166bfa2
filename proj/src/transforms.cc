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

#include "f2q/transforms.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "embedded_data.h"
#include "f2q/catalog.h"

namespace f2q {

std::string to_text(const TransformReport& r) {
  std::ostringstream out;
  out << "REPORT\n";
  out << "ratio_before " << r.before_ratio.str() << "\n";
  out << "ratio_after " << r.after_ratio.str() << "\n";
  out << "weights_before " << r.before_weights.str() << "\n";
  out << "weights_after " << r.after_weights.str() << "\n";
  out << "removed " << r.removed_sites.size() << "\n";
  for (size_t i = 0; i < r.removed_sites.size(); i++) {
    out << "fixed " << r.removed_sites[i] << " : " << r.fixed_stabilizers.at(i) << "\n";
  }
  for (const auto& n : r.notes) out << "note " << n << "\n";
  return out.str();
}

Mapping apply_circuit(const Mapping& m, const CliffordCircuit& c) {
  CliffordCircuit local;
  for (const auto& layer : c.layers) {
    std::vector<Gate> gates;
    for (const auto& g : layer) {
      Gate out = g;
      long a = m.index_of(static_cast<int>(g.a));
      long b = gate_arity(g.kind) == 2 ? m.index_of(static_cast<int>(g.b)) : 0;
      if (a < 0 || b < 0) {
        Torus t = m.torus();
        throw RegistryMismatch("circuit acts on " + t.edge_name(static_cast<int>(a < 0 ? g.a : g.b)) +
                               ", which is not a qubit of the mapping");
      }
      out.a = static_cast<size_t>(a);
      out.b = static_cast<size_t>(b);
      gates.push_back(out);
    }
    local.add_layer(std::move(gates));
  }
  Mapping out = m;
  for (size_t i = 0; i < out.num_generators(); i++) {
    auto& g = out.generator(i);
    g.image = circuit_conjugate(g.image, local);
  }
  for (auto& s : out.stabilizers) s = circuit_conjugate(s, local);
  return out;
}

namespace {

struct Row {
  BitVec vec;
  PauliOperator op;
};

// Reduced row echelon form of the stabilizer generators, columns x_0..x_{n-1} then z_0..z_{n-1}.
std::vector<Row> reduced_rows(const std::vector<PauliOperator>& stabs, size_t n) {
  std::vector<Row> rows;
  for (const auto& s : stabs) rows.push_back({s.symplectic(), s});
  size_t r = 0;
  for (size_t col = 0; col < 2 * n && r < rows.size(); col++) {
    size_t piv = r;
    while (piv < rows.size() && !rows[piv].vec.get(col)) piv++;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = 0; i < rows.size(); i++) {
      if (i != r && rows[i].vec.get(col)) {
        rows[i].vec ^= rows[r].vec;
        rows[i].op = rows[i].op * rows[r].op;
      }
    }
    r++;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

std::pair<Mapping, TransformReport> disentangle(const Mapping& m) {
  TransformReport rep;
  rep.before_ratio = m.ratio();
  rep.before_weights = weight_table(m);
  Mapping cur = m;
  for (;;) {
    size_t n = cur.num_qubits();
    std::map<size_t, PauliOperator> fixed;
    for (const auto& row : reduced_rows(cur.stabilizers, n)) {
      auto supp = row.op.support();
      if (supp.size() == 1 && !fixed.count(supp[0])) fixed.emplace(supp[0], row.op);
    }
    if (fixed.empty()) break;
    auto namer = cur.namer();
    auto clear = [&](PauliOperator p, const std::string& what) {
      for (const auto& [q, s] : fixed) {
        char l = p.letter(q);
        if (l == 'I') continue;
        if (l != s.letter(q)) {
          throw ConsistencyError(what + " acts as " + std::string(1, l) + " on " + namer(q) +
                                 ", which is fixed by " + to_text(s, namer));
        }
        p = p * s;
      }
      return p;
    };
    for (size_t i = 0; i < cur.num_generators(); i++) {
      auto& g = cur.generator(i);
      g.image = clear(g.image, "image of " + to_text(g.mono));
    }
    std::vector<PauliOperator> kept;
    for (const auto& s : cur.stabilizers) {
      PauliOperator c = clear(s, "stabilizer " + to_text(s, namer));
      if (c.trivial_support()) {
        if (!c.is_identity()) throw ConsistencyError("stabilizer group contains " + to_text(c));
        continue;
      }
      kept.push_back(c);
    }
    cur.stabilizers = std::move(kept);
    std::vector<long> idx(n);
    std::vector<int> qubits;
    for (size_t q = 0; q < n; q++) {
      if (fixed.count(q)) {
        idx[q] = -1;
        rep.removed_sites.push_back(namer(q));
        rep.fixed_stabilizers.push_back(to_text(fixed.at(q), namer));
        rep.removed_edges.push_back(cur.qubits[q]);
        rep.fixed_letters.push_back(fixed.at(q).letter(q));
        rep.fixed_signs.push_back(fixed.at(q).phase_exp() == 2 ? -1 : 1);
      } else {
        idx[q] = static_cast<long>(qubits.size());
        qubits.push_back(cur.qubits[q]);
      }
    }
    for (size_t i = 0; i < cur.num_generators(); i++) {
      auto& g = cur.generator(i);
      g.image = g.image.remap(idx, qubits.size());
    }
    for (auto& s : cur.stabilizers) s = s.remap(idx, qubits.size());
    cur.qubits = std::move(qubits);
  }
  rep.after_ratio = cur.ratio();
  rep.after_weights = weight_table(cur);
  return {std::move(cur), std::move(rep)};
}

std::string circuit_data(const std::string& name) {
  for (const auto& [file, text] : embedded_files())
    if (file == name) return text;
  throw std::invalid_argument("no circuit data named '" + name + "'");
}

std::vector<std::string> circuit_data_names() {
  std::vector<std::string> out;
  for (const auto& [file, text] : embedded_files()) out.push_back(file);
  return out;
}

CircuitTemplate circuit_template(const std::string& name) {
  std::istringstream in(circuit_data(name));
  return parse_circuit_template(in);
}

const std::vector<std::string>& pipeline_kinds() {
  static const std::vector<std::string> k = {"r15", "r125", "vc_to_eb", "mlsc_to_eb", "eb_to_jw"};
  return k;
}

namespace {

void require_divisible(const std::string& what, int lx, int ly, int d) {
  Torus::build(lx, ly);
  if (lx % d || ly % d) {
    throw SizeError(what + " needs both torus sides divisible by " + std::to_string(d) + ", got " +
                    std::to_string(lx) + "x" + std::to_string(ly));
  }
}

void merge(TransformReport& into, const TransformReport& stage) {
  into.removed_sites.insert(into.removed_sites.end(), stage.removed_sites.begin(), stage.removed_sites.end());
  into.fixed_stabilizers.insert(into.fixed_stabilizers.end(), stage.fixed_stabilizers.begin(),
                                stage.fixed_stabilizers.end());
  into.removed_edges.insert(into.removed_edges.end(), stage.removed_edges.begin(), stage.removed_edges.end());
  into.fixed_letters.insert(into.fixed_letters.end(), stage.fixed_letters.begin(), stage.fixed_letters.end());
  into.fixed_signs.insert(into.fixed_signs.end(), stage.fixed_signs.begin(), stage.fixed_signs.end());
}

TransformReport start_report(const Mapping& m) {
  TransformReport r;
  r.before_ratio = m.ratio();
  r.before_weights = weight_table(m);
  return r;
}

void finish_report(TransformReport& r, const Mapping& m) {
  r.after_ratio = m.ratio();
  r.after_weights = weight_table(m);
}

Pairing square_pairing(int lx, int ly, const std::string& kind) {
  Torus t = Torus::build(lx, ly);
  Pairing p;
  p.kind = kind;
  p.convention = Convention::AB;
  for (int c = 0; c < t.num_cells(); c++) {
    auto [x, y] = t.xy(c);
    p.site_pos.push_back({x, y});
    p.edges.push_back({c, t.cell(x + 1, y), {1, 0}});
    p.edges.push_back({c, t.cell(x, y + 1), {0, 1}});
  }
  return p;
}

}  // namespace

Pairing compact_pairing(int lx, int ly) {
  Torus t = Torus::build(lx, ly);
  Pairing p = square_pairing(lx, ly, "compact");
  for (int c = 0; c < t.num_cells(); c++) {
    auto [x, y] = t.xy(c);
    p.pairs.push_back({2 * c, 2 * t.cell(x, y - 1) + 1});
    p.offsets.push_back({{{0, 0}, {0, -1}}});
  }
  return p;
}

Pairing super_compact_pairing(int lx, int ly) {
  Torus t = Torus::build(lx, ly);
  Pairing p = square_pairing(lx, ly, "super_compact");
  auto g = [&](int x, int y) { return 2 * t.cell(x, y); };
  auto gp = [&](int x, int y) { return 2 * t.cell(x, y) + 1; };
  for (int c = 0; c < t.num_cells(); c++) {
    auto [x, y] = t.xy(c);
    int x0 = x - x % 2, y0 = y - y % 2;
    switch ((x % 2) * 2 + (y % 2)) {
      case 0:
        p.pairs.push_back({gp(x0, y0), g(x0, y0 + 1)});
        p.offsets.push_back({{{0, 0}, {0, 1}}});
        break;
      case 1:
        p.pairs.push_back({gp(x0, y0 + 1), g(x0 + 1, y0 + 2)});
        p.offsets.push_back({{{0, 0}, {1, 1}}});
        break;
      case 2:
        p.pairs.push_back({g(x0, y0), gp(x0 - 1, y0 - 1)});
        p.offsets.push_back({{{-1, 0}, {-2, -1}}});
        break;
      default:
        p.pairs.push_back({gp(x0 + 1, y0), g(x0 + 1, y0 + 1)});
        p.offsets.push_back({{{0, -1}, {0, 0}}});
        break;
    }
  }
  return p;
}

std::vector<std::pair<int, int>> vc_mode_shift(int lx, int ly) {
  Torus t = Torus::build(lx, ly);
  std::vector<std::pair<int, int>> table(2 * static_cast<size_t>(t.num_faces()));
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    table[2 * f] = {2 * t.cell(x, y - 1) + 1, +1};
    table[2 * f + 1] = {2 * t.cell(x - 1, y), -1};
  }
  return table;
}

Pairing vc_to_eb_pairing(int lx, int ly) {
  Pairing p = identity_pairing(exact_bosonization(lx, ly));
  p.kind = "vc_to_eb";
  p.negated.assign(p.pairs.size(), {false, false});
  auto table = vc_mode_shift(lx, ly);
  for (int q = 0; q < static_cast<int>(table.size()); q++) {
    auto [to, sign] = table[q];
    p.pairs[to / 2][to % 2] = q;
    p.negated[to / 2][to % 2] = sign < 0;
  }
  return p;
}

int vc_site_shift(const Torus& t, int edge) {
  auto [x, y] = t.xy(edge / 2);
  return t.is_horizontal(edge) ? t.hedge(x - 1, y) : t.vedge(x, y - 1);
}

int bksf_dual_edge(const Torus& t, int edge) {
  auto [x, y] = t.xy(edge / 2);
  return t.is_horizontal(edge) ? t.vedge(x + 1, y) : t.hedge(x, y + 1);
}

CircuitTemplate eb_to_jw_template(int lx, int ly) {
  Torus::build(lx, ly);
  using Site = std::array<int, 3>;
  auto h = [&](int x, int y) { return Site{((x % lx) + lx) % lx, ((y % ly) + ly) % ly, 0}; };
  auto v = [&](int x, int y) { return Site{((x % lx) + lx) % lx, ((y % ly) + ly) % ly, 1}; };
  CircuitTemplate c;
  c.cell_w = lx;
  c.cell_h = ly;
  // Greedy layering that keeps the order of gates sharing a qubit.
  std::map<Site, size_t> busy;
  auto place = [&](const TemplateGate& g) {
    size_t at = 0;
    if (busy.count(g.a)) at = std::max(at, busy[g.a]);
    if (gate_arity(g.kind) == 2 && busy.count(g.b)) at = std::max(at, busy[g.b]);
    if (c.layers.size() <= at) c.layers.resize(at + 1);
    c.layers[at].push_back(g);
    busy[g.a] = at + 1;
    if (gate_arity(g.kind) == 2) busy[g.b] = at + 1;
  };
  auto barrier = [&] {
    for (auto& [s, l] : busy) l = c.layers.size();
  };

  // CZ between the top and the left edge of every face.
  for (int y = 0; y < ly; y++)
    for (int x = 0; x < lx; x++) place({GateKind::CZ, h(x, y + 1), v(x, y)});
  barrier();
  // Column by column along each row: CNOT h(x,y) -> h(x+1,y).
  for (int x = 0; x + 1 < lx; x++)
    for (int y = 0; y < ly; y++) place({GateKind::CNOT, h(x, y), h(x + 1, y)});
  barrier();
  // Controlled-K from h(x-1,y) turns the vertex stabilizer into X there.
  for (int y = 0; y < ly; y++) {
    for (int x = 1; x < lx; x++) {
      Site ctl = h(x - 1, y);
      place({GateKind::CZ, ctl, v(x - 1, y - 1)});
      place({GateKind::CY, ctl, v(x, y - 1)});
      place({GateKind::CY, ctl, v(x, y)});
      place({GateKind::CZ, ctl, v(x + 1, y)});
    }
  }
  barrier();
  // Column by column along each row: CNOT v(x+1,y) -> v(x,y).
  for (int x = 0; x + 1 < lx; x++)
    for (int y = 0; y < ly; y++) place({GateKind::CNOT, v(x + 1, y), v(x, y)});
  barrier();
  // Up the last column: CNOT v(lx-1,y) -> v(lx-1,y+1).
  for (int y = 0; y + 1 < ly; y++) place({GateKind::CNOT, v(lx - 1, y), v(lx - 1, y + 1)});
  return c;
}

namespace {

std::string cell_offset(int dx, int dy, int slot) {
  return std::to_string(dx) + "," + std::to_string(dy) + "," + std::to_string(slot);
}

int wrap_near(int d, int n) {
  d = ((d % n) + n) % n;
  if (d > n / 2) d -= n;
  return d;
}

// Operator text with sites written as offsets from (ox, oy).
std::string offset_text(const Mapping& m, const PauliOperator& p, int ox, int oy) {
  Torus t = m.torus();
  std::ostringstream out;
  out << "i^" << p.phase_exp();
  std::vector<std::pair<std::array<int, 3>, char>> sites;
  for (size_t q : p.support()) {
    int e = m.qubits[q];
    auto [x, y] = t.xy(e / 2);
    sites.push_back({{wrap_near(y - oy, m.ly), wrap_near(x - ox, m.lx), e % 2}, p.letter(q)});
  }
  std::sort(sites.begin(), sites.end());
  for (const auto& [k, l] : sites) out << ' ' << cell_offset(k[1], k[0], k[2]) << ':' << l;
  return out.str();
}

struct OffsetOp {
  int phase = 0;
  std::vector<std::pair<std::array<int, 3>, char>> sites;
};

std::array<int, 3> parse_triple(const std::string& s) {
  std::array<int, 3> o{};
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> o[0] >> c1 >> o[1] >> c2 >> o[2]) || c1 != ',' || c2 != ',') {
    throw std::invalid_argument("bad offset '" + s + "'");
  }
  return o;
}

OffsetOp parse_offset_op(std::istream& in) {
  OffsetOp op;
  std::string word;
  in >> word;
  if (word.rfind("i^", 0) != 0) throw std::invalid_argument("operator must start with i^k");
  op.phase = std::stoi(word.substr(2));
  while (in >> word) {
    auto colon = word.find(':');
    if (colon == std::string::npos || colon + 2 != word.size()) {
      throw std::invalid_argument("bad operator factor '" + word + "'");
    }
    op.sites.push_back({parse_triple(word.substr(0, colon)), word[colon + 1]});
  }
  return op;
}

}  // namespace

std::string super_compact_cell_text(const Mapping& m) {
  Torus t = m.torus();
  const int w = 2, hgt = 2;
  std::ostringstream out;
  out << "f2q-cell 1\n";
  out << "cell " << w << ' ' << hgt << "\n";
  out << "convention " << convention_name(m.convention) << "\n";
  out << "qubits";
  for (int e : m.qubits) {
    auto [x, y] = t.xy(e / 2);
    if (x < w && y < hgt) out << ' ' << cell_offset(x, y, e % 2);
  }
  out << "\n";
  for (const auto& g : m.hopping) {
    auto pa = m.site_pos.at(g.site_a);
    if (pa[0] >= w || pa[1] >= hgt) continue;
    out << "hopping " << pa[0] << ',' << pa[1] << ' ' << pa[0] + g.disp[0] << ',' << pa[1] + g.disp[1]
        << " : " << offset_text(m, g.image, 0, 0) << "\n";
  }
  for (const auto& g : m.parity) {
    auto pa = m.site_pos.at(g.site_a);
    if (pa[0] >= w || pa[1] >= hgt) continue;
    out << "parity " << pa[0] << ',' << pa[1] << " : " << offset_text(m, g.image, 0, 0) << "\n";
  }
  // One representative per translation orbit: the translate whose support sits closest to the origin.
  std::set<std::string> orbits;
  for (const auto& s : m.stabilizers) {
    std::string best;
    std::pair<int, std::string> best_key{1 << 30, ""};
    for (int oy = 0; oy < m.ly; oy += hgt) {
      for (int ox = 0; ox < m.lx; ox += w) {
        std::string txt = offset_text(m, s, ox, oy);
        int reach = 0;
        for (size_t q : s.support()) {
          auto [x, y] = t.xy(m.qubits[q] / 2);
          reach = std::max({reach, std::abs(wrap_near(x - ox, m.lx)), std::abs(wrap_near(y - oy, m.ly))});
        }
        std::pair<int, std::string> key{reach, txt};
        if (key < best_key) best_key = key;
      }
    }
    orbits.insert(best_key.second);
  }
  for (const auto& o : orbits) out << "stabilizer : " << o << "\n";
  return out.str();
}

Mapping super_compact_direct(int lx, int ly) {
  require_divisible("super_compact_direct", lx, ly, 4);
  Torus t = Torus::build(lx, ly);
  std::istringstream in(circuit_data("super_compact.cell"));
  std::string raw;
  int w = 0, hgt = 0;
  Convention conv = Convention::AB;
  std::vector<std::array<int, 3>> cell_qubits;
  struct HopEntry {
    std::array<int, 2> a, b;
    OffsetOp op;
  };
  std::vector<HopEntry> hops;
  std::vector<std::pair<std::array<int, 2>, OffsetOp>> pars;
  std::vector<OffsetOp> stabs;
  bool header = false;
  auto pair_of = [](const std::string& s) {
    auto comma = s.find(',');
    return std::array<int, 2>{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  };
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (!header) {
      int version = 0;
      if (word != "f2q-cell" || !(ls >> version) || version != 1) throw std::invalid_argument("expected 'f2q-cell 1'");
      header = true;
    } else if (word == "cell") {
      ls >> w >> hgt;
    } else if (word == "convention") {
      std::string c;
      ls >> c;
      conv = parse_convention(c);
    } else if (word == "qubits") {
      while (ls >> word) cell_qubits.push_back(parse_triple(word));
    } else if (word == "hopping") {
      std::string a, b, colon;
      ls >> a >> b >> colon;
      hops.push_back({pair_of(a), pair_of(b), parse_offset_op(ls)});
    } else if (word == "parity") {
      std::string a, colon;
      ls >> a >> colon;
      pars.push_back({pair_of(a), parse_offset_op(ls)});
    } else if (word == "stabilizer") {
      std::string colon;
      ls >> colon;
      stabs.push_back(parse_offset_op(ls));
    } else {
      throw std::invalid_argument("unknown cell directive '" + word + "'");
    }
  }
  if (!header || w <= 0 || hgt <= 0) throw std::invalid_argument("cell data lacks header");

  Mapping m;
  m.kind = "super_compact_direct";
  m.lx = lx;
  m.ly = ly;
  m.convention = conv;
  m.num_sites = t.num_cells();
  for (int c = 0; c < t.num_cells(); c++) {
    auto [x, y] = t.xy(c);
    m.site_pos.push_back({x, y});
  }
  std::set<int> ids;
  for (int oy = 0; oy < ly; oy += hgt)
    for (int ox = 0; ox < lx; ox += w)
      for (const auto& q : cell_qubits) ids.insert(2 * t.cell(ox + q[0], oy + q[1]) + q[2]);
  m.qubits.assign(ids.begin(), ids.end());
  size_t n = m.num_qubits();
  auto build = [&](const OffsetOp& op, int ox, int oy) {
    std::vector<std::pair<size_t, char>> sites;
    for (const auto& [o, l] : op.sites) {
      long q = m.index_of(2 * t.cell(ox + o[0], oy + o[1]) + o[2]);
      if (q < 0) throw std::invalid_argument("cell operator touches a site without a qubit");
      sites.emplace_back(static_cast<size_t>(q), l);
    }
    return PauliOperator::from_sites(n, sites, op.phase);
  };
  for (int oy = 0; oy < ly; oy += hgt) {
    for (int ox = 0; ox < lx; ox += w) {
      for (const auto& hp : hops) {
        Generator g;
        g.site_a = t.cell(ox + hp.a[0], oy + hp.a[1]);
        g.site_b = t.cell(ox + hp.b[0], oy + hp.b[1]);
        g.disp = {hp.b[0] - hp.a[0], hp.b[1] - hp.a[1]};
        g.mono = conv == Convention::AB ? majorana(1, {2 * g.site_a, 2 * g.site_b})
                                        : majorana(1, {2 * g.site_a, 2 * g.site_b + 1});
        g.image = build(hp.op, ox, oy);
        m.hopping.push_back(std::move(g));
      }
      for (const auto& [a, op] : pars) {
        Generator g;
        g.site_a = t.cell(ox + a[0], oy + a[1]);
        g.mono = majorana(3, {2 * g.site_a, 2 * g.site_a + 1});
        g.image = build(op, ox, oy);
        m.parity.push_back(std::move(g));
      }
      for (const auto& op : stabs) m.stabilizers.push_back(build(op, ox, oy));
    }
  }
  auto hop_key = [](const Generator& g) { return std::make_pair(g.site_a, g.disp[1] != 0); };
  std::stable_sort(m.hopping.begin(), m.hopping.end(),
                   [&](const Generator& a, const Generator& b) { return hop_key(a) < hop_key(b); });
  std::stable_sort(m.parity.begin(), m.parity.end(),
                   [](const Generator& a, const Generator& b) { return a.site_a < b.site_a; });
  return m;
}

Mapping mlsc(int lx, int ly) {
  (void)lx;
  (void)ly;
  throw std::runtime_error("MLSC circuit data is not available");
}

std::string Equivalence::str() const {
  std::ostringstream out;
  out << generators << " generators: " << exact << " exact, " << modulo_stabilizers << " modulo stabilizers, "
      << sign_only << " sign only, " << mismatched << " mismatched; registry "
      << (same_registry ? "same" : "differs") << "; stabilizer group " << (same_stabilizer_group ? "same" : "differs");
  return out.str();
}

Equivalence compare_mappings(const Mapping& got, const Mapping& target) {
  if (got.lx != target.lx || got.ly != target.ly) throw std::invalid_argument("mappings live on different tori");
  Equivalence eq;
  eq.same_registry = got.qubits == target.qubits;
  std::set<int> all(got.qubits.begin(), got.qubits.end());
  all.insert(target.qubits.begin(), target.qubits.end());
  std::vector<int> uni(all.begin(), all.end());
  auto lift = [&](const Mapping& m, const PauliOperator& p) {
    std::vector<long> idx;
    for (int e : m.qubits) idx.push_back(std::lower_bound(uni.begin(), uni.end(), e) - uni.begin());
    return p.remap(idx, uni.size());
  };
  std::vector<PauliOperator> tstabs, gstabs;
  for (const auto& s : target.stabilizers) tstabs.push_back(lift(target, s));
  for (const auto& s : got.stabilizers) gstabs.push_back(lift(got, s));
  StabilizerGroup tg(tstabs, uni.size()), gg(gstabs, uni.size());
  Torus t = got.torus();
  SiteNamer namer = [&](size_t q) { return t.edge_name(uni.at(q)); };
  for (size_t i = 0; i < got.num_generators(); i++) {
    const auto& g = got.generator(i);
    eq.generators++;
    PauliOperator have = lift(got, g.image);
    PauliOperator want;
    try {
      want = lift(target, encode_local(target, g.mono));
    } catch (const ConsistencyError&) {
      eq.mismatched++;
      if (eq.first_mismatch.empty()) eq.first_mismatch = to_text(g.mono) + " is not generated by the target";
      continue;
    }
    if (have == want) {
      eq.exact++;
      continue;
    }
    PauliOperator diff = have * want;
    if (tg.contains(diff)) {
      eq.modulo_stabilizers++;
    } else if (tg.contains(diff.negated())) {
      eq.sign_only++;
      if (eq.first_mismatch.empty()) eq.first_mismatch = to_text(g.mono) + ": sign differs";
    } else {
      eq.mismatched++;
      if (eq.first_mismatch.empty()) {
        eq.first_mismatch = to_text(g.mono) + ": got " + to_text(have, namer) + ", target " + to_text(want, namer);
      }
    }
  }
  bool inside = std::all_of(gstabs.begin(), gstabs.end(), [&](const PauliOperator& s) { return tg.contains(s); });
  eq.same_stabilizer_group = inside && gg.rank() == tg.rank();
  return eq;
}

Mapping relabel_letters(const Mapping& m, const std::array<std::string, 2>& perm) {
  for (const auto& p : perm) {
    std::string s = p;
    std::sort(s.begin(), s.end());
    if (s != "XYZ") throw std::invalid_argument("letter permutation must use X, Y and Z once: " + p);
  }
  auto apply = [&](const PauliOperator& p) {
    std::vector<std::pair<size_t, char>> sites;
    for (size_t q : p.support()) {
      char l = p.letter(q);
      sites.emplace_back(q, perm[m.qubits[q] % 2][l == 'X' ? 0 : l == 'Y' ? 1 : 2]);
    }
    return PauliOperator::from_sites(p.num_qubits(), sites, p.phase_exp());
  };
  Mapping out = m;
  for (size_t i = 0; i < out.num_generators(); i++) out.generator(i).image = apply(out.generator(i).image);
  for (auto& s : out.stabilizers) s = apply(s);
  return out;
}

RelabelMatch relabel_closure(const Mapping& got, const Mapping& target) {
  std::vector<std::string> perms;
  std::string p = "XYZ";
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  RelabelMatch best;
  bool have = false;
  auto score = [](const Equivalence& e) {
    return std::make_tuple(e.equal(), e.exact + e.modulo_stabilizers, e.same_stabilizer_group, e.exact);
  };
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      Equivalence e = compare_mappings(relabel_letters(got, {a, b}), target);
      if (!have || score(e) > score(best.eq)) {
        best = {{a, b}, e};
        have = true;
      }
    }
  }
  return best;
}

Mapping bksf_on_faces(const Mapping& b) {
  if (b.convention != Convention::AB) throw std::invalid_argument("expected an AB mapping on vertices");
  Mapping eb = exact_bosonization(b.lx, b.ly);
  Mapping out = eb;
  out.kind = "bksf_on_faces";
  out.qubits = b.qubits;
  out.stabilizers = b.stabilizers;
  for (size_t i = 0; i < out.num_generators(); i++) {
    auto& g = out.generator(i);
    g.image = encode_local(b, g.mono);
  }
  Torus t = b.torus();
  return relabel_sites(out, [&](int e) { return bksf_dual_edge(t, e); });
}

PipelineResult run_pipeline(const std::string& raw_kind, int lx, int ly) {
  std::string kind = raw_kind;
  std::replace(kind.begin(), kind.end(), '-', '_');
  if (std::find(pipeline_kinds().begin(), pipeline_kinds().end(), kind) == pipeline_kinds().end()) {
    throw std::invalid_argument("unknown pipeline '" + raw_kind + "'");
  }
  PipelineResult res;
  if (kind == "r15" || kind == "r125") {
    require_divisible(kind, lx, ly, kind == "r15" ? 2 : 4);
    Torus t = Torus::build(lx, ly);
    Mapping m = exact_bosonization(lx, ly);
    res.report = start_report(m);
    m = apply_circuit(m, tile_pattern(t, circuit_template("r15.circ")));
    auto [m15, rep15] = disentangle(m);
    merge(res.report, rep15);
    m = std::move(m15);
    if (kind == "r125") {
      m = apply_circuit(m, tile_pattern(t, circuit_template("r125.circ")));
      auto [m125, rep125] = disentangle(m);
      merge(res.report, rep125);
      m = std::move(m125);
    }
    res.circuit_output = m;
    res.mapping = repair(m, kind == "r15" ? compact_pairing(lx, ly) : super_compact_pairing(lx, ly));
    if (kind == "r15") res.mapping.kind = "compact";
  } else if (kind == "vc_to_eb") {
    Torus t = Torus::build(lx, ly);
    Mapping m = verstraete_cirac(lx, ly);
    res.report = start_report(m);
    m = apply_circuit(m, tile_pattern(t, circuit_template("vc_to_eb.circ")));
    res.circuit_output = m;
    m = relabel_sites(m, [&](int e) { return vc_site_shift(t, e); });
    m = repair(m, vc_to_eb_pairing(lx, ly));
    m.kind = "vc_to_eb";
    res.mapping = std::move(m);
  } else if (kind == "eb_to_jw") {
    Torus t = Torus::build(lx, ly);
    Mapping m = exact_bosonization(lx, ly);
    res.report = start_report(m);
    CircuitTemplate tmpl = (lx == 4 && ly == 4) ? circuit_template("eb_to_jw_4x4.circ") : eb_to_jw_template(lx, ly);
    m = apply_circuit(m, tile_pattern(t, tmpl));
    res.circuit_output = m;
    auto [out, rep] = disentangle(m);
    merge(res.report, rep);
    out.kind = "eb_to_jw";
    res.mapping = std::move(out);
  } else {
    require_divisible(kind, lx, ly, 2);
    Torus t = Torus::build(lx, ly);
    Mapping m = mlsc(lx, ly);
    res.report = start_report(m);
    m = apply_circuit(m, tile_pattern(t, circuit_template("mlsc_to_eb.circ")));
    res.circuit_output = m;
    res.mapping = std::move(m);
  }
  finish_report(res.report, res.mapping);
  return res;
}

VerificationReport pipeline_equivalences(int lx, int ly) {
  VerificationReport rep;
  Torus t = Torus::build(lx, ly);
  auto expected = [](const std::string& kind) {
    for (const auto& row : reference_table())
      if (row.kind == kind) return row.expected;
    throw std::logic_error("no reference row for " + kind);
  };
  auto attempt = [&](const std::string& name, const std::function<CheckResult()>& body) {
    CheckResult r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.name = name;
    rep.add(r);
  };

  attempt("r15", [&] {
    CheckResult r;
    auto res = run_pipeline("r15", lx, ly);
    WeightTable got = weight_table(res.mapping);
    size_t odd_minus_y = 0;
    for (size_t i = 0; i < res.report.removed_edges.size(); i++) {
      int e = res.report.removed_edges[i];
      auto [x, y] = t.xy(e / 2);
      if (!t.is_horizontal(e) && (x + y) % 2 == 0 && res.report.fixed_letters[i] == 'Y' &&
          res.report.fixed_signs[i] == -1) {
        odd_minus_y++;
      }
    }
    size_t odd_faces = static_cast<size_t>(t.num_faces()) / 2;
    r.pass = got == expected("compact") && odd_minus_y == odd_faces && res.report.removed_edges.size() == odd_faces;
    r.detail = "weights " + got.str() + " (expected " + expected("compact").str() + "); " +
               std::to_string(odd_minus_y) + " of " + std::to_string(odd_faces) +
               " odd-face stabilizers reduced to -Y, " + std::to_string(res.report.removed_edges.size()) +
               " qubits removed";
    return r;
  });
  attempt("r125", [&] {
    CheckResult r;
    auto res = run_pipeline("r125", lx, ly);
    WeightTable got = weight_table(res.mapping);
    Ratio q = res.mapping.ratio();
    r.pass = q.num * 4 == q.den * 5 && got == expected("super_compact_direct");
    r.detail = "ratio " + q.str() + ", weights " + got.str() + " (expected " +
               expected("super_compact_direct").str() + ")";
    return r;
  });
  attempt("vc_to_eb", [&] {
    CheckResult r;
    auto eq = compare_mappings(run_pipeline("vc_to_eb", lx, ly).mapping, exact_bosonization(lx, ly));
    r.pass = eq.equal();
    r.detail = eq.str();
    if (!r.pass) r.counterexample = eq.first_mismatch;
    return r;
  });
  attempt("eb_to_jw", [&] {
    CheckResult r;
    auto res = run_pipeline("eb_to_jw", lx, ly);
    size_t left_h = 0;
    for (int e : res.mapping.qubits) left_h += t.is_horizontal(e);
    auto eq = compare_mappings(res.mapping, jordan_wigner_1d(lx, ly));
    r.pass = left_h == 0 && eq.equal();
    r.detail = std::to_string(left_h) + " horizontal qubits left, " + std::to_string(res.mapping.num_qubits()) +
               " qubits for " + std::to_string(res.mapping.num_sites) + " fermions; against Jordan-Wigner: " + eq.str();
    if (!r.pass) r.counterexample = eq.first_mismatch;
    return r;
  });
  attempt("bksf_dual", [&] {
    CheckResult r;
    auto match = relabel_closure(bksf_on_faces(bksf(lx, ly)), exact_bosonization(lx, ly));
    r.pass = match.eq.equal();
    r.detail = "letters relabeled " + match.perm[0] + "," + match.perm[1] + " (h,v): " + match.eq.str();
    if (!r.pass) r.counterexample = match.eq.first_mismatch;
    return r;
  });
  return rep;
}

}  // namespace f2q
