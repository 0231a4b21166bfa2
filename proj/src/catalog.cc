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

#include "f2q/catalog.h"

#include <algorithm>
#include <set>

#include "f2q/transforms.h"

namespace f2q {

const std::vector<std::string>& catalog_kinds() {
  static const std::vector<std::string> kinds = {
      "exact_bosonization", "bksf",          "verstraete_cirac",     "kitaev_honeycomb",
      "mlsc",               "compact",       "super_compact_direct", "jordan_wigner_1d"};
  return kinds;
}

std::string normalize_kind(const std::string& kind) {
  std::string k = kind;
  std::replace(k.begin(), k.end(), '-', '_');
  for (const auto& name : catalog_kinds())
    if (name == k) return k;
  throw std::invalid_argument("unknown mapping kind '" + kind + "'");
}

int kind_size_divisor(const std::string& kind) {
  std::string k = normalize_kind(kind);
  if (k == "super_compact_direct") return 4;
  if (k == "compact" || k == "mlsc") return 2;
  return 1;
}

namespace {

using Sites = std::vector<std::pair<size_t, char>>;

Mapping face_skeleton(const std::string& kind, int lx, int ly, bool edge_qubits) {
  Torus t = Torus::build(lx, ly);
  Mapping m;
  m.kind = kind;
  m.lx = lx;
  m.ly = ly;
  m.convention = Convention::SP;
  m.num_sites = t.num_faces();
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    m.site_pos.push_back({x, y});
  }
  for (int e = 0; e < t.num_edges(); e++)
    if (edge_qubits || !t.is_horizontal(e)) m.qubits.push_back(e);
  return m;
}

// Face-site SP mapping on edge qubits from per-edge and per-face image rules.
template <typename HopH, typename HopV, typename Flux>
Mapping face_sp_mapping(const std::string& kind, int lx, int ly, HopH hop_h, HopV hop_v, Flux flux) {
  Torus t = Torus::build(lx, ly);
  Mapping m = face_skeleton(kind, lx, ly, true);
  size_t n = m.num_qubits();
  for (int e = 0; e < t.num_edges(); e++) {
    auto [x, y] = t.xy(e / 2);
    auto [l, r] = t.edge_faces(e);
    Generator g;
    g.mono = majorana(1, {2 * l, 2 * r + 1});
    g.site_a = l;
    g.site_b = r;
    if (t.is_horizontal(e)) {
      g.image = PauliOperator::from_sites(n, hop_h(t, x, y));
      g.disp = {0, -1};
    } else {
      g.image = PauliOperator::from_sites(n, hop_v(t, x, y));
      g.disp = {1, 0};
    }
    m.hopping.push_back(std::move(g));
  }
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    Generator g;
    g.mono = majorana(3, {2 * f, 2 * f + 1});
    g.site_a = f;
    g.image = PauliOperator::from_sites(n, flux(t, x, y));
    m.parity.push_back(std::move(g));
  }
  add_vertex_stabilizers(m);
  return m;
}

size_t sz(int v) { return static_cast<size_t>(v); }

}  // namespace

void add_vertex_stabilizers(Mapping& m) {
  Torus t = m.torus();
  size_t np = m.hopping.size();
  for (int c = 0; c < t.num_vertices(); c++) {
    auto [x, y] = t.xy(c);
    std::vector<size_t> gens = {np + sz(t.cell(x - 1, y - 1)), np + sz(c),
                                sz(t.vedge(x, y)),              sz(t.hedge(x, y)),
                                sz(t.vedge(x, y - 1)),          sz(t.hedge(x - 1, y))};
    m.stabilizers.push_back(relation_image(m, gens));
  }
}

void add_face_stabilizers(Mapping& m) {
  Torus t = m.torus();
  for (int f = 0; f < t.num_faces(); f++) {
    auto b = t.face_boundary(f);
    m.stabilizers.push_back(relation_image(m, {sz(b[0]), sz(b[1]), sz(b[2]), sz(b[3])}));
  }
}

Mapping exact_bosonization(int lx, int ly) {
  return face_sp_mapping(
      "exact_bosonization", lx, ly,
      [](const Torus& t, int x, int y) {
        return Sites{{t.hedge(x, y), 'X'}, {t.vedge(x, y - 1), 'Z'}};
      },
      [](const Torus& t, int x, int y) {
        return Sites{{t.vedge(x, y), 'X'}, {t.hedge(x - 1, y), 'Z'}};
      },
      [](const Torus& t, int x, int y) {
        return Sites{{t.hedge(x, y), 'Z'}, {t.vedge(x + 1, y), 'Z'}, {t.hedge(x, y + 1), 'Z'},
                     {t.vedge(x, y), 'Z'}};
      });
}

Mapping verstraete_cirac(int lx, int ly) {
  // Physical qubits on vertical edges, auxiliary qubits on horizontal edges.
  return face_sp_mapping(
      "verstraete_cirac", lx, ly,
      [](const Torus& t, int x, int y) {
        return Sites{{t.vedge(x, y), 'X'}, {t.hedge(x, y), 'Y'}, {t.vedge(x, y - 1), 'Y'},
                     {t.hedge(x, y - 1), 'X'}};
      },
      [](const Torus& t, int x, int y) {
        return Sites{{t.vedge(x, y), 'X'}, {t.vedge(x - 1, y), 'X'}, {t.hedge(x - 1, y), 'Z'}};
      },
      [](const Torus& t, int x, int y) { return Sites{{t.vedge(x, y), 'Z'}}; });
}

Mapping kitaev_honeycomb(int lx, int ly) {
  return face_sp_mapping(
      "kitaev_honeycomb", lx, ly,
      [](const Torus& t, int x, int y) {
        return Sites{{t.hedge(x, y), 'X'}, {t.vedge(x + 1, y), 'Z'}};
      },
      [](const Torus& t, int x, int y) {
        return Sites{{t.vedge(x, y), 'X'}, {t.hedge(x, y + 1), 'Z'}};
      },
      [](const Torus& t, int x, int y) {
        return Sites{{t.hedge(x, y + 1), 'Y'}, {t.vedge(x + 1, y), 'Y'}};
      });
}

Mapping bksf(int lx, int ly) {
  Torus t = Torus::build(lx, ly);
  Mapping m;
  m.kind = "bksf";
  m.lx = lx;
  m.ly = ly;
  m.convention = Convention::AB;
  m.num_sites = t.num_vertices();
  for (int v = 0; v < t.num_vertices(); v++) {
    auto [x, y] = t.xy(v);
    m.site_pos.push_back({x, y});
  }
  for (int e = 0; e < t.num_edges(); e++) m.qubits.push_back(e);
  size_t n = m.num_qubits();
  // Edge order at each vertex: south, east, north, west.
  auto rank_at = [&](int v, int e) {
    auto inc = t.vertex_edges(v);  // east, north, west, south
    static const int kRank[4] = {2, 3, 4, 1};
    for (int d = 0; d < 4; d++)
      if (inc[d] == e) return kRank[d];
    throw std::logic_error("edge not incident");
  };
  auto lower_edges = [&](int v, int e, Sites& out) {
    int r = rank_at(v, e);
    auto inc = t.vertex_edges(v);
    for (int d = 0; d < 4; d++) {
      if (inc[d] != e && rank_at(v, inc[d]) < r) out.emplace_back(inc[d], 'Z');
    }
  };
  for (int e = 0; e < t.num_edges(); e++) {
    auto [l, r] = t.edge_vertices(e);
    Sites s{{e, 'X'}};
    lower_edges(l, e, s);
    lower_edges(r, e, s);
    Generator g;
    g.mono = majorana(1, {2 * l, 2 * r});
    g.image = PauliOperator::from_sites(n, s);
    g.site_a = l;
    g.site_b = r;
    g.disp = t.is_horizontal(e) ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, -1};
    m.hopping.push_back(std::move(g));
  }
  for (int v = 0; v < t.num_vertices(); v++) {
    Sites s;
    for (int e : t.vertex_edges(v)) s.emplace_back(e, 'Z');
    Generator g;
    g.mono = majorana(3, {2 * v, 2 * v + 1});
    g.image = PauliOperator::from_sites(n, s);
    g.site_a = v;
    m.parity.push_back(std::move(g));
  }
  add_face_stabilizers(m);
  return m;
}

int jw_order(int lx, int ly, int x, int y) {
  (void)ly;
  return y * lx + (lx - 1 - x);
}

Mapping jordan_wigner_1d(int lx, int ly) {
  Torus t = Torus::build(lx, ly);
  Mapping m = face_skeleton("jordan_wigner_1d", lx, ly, false);
  size_t n = m.num_qubits();
  // Qubit of face c is v(c), registry index c. Position j in the chain holds face chain[j].
  std::vector<int> chain(t.num_faces());
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    chain[jw_order(lx, ly, x, y)] = f;
  }
  auto mode_op = [&](int mode) {
    int f = mode / 2;
    auto [x, y] = t.xy(f);
    int j = jw_order(lx, ly, x, y);
    Sites s;
    for (int i = 0; i < j; i++) s.emplace_back(chain[i], 'Z');
    s.emplace_back(f, mode % 2 == 0 ? 'X' : 'Y');
    return PauliOperator::from_sites(n, s);
  };
  auto image = [&](const MajoranaMonomial& mono) {
    PauliOperator p = PauliOperator::identity(n).times_i(mono.phase_exp);
    for (int q : mono.modes) p = p * mode_op(q);
    return p;
  };
  for (int e = 0; e < t.num_edges(); e++) {
    auto [l, r] = t.edge_faces(e);
    Generator g;
    g.mono = majorana(1, {2 * l, 2 * r + 1});
    g.image = image(g.mono);
    g.site_a = l;
    g.site_b = r;
    g.disp = t.is_horizontal(e) ? std::array<int, 2>{0, -1} : std::array<int, 2>{1, 0};
    m.hopping.push_back(std::move(g));
  }
  for (int f = 0; f < t.num_faces(); f++) {
    Generator g;
    g.mono = majorana(3, {2 * f, 2 * f + 1});
    g.image = image(g.mono);
    g.site_a = f;
    m.parity.push_back(std::move(g));
  }
  return m;
}

Mapping build_mapping(const std::string& kind, int lx, int ly) {
  std::string k = normalize_kind(kind);
  int d = kind_size_divisor(k);
  Torus::build(lx, ly);
  if (lx % d || ly % d) {
    throw SizeError(k + " needs both torus sides divisible by " + std::to_string(d) + ", got " +
                    std::to_string(lx) + "x" + std::to_string(ly));
  }
  if (k == "exact_bosonization") return exact_bosonization(lx, ly);
  if (k == "bksf") return bksf(lx, ly);
  if (k == "verstraete_cirac") return verstraete_cirac(lx, ly);
  if (k == "kitaev_honeycomb") return kitaev_honeycomb(lx, ly);
  if (k == "jordan_wigner_1d") return jordan_wigner_1d(lx, ly);
  if (k == "compact") return run_pipeline("r15", lx, ly).mapping;
  if (k == "super_compact_direct") return super_compact_direct(lx, ly);
  if (k == "mlsc") return mlsc(lx, ly);
  throw std::invalid_argument("unknown mapping kind '" + kind + "'");
}

}  // namespace f2q
