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

#include "f2q/mapping.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace f2q {

std::string convention_name(Convention c) { return c == Convention::AB ? "AB" : "SP"; }

Convention parse_convention(const std::string& s) {
  if (s == "AB") return Convention::AB;
  if (s == "SP") return Convention::SP;
  throw std::invalid_argument("unknown convention '" + s + "'");
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  std::ostringstream out;
  out.precision(6);
  out << value();
  return out.str();
}

Ratio Mapping::ratio() const {
  long g = std::gcd(static_cast<long>(qubits.size()), static_cast<long>(num_sites));
  if (g == 0) return Ratio{0, 1};
  return Ratio{static_cast<long>(qubits.size()) / g, num_sites / g};
}

std::string Mapping::qubit_name(size_t q) const { return torus().edge_name(qubits.at(q)); }

SiteNamer Mapping::namer() const {
  Torus t = torus();
  std::vector<int> ids = qubits;
  return [t, ids](size_t q) { return t.edge_name(ids.at(q)); };
}

long Mapping::index_of(int lattice_id) const {
  auto it = std::lower_bound(qubits.begin(), qubits.end(), lattice_id);
  if (it == qubits.end() || *it != lattice_id) return -1;
  return it - qubits.begin();
}

std::vector<int> Mapping::parity_of_site() const {
  std::vector<int> out(num_sites, -1);
  for (size_t i = 0; i < parity.size(); i++) out.at(parity[i].site_a) = static_cast<int>(i);
  return out;
}

std::vector<std::vector<int>> Mapping::site_adjacency() const {
  std::vector<std::vector<int>> adj(num_sites);
  for (const auto& h : hopping) {
    adj.at(h.site_a).push_back(h.site_b);
    adj.at(h.site_b).push_back(h.site_a);
  }
  return adj;
}

PauliOperator relation_image(const Mapping& m, const std::vector<size_t>& gens) {
  MajoranaMonomial mono;
  PauliOperator img = PauliOperator::identity(m.num_qubits());
  for (size_t g : gens) {
    mono = majorana_mul(mono, m.generator(g).mono);
    img = img * m.generator(g).image;
  }
  if (!mono.is_scalar()) throw ConsistencyError("generator product is not a scalar");
  return img.times_i(4 - mono.phase_exp);
}

std::optional<PauliOperator> encode_with(const Mapping& m, const MajoranaMonomial& mono,
                                         const std::vector<size_t>& gens) {
  Gf2Solver solver(m.num_modes());
  for (size_t g : gens) solver.add(mode_vector(m.generator(g).mono, m.num_modes()));
  auto combo = solver.solve(mode_vector(mono, m.num_modes()));
  if (!combo) return std::nullopt;
  MajoranaMonomial acc;
  PauliOperator img = PauliOperator::identity(m.num_qubits());
  for (size_t j : *combo) {
    acc = majorana_mul(acc, m.generator(gens[j]).mono);
    img = img * m.generator(gens[j]).image;
  }
  return img.times_i(mono.phase_exp - acc.phase_exp + 4);
}

std::optional<PauliOperator> encode_lifted(const Mapping& m, const MajoranaMonomial& mono,
                                           const std::vector<std::array<int, 2>>& lifts, int radius) {
  if (lifts.size() != mono.modes.size()) throw std::invalid_argument("one lift per mode is needed");
  if (mono.modes.empty()) return PauliOperator::identity(m.num_qubits()).times_i(mono.phase_exp);
  std::map<std::array<int, 2>, int> site_at;
  for (int s = 0; s < m.num_sites; s++) site_at[m.site_pos[s]] = s;
  auto torus_site = [&](int x, int y) {
    auto it = site_at.find({((x % m.lx) + m.lx) % m.lx, ((y % m.ly) + m.ly) % m.ly});
    return it == site_at.end() ? -1 : it->second;
  };
  int x0 = lifts[0][0], x1 = x0, y0 = lifts[0][1], y1 = y0;
  for (const auto& p : lifts) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  x0 -= radius;
  y0 -= radius;
  x1 += radius;
  y1 += radius;
  int w = x1 - x0 + 1, h = y1 - y0 + 1;
  size_t num_cover_modes = 2 * static_cast<size_t>(w) * h;
  auto slot = [&](int x, int y, int parity) { return 2 * static_cast<size_t>((y - y0) * w + (x - x0)) + parity; };
  auto inside = [&](int x, int y) { return x >= x0 && x <= x1 && y >= y0 && y <= y1; };

  std::vector<size_t> gens;
  Gf2Solver solver(num_cover_modes);
  for (int y = y0; y <= y1; y++) {
    for (int x = x0; x <= x1; x++) {
      int s = torus_site(x, y);
      if (s < 0) continue;
      for (size_t i = 0; i < m.hopping.size(); i++) {
        const auto& g = m.hopping[i];
        if (g.site_a != s || !inside(x + g.disp[0], y + g.disp[1])) continue;
        if (torus_site(x + g.disp[0], y + g.disp[1]) != g.site_b) continue;
        BitVec v(num_cover_modes);
        for (int q : g.mono.modes) {
          if (q / 2 == s) v.flip(slot(x, y, q % 2));
          else v.flip(slot(x + g.disp[0], y + g.disp[1], q % 2));
        }
        solver.add(v);
        gens.push_back(i);
      }
      for (size_t i = 0; i < m.parity.size(); i++) {
        if (m.parity[i].site_a != s) continue;
        BitVec v(num_cover_modes);
        for (int q : m.parity[i].mono.modes) v.flip(slot(x, y, q % 2));
        solver.add(v);
        gens.push_back(m.hopping.size() + i);
      }
    }
  }
  BitVec target(num_cover_modes);
  for (size_t k = 0; k < lifts.size(); k++) {
    if (torus_site(lifts[k][0], lifts[k][1]) != mono.modes[k] / 2) {
      throw std::invalid_argument("lift does not project to the mode's site");
    }
    target.flip(slot(lifts[k][0], lifts[k][1], mono.modes[k] % 2));
  }
  auto combo = solver.solve(target);
  if (!combo) return std::nullopt;
  MajoranaMonomial acc;
  PauliOperator img = PauliOperator::identity(m.num_qubits());
  for (size_t j : *combo) {
    acc = majorana_mul(acc, m.generator(gens[j]).mono);
    img = img * m.generator(gens[j]).image;
  }
  if (acc.modes != mono.modes) throw ConsistencyError("lifted product does not project to the monomial");
  return img.times_i(mono.phase_exp - acc.phase_exp + 4);
}

PauliOperator encode_near(const Mapping& m, const MajoranaMonomial& mono,
                                     const std::vector<std::array<int, 2>>& lifts, int radius) {
  for (int r = radius; r <= std::max({radius, m.lx, m.ly}); r++) {
    if (auto img = encode_lifted(m, mono, lifts, r)) return *img;
  }
  std::vector<size_t> all(m.num_generators());
  for (size_t i = 0; i < all.size(); i++) all[i] = i;
  if (auto img = encode_with(m, mono, all)) return *img;
  throw ConsistencyError("monomial " + to_text(mono) + " is not generated by the mapping");
}

PauliOperator encode_local(const Mapping& m, const MajoranaMonomial& mono, int radius) {
  for (size_t g = 0; g < m.num_generators(); g++) {
    const auto& gen = m.generator(g);
    if (gen.mono.modes == mono.modes) return gen.image.times_i(mono.phase_exp - gen.mono.phase_exp + 4);
  }
  if (mono.is_scalar()) return PauliOperator::identity(m.num_qubits()).times_i(mono.phase_exp);
  // Each mode is placed at the copy of its site nearest the first one.
  auto nearest = [](int d, int n) {
    d = ((d % n) + n) % n;
    return d > n / 2 ? d - n : d;
  };
  const auto& origin = m.site_pos[mono.modes[0] / 2];
  std::vector<std::array<int, 2>> lifts;
  for (int q : mono.modes) {
    const auto& p = m.site_pos[q / 2];
    lifts.push_back({origin[0] + nearest(p[0] - origin[0], m.lx), origin[1] + nearest(p[1] - origin[1], m.ly)});
  }
  return encode_near(m, mono, lifts, radius);
}

PauliOperator encode_bilinear(const Mapping& m, int mode_a, int mode_b, const std::vector<int>& path) {
  if (mode_a == mode_b) return PauliOperator::identity(m.num_qubits()).times_i(1);
  std::set<int> sites;
  std::vector<size_t> gens;
  for (int e : path) {
    const auto& h = m.hopping.at(e);
    sites.insert(h.site_a);
    sites.insert(h.site_b);
    gens.push_back(e);
  }
  int sa = mode_a / 2, sb = mode_b / 2;
  if (path.empty()) sites.insert(sa);
  // The path must be connected and touch both endpoint sites.
  std::map<int, int> comp;
  for (int s : sites) comp[s] = s;
  std::function<int(int)> find = [&](int s) { return comp[s] == s ? s : comp[s] = find(comp[s]); };
  for (int e : path) comp[find(m.hopping[e].site_a)] = find(m.hopping[e].site_b);
  std::set<int> roots;
  for (int s : sites) roots.insert(find(s));
  if (!sites.count(sa) || !sites.count(sb) || roots.size() != 1) {
    throw std::invalid_argument("path does not connect the sites of the two modes");
  }
  auto par = m.parity_of_site();
  for (int s : sites) gens.push_back(m.hopping.size() + par.at(s));
  auto img = encode_with(m, majorana(1, {mode_a, mode_b}), gens);
  if (!img) throw ConsistencyError("bilinear not generated along the path");
  return *img;
}

StabilizerGroup::StabilizerGroup(const std::vector<PauliOperator>& gens, size_t num_qubits)
    : gens_(gens), n_(num_qubits), solver_(2 * num_qubits) {
  for (const auto& g : gens_) solver_.add(g.symplectic());
}

std::optional<PauliOperator> StabilizerGroup::element_like(const PauliOperator& p) const {
  auto combo = solver_.solve(p.symplectic());
  if (!combo) return std::nullopt;
  PauliOperator acc = PauliOperator::identity(n_);
  for (size_t j : *combo) acc = acc * gens_[j];
  return acc;
}

bool StabilizerGroup::contains(const PauliOperator& p) const {
  auto e = element_like(p);
  return e && *e == p;
}

PauliOperator minimize_weight(const PauliOperator& p, const std::vector<PauliOperator>& stabs,
                              int max_factors) {
  constexpr size_t kExhaustiveStabilizers = 12;
  BitVec supp = p.xs() | p.zs();
  std::vector<const PauliOperator*> near;
  for (const auto& s : stabs) {
    if (BitVec::and_count(supp, s.xs() | s.zs()) > 0) near.push_back(&s);
  }
  PauliOperator best = p;
  size_t bw = p.weight();
  std::function<void(size_t, int, const PauliOperator&)> rec = [&](size_t from, int left,
                                                                   const PauliOperator& cur) {
    for (size_t i = from; i < near.size(); i++) {
      PauliOperator nxt = cur * *near[i];
      size_t w = nxt.weight();
      if (w < bw) {
        bw = w;
        best = nxt;
      }
      if (left > 1) rec(i + 1, left - 1, nxt);
    }
  };
  // Small neighbourhoods are searched exhaustively, which matters on tori barely larger than the
  // operators themselves.
  if (max_factors > 0 && near.size() <= kExhaustiveStabilizers) max_factors = static_cast<int>(near.size());
  if (max_factors > 0) rec(0, max_factors, p);
  return best;
}

Pairing identity_pairing(const Mapping& m) {
  Pairing p;
  p.kind = m.kind;
  p.convention = m.convention;
  p.site_pos = m.site_pos;
  for (int f = 0; f < m.num_sites; f++) p.pairs.push_back({2 * f, 2 * f + 1});
  for (const auto& h : m.hopping) p.edges.push_back({h.site_a, h.site_b, h.disp});
  return p;
}

namespace {

MajoranaMonomial hopping_mono(Convention c, int a, int b) {
  return c == Convention::AB ? majorana(1, {2 * a, 2 * b}) : majorana(1, {2 * a, 2 * b + 1});
}

}  // namespace

// The image of a generator whose monomial and placement match mono and its lifts, if there is one.
static std::optional<PauliOperator> own_image(const Mapping& m, const MajoranaMonomial& mono,
                                              const std::vector<std::array<int, 2>>& lifts) {
  for (size_t i = 0; i < m.num_generators(); i++) {
    const Generator& g = m.generator(i);
    if (g.mono.modes != mono.modes) continue;
    if (g.site_b >= 0) {
      // Lift of each end: modes are sorted, so find which lift belongs to site_a.
      size_t ka = static_cast<size_t>(mono.modes[0] / 2 == g.site_a ? 0 : 1);
      const auto& la = lifts[ka];
      const auto& lb = lifts[1 - ka];
      if (g.site_a == g.site_b || lb[0] - la[0] != g.disp[0] || lb[1] - la[1] != g.disp[1]) continue;
    } else if (lifts[0] != lifts.back()) {
      continue;
    }
    return g.image.times_i(mono.phase_exp - g.mono.phase_exp);
  }
  return std::nullopt;
}

Mapping repair(const Mapping& m, const Pairing& p) {
  std::vector<int> seen(m.num_modes(), 0);
  for (const auto& pr : p.pairs) {
    for (int q : pr) {
      if (q < 0 || q >= static_cast<int>(m.num_modes())) throw std::invalid_argument("pairing mode out of range");
      seen[q]++;
    }
  }
  for (int c : seen) {
    if (c != 1) throw std::invalid_argument("pairing is not a perfect matching of the modes");
  }
  if (p.site_pos.size() != p.pairs.size()) throw std::invalid_argument("pairing lacks site positions");

  if ((!p.offsets.empty() && p.offsets.size() != p.pairs.size()) ||
      (!p.negated.empty() && p.negated.size() != p.pairs.size())) {
    throw std::invalid_argument("pairing offsets or signs do not match its pairs");
  }
  auto nearest = [](int d, int n) {
    d = ((d % n) + n) % n;
    return d > n / 2 ? d - n : d;
  };
  // Old monomial of a new one whose sites sit at the given plane positions, with old-mode lifts.
  auto image_at = [&](const MajoranaMonomial& mono, const std::map<int, std::array<int, 2>>& where) {
    std::vector<std::pair<int, std::array<int, 2>>> placed;
    int phase = mono.phase_exp;
    for (int q : mono.modes) {
      int f = q / 2, old = p.pairs[f][q % 2];
      auto pos = where.at(f);
      std::array<int, 2> off;
      if (!p.offsets.empty()) {
        off = p.offsets[f][q % 2];
      } else {
        const auto& sp = m.site_pos[old / 2];
        off = {nearest(sp[0] - pos[0], m.lx), nearest(sp[1] - pos[1], m.ly)};
      }
      if (!p.negated.empty() && p.negated[f][q % 2]) phase += 2;
      placed.push_back({old, {pos[0] + off[0], pos[1] + off[1]}});
    }
    // Sort into canonical order, tracking the reordering sign.
    for (size_t i = 0; i < placed.size(); i++) {
      for (size_t j = 0; j + 1 < placed.size() - i; j++) {
        if (placed[j].first > placed[j + 1].first) {
          std::swap(placed[j], placed[j + 1]);
          phase += 2;
        }
      }
    }
    MajoranaMonomial old_mono{phase % 4, {}};
    std::vector<std::array<int, 2>> lifts;
    for (auto& [q, l] : placed) {
      old_mono.modes.push_back(q);
      lifts.push_back(l);
    }
    if (auto own = own_image(m, old_mono, lifts)) return *own;
    return minimize_weight(encode_near(m, old_mono, lifts), m.stabilizers);
  };
  Mapping out;
  out.kind = p.kind;
  out.lx = m.lx;
  out.ly = m.ly;
  out.convention = p.convention;
  out.num_sites = static_cast<int>(p.pairs.size());
  out.site_pos = p.site_pos;
  out.qubits = m.qubits;
  out.stabilizers = m.stabilizers;
  for (const auto& e : p.edges) {
    Generator g;
    g.mono = hopping_mono(p.convention, e.a, e.b);
    auto pa = p.site_pos[e.a];
    g.image = image_at(g.mono, {{e.a, pa}, {e.b, {pa[0] + e.disp[0], pa[1] + e.disp[1]}}});
    g.site_a = e.a;
    g.site_b = e.b;
    g.disp = e.disp;
    out.hopping.push_back(std::move(g));
  }
  for (int f = 0; f < out.num_sites; f++) {
    Generator g;
    g.mono = majorana(3, {2 * f, 2 * f + 1});
    g.image = image_at(g.mono, {{f, p.site_pos[f]}});
    g.site_a = f;
    out.parity.push_back(std::move(g));
  }
  return out;
}

Mapping relabel_modes(const Mapping& m, const std::vector<std::pair<int, int>>& table) {
  if (table.size() != m.num_modes()) throw std::invalid_argument("mode table has wrong length");
  Mapping out = m;
  for (size_t i = 0; i < out.num_generators(); i++) {
    Generator& g = out.generator(i);
    MajoranaMonomial raw{g.mono.phase_exp, {}};
    for (int q : g.mono.modes) {
      raw.modes.push_back(table[q].first);
      if (table[q].second < 0) raw.phase_exp += 2;
    }
    g.mono = majorana_canonicalize(raw);
    if (g.site_b >= 0) {
      int a = table[m.generator(i).mono.modes[0]].first / 2;
      int b = table[m.generator(i).mono.modes[1]].first / 2;
      auto pa = out.site_pos.at(a), pb = out.site_pos.at(b);
      auto wrap = [](int d, int n) {
        d %= n;
        if (d > n / 2) d -= n;
        if (d < -n / 2) d += n;
        return d;
      };
      g.site_a = a;
      g.site_b = b;
      g.disp = {wrap(pb[0] - pa[0], m.lx), wrap(pb[1] - pa[1], m.ly)};
    } else {
      g.site_a = table[m.generator(i).mono.modes[0]].first / 2;
    }
  }
  return out;
}

Mapping relabel_sites(const Mapping& m, const std::function<int(int)>& lattice_map) {
  Mapping out = m;
  std::vector<std::pair<int, size_t>> moved;
  for (size_t q = 0; q < m.qubits.size(); q++) moved.emplace_back(lattice_map(m.qubits[q]), q);
  std::sort(moved.begin(), moved.end());
  std::vector<long> idx(m.qubits.size());
  out.qubits.clear();
  for (size_t k = 0; k < moved.size(); k++) {
    if (k > 0 && moved[k].first == moved[k - 1].first) throw std::invalid_argument("site relabeling is not injective");
    out.qubits.push_back(moved[k].first);
    idx[moved[k].second] = static_cast<long>(k);
  }
  size_t n = out.qubits.size();
  for (size_t i = 0; i < out.num_generators(); i++) {
    out.generator(i).image = out.generator(i).image.remap(idx, n);
  }
  for (auto& s : out.stabilizers) s = s.remap(idx, n);
  return out;
}

}  // namespace f2q
