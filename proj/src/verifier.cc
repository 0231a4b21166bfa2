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

#include "f2q/verifier.h"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "f2q/catalog.h"

namespace f2q {

void WeightRange::add(size_t w) {
  if (empty) {
    lo = hi = w;
    empty = false;
  } else {
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
}

std::string WeightRange::str() const {
  if (empty) return "-";
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + "-" + std::to_string(hi);
}

WeightRange parse_weight_range(const std::string& s) {
  WeightRange r;
  if (s == "-") return r;
  auto number = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad weight range '" + s + "'");
    return static_cast<size_t>(std::stoul(t));
  };
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    r.add(number(s));
    return r;
  }
  size_t lo = number(s.substr(0, dash)), hi = number(s.substr(dash + 1));
  if (lo > hi) throw std::invalid_argument("bad weight range '" + s + "'");
  r.add(lo);
  r.add(hi);
  return r;
}

std::string WeightTable::str() const {
  return ratio.str() + " " + parity.str() + " " + hopping.str() + " " + stabilizer.str();
}

bool WeightTable::operator==(const WeightTable& o) const {
  return ratio.num * o.ratio.den == o.ratio.num * ratio.den && parity == o.parity && hopping == o.hopping &&
         stabilizer == o.stabilizer;
}

WeightTable weight_table(const Mapping& m) {
  WeightTable t;
  t.ratio = m.ratio();
  for (const auto& p : m.parity) t.parity.add(p.image.weight());
  for (const auto& s : m.stabilizers) t.stabilizer.add(s.weight());
  auto par = m.parity_of_site();
  size_t np = m.hopping.size();
  for (size_t e = 0; e < m.hopping.size(); e++) {
    const auto& h = m.hopping[e];
    std::vector<size_t> gens = {e, np + par.at(h.site_a), np + par.at(h.site_b)};
    for (int ta = 0; ta < 2; ta++) {
      for (int tb = 0; tb < 2; tb++) {
        auto img = encode_with(m, majorana(1, {2 * h.site_a + ta, 2 * h.site_b + tb}), gens);
        if (!img) throw ConsistencyError("edge bilinear not generated by its hopping and parities");
        t.hopping.add(minimize_weight(*img, m.stabilizers, 3).weight());
      }
    }
  }
  return t;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

std::string VerificationReport::lines() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "CHECK " << c.name << (c.pass ? " PASS " : " FAIL ") << c.detail;
    if (!c.pass && !c.counterexample.empty()) out << " | " << c.counterexample;
    out << "\n";
  }
  return out.str();
}

namespace {

std::string gen_label(const Mapping& m, size_t i) {
  if (i < m.hopping.size()) return "hopping[" + std::to_string(i) + "]";
  return "parity[" + std::to_string(i - m.hopping.size()) + "]";
}

}  // namespace

VerificationReport check_homomorphism(const Mapping& m, int jobs) {
  size_t ng = m.num_generators();
  std::atomic<size_t> next{0};
  std::atomic<long> violations{0};
  std::mutex mu;
  std::string first;
  size_t first_i = ng;
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < ng;) {
      const auto& gi = m.generator(i);
      std::string bad;
      int ph = gi.image.phase_exp();
      if (ph % 2 != 0) bad = gen_label(m, i) + " image is not Hermitian";
      for (size_t j = i + 1; j < ng; j++) {
        const auto& gj = m.generator(j);
        int f = majorana_commutation_scalar(gi.mono, gj.mono);
        int q = pauli_commutation_scalar(gi.image, gj.image);
        if (f != q) {
          violations++;
          if (bad.empty()) bad = gen_label(m, i) + " vs " + gen_label(m, j) + ": fermion " + std::to_string(f) +
                ", qubit " + std::to_string(q) + "; " + to_text(gi.mono) + " -> " +
                to_text(gi.image, m.namer()) + " ; " + to_text(gj.mono) + " -> " + to_text(gj.image, m.namer());
        }
      }
      if (ph % 2 != 0) violations++;
      if (!bad.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < first_i) {
          first_i = i;
          first = bad;
        }
      }
    }
  };
  int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < n; k++) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  CheckResult r;
  r.name = "algebra";
  r.pass = violations == 0;
  r.detail = std::to_string(ng) + " generators, " + std::to_string(ng * (ng - 1) / 2) + " pairs, " +
             std::to_string(violations.load()) + " violations";
  r.counterexample = first;
  VerificationReport rep;
  rep.add(r);
  return rep;
}

VerificationReport check_stabilizers(const Mapping& m) {
  CheckResult r;
  r.name = "stabilizers";
  size_t bad = 0;
  for (size_t a = 0; a < m.stabilizers.size(); a++) {
    const auto& s = m.stabilizers[a];
    if (s.phase_exp() % 2 != 0) {
      if (!bad++) r.counterexample = "stabilizer[" + std::to_string(a) + "] is not Hermitian";
    }
    for (size_t b = a + 1; b < m.stabilizers.size(); b++) {
      if (pauli_commutation_scalar(s, m.stabilizers[b]) < 0 && !bad++) {
        r.counterexample = "stabilizer[" + std::to_string(a) + "] vs stabilizer[" + std::to_string(b) + "]";
      }
    }
    for (size_t g = 0; g < m.num_generators(); g++) {
      if (pauli_commutation_scalar(s, m.generator(g).image) < 0 && !bad++) {
        r.counterexample = "stabilizer[" + std::to_string(a) + "] vs " + gen_label(m, g);
      }
    }
  }
  // Dependencies among the generators must multiply to +I.
  Gf2Solver solver(2 * m.num_qubits());
  for (const auto& s : m.stabilizers) {
    if (auto dep = solver.add(s.symplectic())) {
      PauliOperator acc = PauliOperator::identity(m.num_qubits());
      for (size_t j : *dep) acc = acc * m.stabilizers[j];
      if (!acc.is_identity() && !bad++) r.counterexample = "stabilizer group contains " + to_text(acc);
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(m.stabilizers.size()) + " generators, rank " + std::to_string(solver.rank()) +
             ", " + std::to_string(bad) + " violations";
  VerificationReport rep;
  rep.add(r);
  return rep;
}

std::vector<std::vector<int>> contractible_cycles(const Mapping& m, int max_perimeter) {
  // Incident hoppings per site, with the displacement of walking away from that site.
  std::vector<std::vector<std::pair<int, int>>> inc(m.num_sites);  // (hopping, other site)
  for (size_t e = 0; e < m.hopping.size(); e++) {
    inc.at(m.hopping[e].site_a).push_back({static_cast<int>(e), m.hopping[e].site_b});
    inc.at(m.hopping[e].site_b).push_back({static_cast<int>(e), m.hopping[e].site_a});
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(m.num_sites, 0);
  int start = 0;
  std::function<void(int, int, int)> dfs = [&](int s, int dx, int dy) {
    for (auto [e, t] : inc[s]) {
      if (!path.empty() && path.back() == e) continue;
      const auto& h = m.hopping[e];
      int sx = h.site_a == s ? h.disp[0] : -h.disp[0];
      int sy = h.site_a == s ? h.disp[1] : -h.disp[1];
      if (t == start && dx + sx == 0 && dy + sy == 0 && !path.empty()) {
        std::vector<int> cyc = path;
        cyc.push_back(e);
        std::vector<int> key = cyc;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) == key.end() && seen.insert(key).second) out.push_back(cyc);
        continue;
      }
      if (t <= start || on[t] || static_cast<int>(path.size()) + 1 >= max_perimeter) continue;
      on[t] = 1;
      path.push_back(e);
      dfs(t, dx + sx, dy + sy);
      path.pop_back();
      on[t] = 0;
    }
  };
  for (start = 0; start < m.num_sites; start++) {
    on[start] = 1;
    dfs(start, 0, 0);
    on[start] = 0;
  }
  return out;
}

std::vector<size_t> cycle_relation(const Mapping& m, const std::vector<int>& cycle) {
  std::vector<size_t> gens;
  MajoranaMonomial mono;
  for (int e : cycle) {
    gens.push_back(static_cast<size_t>(e));
    mono = majorana_mul(mono, m.hopping.at(e).mono);
  }
  auto par = m.parity_of_site();
  std::set<int> sites;
  for (int q : mono.modes) sites.insert(q / 2);
  for (int f : sites) gens.push_back(m.hopping.size() + par.at(f));
  return gens;
}

VerificationReport check_loops(const Mapping& m, int max_perimeter) {
  CheckResult r;
  r.name = "loops";
  StabilizerGroup group(m.stabilizers, m.num_qubits());
  auto cycles = contractible_cycles(m, max_perimeter);
  size_t bad = 0, faces = 0;
  for (const auto& cyc : cycles) {
    if (cyc.size() <= 4) faces++;
    auto gens = cycle_relation(m, cyc);
    std::string why;
    try {
      PauliOperator rel = relation_image(m, gens);
      if (!group.contains(rel)) {
        auto like = group.element_like(rel);
        why = like ? "phase mismatch: relation is " + to_text(rel, m.namer())
                   : "relation " + to_text(rel, m.namer()) + " is not in the stabilizer group";
      }
    } catch (const ConsistencyError& e) {
      why = e.what();
    }
    if (!why.empty() && !bad++) {
      std::ostringstream c;
      c << "loop [";
      for (size_t k = 0; k < cyc.size(); k++) c << (k ? " " : "") << cyc[k];
      c << "]: " << why;
      r.counterexample = c.str();
    }
  }
  r.pass = bad == 0 && !(m.hopping.size() > 0 && cycles.empty());
  r.detail = std::to_string(cycles.size()) + " contractible loops up to perimeter " + std::to_string(max_perimeter) +
             " (" + std::to_string(faces) + " of perimeter <= 4), " + std::to_string(bad) + " violations";
  if (cycles.empty() && !m.hopping.empty()) r.counterexample = "no contractible loops found";
  VerificationReport rep;
  rep.add(r);
  return rep;
}

int degeneracy_log2(const Mapping& m) {
  std::vector<BitVec> rows;
  for (const auto& s : m.stabilizers) rows.push_back(s.symplectic());
  for (const auto& p : m.parity) rows.push_back(p.image.symplectic());
  return static_cast<int>(m.num_qubits()) - static_cast<int>(gf2_rank(rows));
}

long degeneracy(const Mapping& m) { return 1L << degeneracy_log2(m); }

VerificationReport check_degeneracy(const Mapping& m) {
  CheckResult r;
  r.name = "degeneracy";
  long d = degeneracy(m);
  if (m.stabilizers.empty()) {
    r.pass = true;
    r.detail = "degeneracy " + std::to_string(d) + " (no stabilizers, exempt)";
  } else {
    r.pass = d == 4;
    r.detail = "degeneracy " + std::to_string(d) + " (expected 4)";
  }
  VerificationReport rep;
  rep.add(r);
  return rep;
}

VerificationReport check_weights(const Mapping& m, const WeightTable* expected) {
  CheckResult r;
  r.name = "weights";
  WeightTable t = weight_table(m);
  r.detail = "ratio/parity/hopping/stabilizer " + t.str();
  if (expected) {
    bool same = t.ratio.num * expected->ratio.den == expected->ratio.num * t.ratio.den &&
                t.parity == expected->parity && t.hopping == expected->hopping &&
                t.stabilizer == expected->stabilizer;
    r.pass = same;
    r.detail += " (expected " + expected->str() + ")";
  }
  VerificationReport rep;
  rep.add(r);
  return rep;
}

int oracle_max_qubits_from_env() {
  const char* v = std::getenv("F2Q_ORACLE_MAX_QUBITS");
  if (!v || !*v) return 14;
  return std::atoi(v);
}

namespace {

// A Pauli string as a dense monomial matrix: column b has its single nonzero entry i^ph[b] in
// row tgt[b]. Built from single-site 2x2 matrices, never from the engine's internal phase form.
struct Dense {
  std::vector<uint32_t> tgt;
  std::vector<uint8_t> ph;
};

Dense dense_identity(size_t n) {
  Dense d;
  d.tgt.resize(size_t{1} << n);
  d.ph.assign(d.tgt.size(), 0);
  for (size_t b = 0; b < d.tgt.size(); b++) d.tgt[b] = static_cast<uint32_t>(b);
  return d;
}

Dense dense_of(const PauliOperator& p) {
  size_t n = p.num_qubits();
  Dense d = dense_identity(n);
  int base = p.phase_exp();
  for (size_t b = 0; b < d.tgt.size(); b++) {
    uint32_t t = static_cast<uint32_t>(b);
    int ph = base;
    for (size_t q = 0; q < n; q++) {
      int bit = (b >> q) & 1;
      switch (p.letter(q)) {
        case 'X':
          t ^= 1u << q;
          break;
        case 'Y':  // Y|0> = i|1>, Y|1> = -i|0>
          t ^= 1u << q;
          ph += bit ? 3 : 1;
          break;
        case 'Z':
          ph += bit ? 2 : 0;
          break;
        default:
          break;
      }
    }
    d.tgt[b] = t;
    d.ph[b] = static_cast<uint8_t>(ph & 3);
  }
  return d;
}

// a * b (b acts first).
Dense dense_mul(const Dense& a, const Dense& b) {
  Dense c;
  c.tgt.resize(b.tgt.size());
  c.ph.resize(b.tgt.size());
  for (size_t k = 0; k < b.tgt.size(); k++) {
    uint32_t mid = b.tgt[k];
    c.tgt[k] = a.tgt[mid];
    c.ph[k] = static_cast<uint8_t>((a.ph[mid] + b.ph[k]) & 3);
  }
  return c;
}

bool dense_equal(const Dense& a, const Dense& b) { return a.tgt == b.tgt && a.ph == b.ph; }

// Trace as counts of the four phases (i^0..i^3) on the diagonal.
std::array<long, 4> dense_trace(const Dense& a) {
  std::array<long, 4> t{0, 0, 0, 0};
  for (size_t k = 0; k < a.tgt.size(); k++)
    if (a.tgt[k] == k) t[a.ph[k]]++;
  return t;
}

std::complex<long> trace_value(const std::array<long, 4>& t) { return {t[0] - t[2], t[1] - t[3]}; }

PauliOperator random_pauli(size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3), phase(0, 3);
  std::vector<std::pair<size_t, char>> sites;
  for (size_t q = 0; q < n; q++) {
    int l = letter(rng);
    if (l) sites.emplace_back(q, "IXYZ"[l]);
  }
  return PauliOperator::from_sites(n, sites, phase(rng));
}

// Sum over all products of the listed commuting generators of tr(product * extra).
std::complex<long> subset_trace_sum(const std::vector<Dense>& gens, const Dense* extra, size_t n) {
  Dense cur = extra ? *extra : dense_identity(n);
  std::complex<long> sum = trace_value(dense_trace(cur));
  size_t r = gens.size();
  for (size_t i = 1; i < (size_t{1} << r); i++) {
    size_t j = static_cast<size_t>(__builtin_ctzll(i));
    cur = dense_mul(gens[j], cur);
    sum += trace_value(dense_trace(cur));
  }
  return sum;
}

}  // namespace

VerificationReport oracle_check(const Mapping& m, const OracleOptions& opts) {
  size_t n = m.num_qubits();
  if (static_cast<int>(n) > opts.max_qubits) {
    throw OracleSizeError("mapping has " + std::to_string(n) + " qubits, oracle cap is " +
                          std::to_string(opts.max_qubits));
  }
  VerificationReport rep;

  // (a) random products and commutators.
  {
    CheckResult r;
    r.name = "oracle.products";
    std::mt19937_64 rng(opts.seed);
    size_t bad = 0;
    for (int k = 0; k < opts.random_pairs; k++) {
      PauliOperator p = random_pauli(n, rng), q = random_pauli(n, rng);
      Dense dp = dense_of(p), dq = dense_of(q);
      Dense pq = dense_mul(dp, dq), qp = dense_mul(dq, dp);
      bool prod_ok = dense_equal(pq, dense_of(pauli_mul(p, q)));
      bool commute = dense_equal(pq, qp);
      bool comm_ok = commute == (pauli_commutation_scalar(p, q) > 0);
      if ((!prod_ok || !comm_ok) && !bad++) r.counterexample = to_text(p) + " ; " + to_text(q);
    }
    std::vector<Dense> imgs;
    for (size_t g = 0; g < m.num_generators(); g++) imgs.push_back(dense_of(m.generator(g).image));
    for (size_t a = 0; a < imgs.size(); a++) {
      for (size_t b = a + 1; b < imgs.size(); b++) {
        bool commute = dense_equal(dense_mul(imgs[a], imgs[b]), dense_mul(imgs[b], imgs[a]));
        int f = majorana_commutation_scalar(m.generator(a).mono, m.generator(b).mono);
        if (commute != (f > 0) && !bad++) r.counterexample = gen_label(m, a) + " vs " + gen_label(m, b);
      }
    }
    r.pass = bad == 0;
    r.detail = std::to_string(opts.random_pairs) + " random pairs and " + std::to_string(imgs.size()) +
               " images on " + std::to_string(n) + " qubits, " + std::to_string(bad) + " mismatches";
    rep.add(r);
  }

  // Independent stabilizer generators, then parity images independent of them, as dense matrices.
  std::vector<Dense> stabs, joint;
  {
    Gf2Solver solver(2 * n);
    for (const auto& s : m.stabilizers)
      if (!solver.add(s.symplectic())) stabs.push_back(dense_of(s));
    joint = stabs;
    for (const auto& p : m.parity)
      if (!solver.add(p.image.symplectic())) joint.push_back(dense_of(p.image));
  }
  long scale = 1L << stabs.size();

  // (c) code-space dimensions: stabilizers alone, and stabilizers with parities (the degeneracy).
  long dim = 0;
  {
    CheckResult r;
    r.name = "oracle.codespace";
    auto sum = subset_trace_sum(stabs, nullptr, n);
    auto jsum = subset_trace_sum(joint, nullptr, n);
    long jscale = 1L << joint.size();
    bool integral = sum.imag() == 0 && sum.real() % scale == 0 && jsum.imag() == 0 && jsum.real() % jscale == 0;
    dim = sum.real() / scale;
    long jdim = jsum.real() / jscale;
    r.pass = integral && jdim == degeneracy(m) && dim == (1L << (n - stabs.size()));
    r.detail = "stabilizer code space " + std::to_string(dim) + ", joint eigenspace with parities " +
               std::to_string(jdim) + ", degeneracy " + std::to_string(degeneracy(m));
    rep.add(r);
  }

  // (b) face-loop relations act as their fermionic scalar on the code space.
  {
    CheckResult r;
    r.name = "oracle.loops";
    auto cycles = contractible_cycles(m, 4);
    size_t bad = 0;
    for (const auto& cyc : cycles) {
      auto gens = cycle_relation(m, cyc);
      Dense prod = dense_identity(n);
      MajoranaMonomial mono;
      for (size_t g : gens) {
        prod = dense_mul(prod, dense_of(m.generator(g).image));
        mono = majorana_mul(mono, m.generator(g).mono);
      }
      // The fermionic product is the scalar i^phase; the images must multiply to it on the code space.
      auto sum = subset_trace_sum(stabs, &prod, n);
      std::complex<long> want = std::complex<long>(dim * scale, 0);
      for (int k = 0; k < (mono.phase_exp & 3); k++) want *= std::complex<long>(0, 1);
      if ((!mono.is_scalar() || sum != want) && !bad++) {
        std::ostringstream c;
        c << "loop [";
        for (size_t k = 0; k < cyc.size(); k++) c << (k ? " " : "") << cyc[k];
        c << "] trace " << sum.real() << "+" << sum.imag() << "i";
        r.counterexample = c.str();
      }
    }
    r.pass = bad == 0;
    r.detail = std::to_string(cycles.size()) + " loops of perimeter <= 4, " + std::to_string(bad) + " mismatches";
    rep.add(r);
  }
  return rep;
}

VerificationReport verify(const Mapping& m, const VerifyOptions& opts) {
  VerificationReport rep;
  for (const auto& c : opts.checks) {
    if (c == "algebra") {
      rep.append(check_homomorphism(m, opts.jobs));
      rep.append(check_stabilizers(m));
    } else if (c == "loops") {
      rep.append(check_loops(m, opts.max_perimeter));
    } else if (c == "degeneracy") {
      rep.append(check_degeneracy(m));
    } else if (c == "weights") {
      rep.append(check_weights(m, opts.expected_weights));
    } else if (c == "oracle") {
      try {
        rep.append(oracle_check(m, opts.oracle));
      } catch (const OracleSizeError& e) {
        rep.add({"oracle", true, std::string("skipped: ") + e.what(), ""});
      }
    } else {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
  return rep;
}

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = [] {
    auto row = [](std::string label, std::string kind, Ratio ratio, const char* par, const char* hop,
                  const char* stab, bool contingent) {
      TableRow r;
      r.label = std::move(label);
      r.kind = std::move(kind);
      r.expected.ratio = ratio;
      r.expected.parity = parse_weight_range(par);
      r.expected.hopping = parse_weight_range(hop);
      r.expected.stabilizer = parse_weight_range(stab);
      r.contingent = contingent;
      return r;
    };
    return std::vector<TableRow>{
        row("Verstraete-Cirac", "verstraete_cirac", {2, 1}, "1", "3-4", "6", false),
        row("BKSF", "bksf", {2, 1}, "4", "2-6", "6", false),
        row("Kitaev honeycomb", "kitaev_honeycomb", {2, 1}, "2", "2-5", "6", false),
        row("Exact bosonization", "exact_bosonization", {2, 1}, "4", "2-6", "6", false),
        row("MLSC", "mlsc", {2, 1}, "3", "3-4", "4-10", true),
        row("Compact", "compact", {3, 2}, "1", "3", "8", false),
        row("Super-compact", "super_compact_direct", {5, 4}, "1-2", "2-6", "12", false),
    };
  }();
  return rows;
}

std::vector<TableLine> reproduce_table(int lx, int ly) {
  std::vector<TableLine> out;
  for (const auto& row : reference_table()) {
    TableLine line;
    line.row = row;
    try {
      line.got = weight_table(build_mapping(row.kind, lx, ly));
      line.computed = true;
    } catch (const std::exception& e) {
      line.error = e.what();
    }
    if (row.contingent) {
      line.status = TableLine::Status::Contingent;
    } else {
      line.status = line.computed && line.got == row.expected ? TableLine::Status::Match : TableLine::Status::Mismatch;
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string format_table(const std::vector<TableLine>& lines) {
  std::ostringstream out;
  char buf[256];
  auto cells = [&](const WeightTable& t) {
    return std::vector<std::string>{t.ratio.str(), t.parity.str(), t.hopping.str(), t.stabilizer.str()};
  };
  std::snprintf(buf, sizeof buf, "%-20s %-6s %-6s %-7s %-6s   %-27s %s\n", "mapping", "ratio", "parity", "hopping",
                "stab", "expected", "status");
  out << buf;
  for (const auto& l : lines) {
    auto got = l.computed ? cells(l.got) : std::vector<std::string>{"-", "-", "-", "-"};
    std::string status;
    switch (l.status) {
      case TableLine::Status::Match:
        status = "MATCH";
        break;
      case TableLine::Status::Mismatch:
        status = "MISMATCH";
        break;
      default:
        status = std::string("CONTINGENT ") + (l.computed && l.got == l.row.expected ? "match" : "fail");
        break;
    }
    if (!l.error.empty()) status += " (" + l.error + ")";
    std::snprintf(buf, sizeof buf, "%-20s %-6s %-6s %-7s %-6s   %-27s %s\n", l.row.label.c_str(), got[0].c_str(),
                  got[1].c_str(), got[2].c_str(), got[3].c_str(), l.row.expected.str().c_str(), status.c_str());
    out << buf;
  }
  return out.str();
}

bool table_ok(const std::vector<TableLine>& lines) {
  return std::all_of(lines.begin(), lines.end(),
                     [](const TableLine& l) { return l.status != TableLine::Status::Mismatch; });
}

}  // namespace f2q
