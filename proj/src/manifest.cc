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

#include "f2q/manifest.h"

#include <fstream>
#include <numeric>
#include <sstream>

namespace f2q {

namespace {

std::string fraction(const Ratio& r) {
  long g = std::gcd(r.num, r.den);
  if (g == 0) g = 1;
  if (r.den / g == 1) return std::to_string(r.num / g);
  return std::to_string(r.num / g) + "/" + std::to_string(r.den / g);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_bars(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, '|')) parts.push_back(trim(cur));
  return parts;
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment; false at end of input.
  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      line_no_++;
      std::string t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      line = t;
      return true;
    }
    return false;
  }
  std::string need(const std::string& what) {
    std::string line;
    if (!next(line)) fail("unexpected end of file, expected " + what);
    return line;
  }
  bool raw(std::string& line) {
    if (!std::getline(in_, line)) return false;
    line_no_++;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ManifestError("manifest line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::string field(Reader& r, const std::string& key) {
  std::string line = r.need(key);
  std::istringstream in(line);
  std::string k, v;
  in >> k >> v;
  if (k != key || v.empty()) r.fail("expected '" + key + " <value>', got '" + line + "'");
  return v;
}

size_t section(Reader& r, const std::string& name) {
  std::string line = r.need(name);
  std::istringstream in(line);
  std::string k;
  long count = -1;
  in >> k >> count;
  if (k != name || count < 0) r.fail("expected '" + name + " <count>', got '" + line + "'");
  return static_cast<size_t>(count);
}

int parse_int(Reader& r, const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    r.fail("bad integer '" + s + "'");
  }
}

std::array<int, 2> parse_pair(Reader& r, const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) r.fail("expected x,y, got '" + s + "'");
  return {parse_int(r, s.substr(0, comma)), parse_int(r, s.substr(comma + 1))};
}

}  // namespace

int parse_edge_name(const Torus& t, const std::string& name) {
  if (name.size() < 6 || (name[0] != 'h' && name[0] != 'v') || name[1] != '(' || name.back() != ')') {
    throw std::invalid_argument("bad edge name '" + name + "'");
  }
  std::string inner = name.substr(2, name.size() - 3);
  auto comma = inner.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad edge name '" + name + "'");
  int x = std::stoi(inner.substr(0, comma)), y = std::stoi(inner.substr(comma + 1));
  if (x < 0 || x >= t.lx() || y < 0 || y >= t.ly()) throw std::invalid_argument("edge outside the torus: " + name);
  return name[0] == 'h' ? t.hedge(x, y) : t.vedge(x, y);
}

std::string write_manifest(const Mapping& m, const std::string& report) {
  std::ostringstream out;
  auto nm = m.namer();
  out << "f2q-manifest 1\n";
  out << "kind " << m.kind << "\n";
  out << "lx " << m.lx << "\n";
  out << "ly " << m.ly << "\n";
  out << "convention " << convention_name(m.convention) << "\n";
  out << "ratio " << fraction(m.ratio()) << "\n";
  out << "QUBITS " << m.qubits.size() << "\n";
  for (size_t q = 0; q < m.qubits.size(); q++) out << nm(q) << "\n";
  out << "SITES " << m.num_sites << "\n";
  for (int s = 0; s < m.num_sites; s++) out << s << " " << m.site_pos[s][0] << "," << m.site_pos[s][1] << "\n";
  out << "HOPPING " << m.hopping.size() << "\n";
  for (const auto& g : m.hopping) {
    out << g.site_a << " " << g.site_b << " " << g.disp[0] << "," << g.disp[1] << " | " << to_text(g.mono)
        << " | " << to_text(g.image, nm) << "\n";
  }
  out << "PARITY " << m.parity.size() << "\n";
  for (const auto& g : m.parity) out << g.site_a << " | " << to_text(g.mono) << " | " << to_text(g.image, nm) << "\n";
  out << "STABILIZER " << m.stabilizers.size() << "\n";
  for (const auto& s : m.stabilizers) out << to_text(s, nm) << "\n";
  if (!report.empty()) {
    out << "REPORT\n" << report;
    if (report.back() != '\n') out << "\n";
  }
  out << "END\n";
  return out.str();
}

Manifest read_manifest(std::istream& in) {
  Reader r(in);
  Manifest man;
  Mapping& m = man.mapping;
  std::string magic = r.need("header");
  if (magic != "f2q-manifest 1") r.fail("not an f2q manifest (version 1): '" + magic + "'");
  m.kind = field(r, "kind");
  m.lx = parse_int(r, field(r, "lx"));
  m.ly = parse_int(r, field(r, "ly"));
  try {
    m.convention = parse_convention(field(r, "convention"));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  std::string ratio = field(r, "ratio");
  auto build_torus = [&] {
    try {
      return Torus::build(m.lx, m.ly);
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
  };
  Torus t = build_torus();

  size_t nq = section(r, "QUBITS");
  std::map<std::string, size_t> index;
  for (size_t q = 0; q < nq; q++) {
    std::string name = r.need("qubit name");
    int e;
    try {
      e = parse_edge_name(t, name);
    } catch (const std::exception& ex) {
      r.fail(ex.what());
    }
    if (!m.qubits.empty() && e <= m.qubits.back()) r.fail("qubits must be listed in ascending edge order");
    index[name] = q;
    m.qubits.push_back(e);
  }
  // Operator text with edge names becomes text with registry indices.
  auto pauli = [&](const std::string& text) {
    std::istringstream in(text);
    std::string tok, rebuilt;
    in >> tok;
    rebuilt = tok;
    while (in >> tok) {
      auto colon = tok.rfind(':');
      if (colon == std::string::npos) r.fail("bad pauli factor '" + tok + "'");
      auto it = index.find(tok.substr(0, colon));
      if (it == index.end()) r.fail("operator acts on unregistered qubit '" + tok.substr(0, colon) + "'");
      rebuilt += " " + std::to_string(it->second) + tok.substr(colon);
    }
    try {
      return parse_pauli(rebuilt, nq);
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
  };
  auto mono = [&](const std::string& text) {
    try {
      return parse_majorana(text);
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
  };

  size_t ns = section(r, "SITES");
  m.num_sites = static_cast<int>(ns);
  for (size_t s = 0; s < ns; s++) {
    std::istringstream in(r.need("site"));
    std::string id, pos;
    in >> id >> pos;
    if (parse_int(r, id) != static_cast<int>(s)) r.fail("sites must be numbered in order");
    m.site_pos.push_back(parse_pair(r, pos));
  }
  auto site = [&](const std::string& s) {
    int v = parse_int(r, s);
    if (v < 0 || v >= m.num_sites) r.fail("site " + s + " out of range");
    return v;
  };
  size_t nh = section(r, "HOPPING");
  for (size_t i = 0; i < nh; i++) {
    auto parts = split_bars(r.need("hopping"));
    if (parts.size() != 3) r.fail("hopping lines are '<a> <b> <dx,dy> | <monomial> | <operator>'");
    std::istringstream head(parts[0]);
    std::string a, b, d;
    head >> a >> b >> d;
    Generator g;
    g.site_a = site(a);
    g.site_b = site(b);
    g.disp = parse_pair(r, d);
    g.mono = mono(parts[1]);
    g.image = pauli(parts[2]);
    m.hopping.push_back(std::move(g));
  }
  size_t np = section(r, "PARITY");
  for (size_t i = 0; i < np; i++) {
    auto parts = split_bars(r.need("parity"));
    if (parts.size() != 3) r.fail("parity lines are '<site> | <monomial> | <operator>'");
    Generator g;
    g.site_a = site(parts[0]);
    g.mono = mono(parts[1]);
    g.image = pauli(parts[2]);
    m.parity.push_back(std::move(g));
  }
  size_t nst = section(r, "STABILIZER");
  for (size_t i = 0; i < nst; i++) m.stabilizers.push_back(pauli(r.need("stabilizer")));

  std::string line = r.need("END");
  if (line == "REPORT") {
    std::string raw;
    while (true) {
      if (!r.raw(raw)) r.fail("unexpected end of file inside REPORT");
      if (trim(raw) == "END") break;
      man.report.push_back(raw);
    }
  } else if (line != "END") {
    r.fail("expected END, got '" + line + "'");
  }
  if (fraction(m.ratio()) != ratio) r.fail("header ratio " + ratio + " disagrees with the body");
  return man;
}

Manifest read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open " + path);
  return read_manifest(in);
}

void write_manifest_file(const std::string& path, const Mapping& m, const std::string& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ManifestError("cannot write " + path);
  out << write_manifest(m, report);
  if (!out) throw ManifestError("failed writing " + path);
}

}  // namespace f2q
