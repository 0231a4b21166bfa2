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

#include "f2q/pauli.h"

#include <sstream>

namespace f2q {

namespace {

void require_same(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw RegistryMismatch("pauli registries differ: " + std::to_string(p.num_qubits()) + " vs " +
                           std::to_string(q.num_qubits()));
  }
}

}  // namespace

PauliOperator::PauliOperator(int xz_phase, BitVec x, BitVec z)
    : k_(xz_phase & 3), x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw RegistryMismatch("x and z blocks differ in length");
}

PauliOperator PauliOperator::single(size_t n, size_t q, char letter) {
  if (q >= n) throw std::out_of_range("site " + std::to_string(q) + " outside registry");
  PauliOperator p(n);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x_.set(q);
      break;
    case 'Z':
      p.z_.set(q);
      break;
    case 'Y':
      p.x_.set(q);
      p.z_.set(q);
      p.k_ = 1;
      break;
    default:
      throw std::invalid_argument(std::string("bad pauli letter '") + letter + "'");
  }
  return p;
}

PauliOperator PauliOperator::from_sites(size_t n, const std::vector<std::pair<size_t, char>>& sites,
                                        int phase_exp) {
  PauliOperator p(n);
  for (const auto& [q, c] : sites) {
    if (q >= n) throw std::out_of_range("site " + std::to_string(q) + " outside registry");
    if (p.x_.get(q) || p.z_.get(q)) throw std::invalid_argument("repeated site in pauli literal");
    p.x_.set(q, c == 'X' || c == 'Y');
    p.z_.set(q, c == 'Z' || c == 'Y');
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument(std::string("bad pauli letter '") + c + "'");
    }
  }
  return p.with_phase_exp(phase_exp);
}

int PauliOperator::phase_exp() const {
  size_t ny = BitVec::and_count(x_, z_);
  return static_cast<int>((k_ - static_cast<long>(ny % 4) + 4) & 3);
}

PauliOperator PauliOperator::with_phase_exp(int e) const {
  size_t ny = BitVec::and_count(x_, z_);
  return PauliOperator(static_cast<int>((e + static_cast<long>(ny % 4)) & 3), x_, z_);
}

char PauliOperator::letter(size_t q) const {
  bool a = x_.get(q), b = z_.get(q);
  return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

size_t PauliOperator::weight() const { return (x_ | z_).popcount(); }

std::vector<size_t> PauliOperator::support() const { return (x_ | z_).ones(); }

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
  require_same(*this, o);
  // X^a Z^b X^c Z^d = (-1)^{|b&c|} X^{a+c} Z^{b+d}
  int k = k_ + o.k_ + (BitVec::and_parity(z_, o.x_) ? 2 : 0);
  return PauliOperator(k & 3, x_ ^ o.x_, z_ ^ o.z_);
}

bool PauliOperator::operator<(const PauliOperator& o) const {
  if (x_ == o.x_) {
    if (z_ == o.z_) return k_ < o.k_;
    return z_ < o.z_;
  }
  return x_ < o.x_;
}

PauliOperator PauliOperator::with_letter(size_t q, char letter) const {
  int e = phase_exp();
  PauliOperator r(0, x_, z_);
  r.x_.set(q, letter == 'X' || letter == 'Y');
  r.z_.set(q, letter == 'Z' || letter == 'Y');
  return r.with_phase_exp(e);
}

PauliOperator PauliOperator::remap(const std::vector<long>& new_index, size_t new_n) const {
  if (new_index.size() != num_qubits()) throw RegistryMismatch("remap table has wrong length");
  int e = phase_exp();
  BitVec nx(new_n), nz(new_n);
  for (size_t q : support()) {
    long t = new_index[q];
    if (t < 0) throw std::logic_error("remap drops a site the operator acts on");
    nx.set(t, x_.get(q));
    nz.set(t, z_.get(q));
  }
  return PauliOperator(0, std::move(nx), std::move(nz)).with_phase_exp(e);
}

BitVec PauliOperator::symplectic() const {
  size_t n = num_qubits();
  BitVec v(2 * n);
  x_.for_each_set([&](size_t q) { v.set(q); });
  z_.for_each_set([&](size_t q) { v.set(n + q); });
  return v;
}

PauliOperator pauli_mul(const PauliOperator& p, const PauliOperator& q) { return p * q; }

int pauli_commutation_scalar(const PauliOperator& p, const PauliOperator& q) {
  require_same(p, q);
  bool odd = BitVec::and_parity(p.xs(), q.zs()) ^ BitVec::and_parity(p.zs(), q.xs());
  return odd ? -1 : 1;
}

std::string to_text(const PauliOperator& p, const SiteNamer& namer) {
  std::ostringstream out;
  out << "i^" << p.phase_exp();
  for (size_t q : p.support()) {
    out << ' ';
    if (namer) {
      out << namer(q);
    } else {
      out << q;
    }
    out << ':' << p.letter(q);
  }
  return out.str();
}

PauliOperator parse_pauli(const std::string& text, size_t num_qubits) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok.size() != 3 || tok[0] != 'i' || tok[1] != '^' || tok[2] < '0' ||
      tok[2] > '3') {
    throw std::invalid_argument("pauli text must start with i^k: '" + text + "'");
  }
  int e = tok[2] - '0';
  std::vector<std::pair<size_t, char>> sites;
  long last = -1;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon + 2 != tok.size()) {
      throw std::invalid_argument("bad pauli factor '" + tok + "'");
    }
    long q = std::stol(tok.substr(0, colon));
    if (q <= last) throw std::invalid_argument("pauli sites must ascend: '" + text + "'");
    last = q;
    sites.emplace_back(static_cast<size_t>(q), tok[colon + 1]);
  }
  return PauliOperator::from_sites(num_qubits, sites, e);
}

}  // namespace f2q
