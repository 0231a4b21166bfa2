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

#ifndef F2Q_PAULI_H
#define F2Q_PAULI_H

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2q/bitvec.h"

namespace f2q {

struct RegistryMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Pauli string i^k * X^x * Z^z over a fixed qubit registry.
///
/// Internally the phase is stored in "XZ form" (all X factors to the left of all Z factors). The
/// public phase_exp() reports the phase relative to the product of single-site Paulis X, Y, Z with
/// Y = iXZ, which is the form used for text I/O.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}
  PauliOperator(int xz_phase, BitVec x, BitVec z);

  static PauliOperator identity(size_t n) { return PauliOperator(n); }
  /// Single-site operator; letter in {I,X,Y,Z}.
  static PauliOperator single(size_t n, size_t q, char letter);
  /// Product of single-site letters times i^phase_exp (sites may be unordered but distinct).
  static PauliOperator from_sites(size_t n, const std::vector<std::pair<size_t, char>>& sites,
                                  int phase_exp = 0);

  size_t num_qubits() const { return x_.size(); }
  const BitVec& xs() const { return x_; }
  const BitVec& zs() const { return z_; }
  int xz_phase() const { return k_; }

  /// Phase relative to the product of site Paulis (Y = iXZ).
  int phase_exp() const;
  PauliOperator with_phase_exp(int e) const;
  PauliOperator negated() const { return PauliOperator((k_ + 2) & 3, x_, z_); }
  PauliOperator times_i(int e) const { return PauliOperator((k_ + e) & 3, x_, z_); }

  char letter(size_t q) const;
  size_t weight() const;
  std::vector<size_t> support() const;
  bool is_identity() const { return x_.none() && z_.none() && k_ == 0; }
  bool trivial_support() const { return x_.none() && z_.none(); }
  /// Same support and letters, phases possibly different.
  bool same_letters(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }

  PauliOperator operator*(const PauliOperator& o) const;
  PauliOperator& operator*=(const PauliOperator& o) { return *this = *this * o; }
  bool operator==(const PauliOperator& o) const { return k_ == o.k_ && x_ == o.x_ && z_ == o.z_; }
  bool operator!=(const PauliOperator& o) const { return !(*this == o); }
  bool operator<(const PauliOperator& o) const;

  /// Replaces the action on site q by letter (keeping the site-form phase of the remainder).
  PauliOperator with_letter(size_t q, char letter) const;

  /// Re-index onto a smaller registry. new_index[q] == -1 marks a dropped site, which must carry I.
  PauliOperator remap(const std::vector<long>& new_index, size_t new_n) const;

  /// Symplectic vector (x block followed by z block) used for GF(2) work.
  BitVec symplectic() const;

 private:
  int k_ = 0;
  BitVec x_, z_;
};

PauliOperator pauli_mul(const PauliOperator& p, const PauliOperator& q);
int pauli_commutation_scalar(const PauliOperator& p, const PauliOperator& q);
inline size_t pauli_weight(const PauliOperator& p) { return p.weight(); }

using SiteNamer = std::function<std::string(size_t)>;

/// `i^k <site>:<P> ...` with ascending sites; identity prints as `i^k`.
std::string to_text(const PauliOperator& p, const SiteNamer& namer = nullptr);
/// Parses the text form; sites are registry indices.
PauliOperator parse_pauli(const std::string& text, size_t num_qubits);

}  // namespace f2q

#endif
