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

#ifndef F2Q_GF2_H
#define F2Q_GF2_H

#include <optional>
#include <vector>

#include "f2q/bitvec.h"

namespace f2q {

/// Incremental row echelon basis over GF(2) that remembers, for each basis row, which inserted
/// vectors were combined to produce it. Pivots are the lowest set column, so column order is the
/// elimination order.
class Gf2Solver {
 public:
  explicit Gf2Solver(size_t num_columns) : cols_(num_columns), pivot_row_(num_columns, -1) {}

  /// Inserts v as vector number size(). Returns the dependency (as a combination of earlier
  /// inserts plus this one) when v is already in the span.
  std::optional<std::vector<size_t>> add(const BitVec& v);

  /// Combination of inserted vectors summing to v, if v is in the span.
  std::optional<std::vector<size_t>> solve(const BitVec& v) const;

  bool in_span(const BitVec& v) const;
  size_t rank() const { return rows_.size(); }
  size_t size() const { return inserted_; }

 private:
  struct Row {
    BitVec vec;
    std::vector<size_t> combo;  // sorted indices of inserted vectors
  };
  static void xor_combo(std::vector<size_t>& a, const std::vector<size_t>& b);

  size_t cols_;
  size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<long> pivot_row_;
};

size_t gf2_rank(const std::vector<BitVec>& rows);

}  // namespace f2q

#endif
