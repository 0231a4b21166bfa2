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

#include "f2q/gf2.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace f2q {

void Gf2Solver::xor_combo(std::vector<size_t>& a, const std::vector<size_t>& b) {
  std::vector<size_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

std::optional<std::vector<size_t>> Gf2Solver::add(const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("gf2 vector has wrong length");
  BitVec w = v;
  std::vector<size_t> combo{inserted_++};
  for (size_t p = w.first(); p < cols_; p = w.first()) {
    long r = pivot_row_[p];
    if (r < 0) {
      pivot_row_[p] = static_cast<long>(rows_.size());
      rows_.push_back(Row{std::move(w), std::move(combo)});
      return std::nullopt;
    }
    w ^= rows_[r].vec;
    xor_combo(combo, rows_[r].combo);
  }
  return combo;
}

std::optional<std::vector<size_t>> Gf2Solver::solve(const BitVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("gf2 vector has wrong length");
  BitVec w = v;
  std::vector<size_t> combo;
  for (size_t p = w.first(); p < cols_; p = w.first()) {
    long r = pivot_row_[p];
    if (r < 0) return std::nullopt;
    w ^= rows_[r].vec;
    xor_combo(combo, rows_[r].combo);
  }
  return combo;
}

bool Gf2Solver::in_span(const BitVec& v) const {
  BitVec w = v;
  for (size_t p = w.first(); p < cols_; p = w.first()) {
    long r = pivot_row_[p];
    if (r < 0) return false;
    w ^= rows_[r].vec;
  }
  return true;
}

size_t gf2_rank(const std::vector<BitVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<BitVec> basis;
  std::vector<long> pivot(rows[0].size(), -1);
  for (BitVec w : rows) {
    for (size_t p = w.first(); p < w.size(); p = w.first()) {
      if (pivot[p] < 0) {
        pivot[p] = static_cast<long>(basis.size());
        basis.push_back(std::move(w));
        break;
      }
      w ^= basis[pivot[p]];
    }
  }
  return basis.size();
}

}  // namespace f2q
