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

#ifndef F2Q_BITVEC_H
#define F2Q_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace f2q {

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  size_t num_words() const { return words_.size(); }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v = true) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (size_t k = 0; k < words_.size(); k++) words_[k] ^= o.words_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (size_t k = 0; k < words_.size(); k++) words_[k] &= o.words_[k];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (size_t k = 0; k < words_.size(); k++) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  /// Parity of |a & b| without materializing the intersection.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    uint64_t acc = 0;
    for (size_t k = 0; k < a.words_.size(); k++) acc ^= a.words_[k] & b.words_[k];
    return std::popcount(acc) & 1;
  }
  static size_t and_count(const BitVec& a, const BitVec& b) {
    size_t c = 0;
    for (size_t k = 0; k < a.words_.size(); k++) c += std::popcount(a.words_[k] & b.words_[k]);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() if none.
  size_t first() const {
    for (size_t k = 0; k < words_.size(); k++)
      if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
    return n_;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (size_t k = 0; k < words_.size(); k++) {
      uint64_t w = words_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<size_t> ones() const {
    std::vector<size_t> out;
    for_each_set([&](size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
  }

  size_t hash() const {
    size_t h = n_;
    for (uint64_t w : words_) h = h * 0x9E3779B97F4A7C15ull + std::hash<uint64_t>{}(w);
    return h;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace f2q

#endif
