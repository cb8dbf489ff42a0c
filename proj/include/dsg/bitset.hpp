// Copyright 2026 The dsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSG_BITSET_HPP_
#define DSG_BITSET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dsg {

/**
 * Fixed-size dynamic bitset used for subgroup member sets, inclusion rows and
 * graph adjacency. Bits beyond size() are always zero, so word-level equality
 * and hashing are meaningful.
 */
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t find_first() const { return find_from_word(0); }
  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= size_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    if (w) return (wi << 6) + std::countr_zero(w);
    return find_from_word(wi + 1);
  }
  std::size_t find_last() const {
    for (std::size_t wi = words_.size(); wi-- > 0;)
      if (words_[wi]) return (wi << 6) + 63 - std::countl_zero(words_[wi]);
    return npos;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset complement() const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  // First set bit of (*this & o), or npos.
  std::size_t first_common(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (auto w = words_[i] & o.words_[i]) return (i << 6) + std::countr_zero(w);
    return npos;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Orders sets by their sorted member lists: at the first differing index,
  // the set containing it is the smaller one.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  std::size_t find_from_word(std::size_t wi) const {
    for (; wi < words_.size(); ++wi)
      if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
    return npos;
  }
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    return static_cast<std::size_t>(b.hash());
  }
};

}  // namespace dsg

#endif  // DSG_BITSET_HPP_
