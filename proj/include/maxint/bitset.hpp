#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace maxint {

/// Dense fixed-width bit set. Used both for element sets of subgroups and
/// for atom sets inside the incidence structure.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t nbits, bool value = false);

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  std::size_t first() const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  /// this &= ~other
  Bitset& subtract(const Bitset& other);

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;
  /// true iff (this & other) is a proper subset of this, i.e. other misses some member.
  bool has_outside(const Bitset& other) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const;
  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t hash() const;

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }
  /// Deterministic total order: at the first differing position, the set
  /// containing that position sorts first.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace maxint
