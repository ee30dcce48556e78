#include "maxint/bitset.hpp"

namespace maxint {

Bitset::Bitset(std::size_t nbits, bool value)
    : nbits_(nbits), words_((nbits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && (nbits & 63) != 0) {
    words_.back() &= (std::uint64_t{1} << (nbits & 63)) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return npos;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

bool Bitset::has_outside(const Bitset& other) const { return !is_subset_of(other); }

std::vector<std::size_t> Bitset::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Bitset::hash() const {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (a.nbits_ != b.nbits_) return a.nbits_ <=> b.nbits_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace maxint
