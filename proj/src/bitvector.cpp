#include "sdmlab/bitvector.hpp"

#include <bit>
#include <cassert>

#include "sdmlab/errors.hpp"

namespace sdmlab {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}
}  // namespace

BitVector::BitVector(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set_bit(i, true);
    } else if (bits[i] != '0') {
      throw Error("BitVector::from_string: expected '0' or '1', got '" +
                  std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::random(std::size_t length, std::mt19937_64& gen) {
  BitVector v(length);
  for (auto& word : v.words_) word = gen();
  const std::size_t excess = v.words_.size() * kWordBits - length;
  if (excess > 0 && !v.words_.empty()) {
    v.words_.back() &= ~std::uint64_t{0} >> excess;
  }
  return v;
}

bool BitVector::bit(std::size_t index) const {
  assert(index < length_);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1;
}

void BitVector::set_bit(std::size_t index, bool value) {
  assert(index < length_);
  const std::uint64_t mask = std::uint64_t{1} << (index % kWordBits);
  if (value) {
    words_[index / kWordBits] |= mask;
  } else {
    words_[index / kWordBits] &= ~mask;
  }
}

void BitVector::flip_bit(std::size_t index) {
  assert(index < length_);
  words_[index / kWordBits] ^= std::uint64_t{1} << (index % kWordBits);
}

BitVector BitVector::with_bit_flipped(std::size_t index) const {
  BitVector copy = *this;
  copy.flip_bit(index);
  return copy;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t word : words_) total += std::popcount(word);
  return total;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

std::size_t hamming(const BitVector& a, const BitVector& b) {
  if (a.length() != b.length()) {
    throw LengthMismatch("hamming: lengths differ (" + std::to_string(a.length()) +
                         " vs " + std::to_string(b.length()) + ")");
  }
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += std::popcount(wa[i] ^ wb[i]);
  }
  return total;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto absorb = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (i * 8)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  absorb(v.length());
  for (std::uint64_t word : v.words()) absorb(word);
  return static_cast<std::size_t>(h);
}

}  // namespace sdmlab
