#pragma once

// Fixed-width binary word over F_2^N, bit-packed into 64-bit words.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdmlab {

class BitVector {
 public:
  BitVector() = default;

  // All-zero vector of the given length.
  explicit BitVector(std::size_t length);

  // Parse from a string of '0'/'1' characters, most significant position
  // first (index 0 is the leftmost character).
  static BitVector from_string(std::string_view bits);

  // Vector with every bit drawn fair from `gen`, one 64-bit word at a time.
  static BitVector random(std::size_t length, std::mt19937_64& gen);

  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool bit(std::size_t index) const;
  void set_bit(std::size_t index, bool value);
  void flip_bit(std::size_t index);
  BitVector with_bit_flipped(std::size_t index) const;

  std::size_t popcount() const noexcept;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;  // excess high bits kept zero
};

// Count of differing positions. Throws LengthMismatch on unequal lengths.
std::size_t hamming(const BitVector& a, const BitVector& b);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace sdmlab
