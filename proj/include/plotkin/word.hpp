#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plotkin/error.hpp"

namespace plotkin {

/// A fixed-length vector over GF(2).
///
/// Coordinate 0 is the leftmost printed bit. Bits are packed MSB-first into
/// 64-bit blocks, so coordinate i lives in block i / 64 at bit 63 - i % 64.
/// With that layout lexicographic order on bit strings is plain numeric
/// order on the block sequence. Storage past `length()` is always zero.
class Word {
 public:
  using block_type = std::uint64_t;
  static constexpr std::size_t block_bits = 64;

  explicit Word(std::size_t length) : length_(length), blocks_(block_count(length), 0) {
    if (length == 0) throw code_error("word length must be at least 1");
  }

  static Word from_string(std::string_view bits) {
    Word w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      switch (bits[i]) {
        case '0': break;
        case '1': w.set(i); break;
        default:
          throw code_error("illegal character '" + std::string(1, bits[i]) + "' at column " +
                           std::to_string(i + 1));
      }
    }
    return w;
  }

  /// Low `length` bits of `value`, most significant first, so that
  /// from_uint(n, k) enumerates F^n in lexicographic order as k counts up.
  static Word from_uint(std::size_t length, std::uint64_t value) {
    if (length > block_bits) throw code_error("from_uint supports lengths up to 64");
    Word w(length);
    w.blocks_[0] = value << (block_bits - length);
    return w;
  }

  static Word ones(std::size_t length) {
    Word w(length);
    for (auto& b : w.blocks_) b = ~block_type{0};
    w.clear_padding();
    return w;
  }

  std::size_t length() const noexcept { return length_; }
  std::span<const block_type> blocks() const noexcept { return blocks_; }

  bool test(std::size_t i) const noexcept { return (blocks_[i / block_bits] & mask(i)) != 0; }
  void set(std::size_t i, bool value = true) noexcept {
    if (value)
      blocks_[i / block_bits] |= mask(i);
    else
      blocks_[i / block_bits] &= ~mask(i);
  }
  void flip(std::size_t i) noexcept { blocks_[i / block_bits] ^= mask(i); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
    return w;
  }

  bool is_zero() const noexcept {
    for (auto b : blocks_)
      if (b != 0) return false;
    return true;
  }

  /// Index of the leftmost 1, or nullopt for the zero word.
  std::optional<std::size_t> leading_one() const noexcept {
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k] != 0) return k * block_bits + static_cast<std::size_t>(std::countl_zero(blocks_[k]));
    return std::nullopt;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  Word& operator^=(const Word& other) {
    if (other.length_ != length_) throw length_mismatch(length_, other.length_);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] ^= other.blocks_[k];
    return *this;
  }

  friend Word operator^(Word a, const Word& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Shorter words sort first; equal lengths compare lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = length_;
    for (auto b : blocks_) {
      h = (h ^ b) * 0x9e3779b97f4a7c15ULL;
      h ^= h >> 32;
    }
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::size_t block_count(std::size_t length) { return (length + block_bits - 1) / block_bits; }
  static constexpr block_type mask(std::size_t i) { return block_type{1} << (block_bits - 1 - i % block_bits); }

  void clear_padding() noexcept {
    const std::size_t tail = length_ % block_bits;
    if (tail != 0) blocks_.back() &= ~block_type{0} << (block_bits - tail);
  }

  std::size_t length_;
  std::vector<block_type> blocks_;
};

inline Word word_xor(const Word& a, const Word& b) { return a ^ b; }

inline std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.length() != b.length()) throw length_mismatch(a.length(), b.length());
  std::size_t d = 0;
  auto x = a.blocks();
  auto y = b.blocks();
  for (std::size_t k = 0; k < x.size(); ++k) d += static_cast<std::size_t>(std::popcount(x[k] ^ y[k]));
  return d;
}

/// (a | b): a occupies coordinates [0, |a|), b the next |b|.
inline Word concat(const Word& a, const Word& b) {
  Word out(a.length() + b.length());
  for (std::size_t i = 0; i < a.length(); ++i)
    if (a.test(i)) out.set(i);
  const std::size_t offset = a.length();
  for (std::size_t i = 0; i < b.length(); ++i)
    if (b.test(i)) out.set(offset + i);
  return out;
}

}  // namespace plotkin

template <>
struct std::hash<plotkin::Word> {
  std::size_t operator()(const plotkin::Word& w) const noexcept { return w.hash(); }
};
