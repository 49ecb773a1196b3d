#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "plotkin/error.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

inline constexpr std::size_t default_max_length = 4096;

/// A binary code: a non-empty set of distinct words of one common length.
///
/// Holds a hash set for membership and a lexicographically sorted copy for
/// deterministic iteration. Immutable once built.
class Code {
 public:
  using const_iterator = std::vector<Word>::const_iterator;

  /// Deduplicates; throws on an empty list, mixed lengths, or length over `max_length`.
  static Code from_words(std::vector<Word> words, std::size_t max_length = default_max_length) {
    if (words.empty()) throw code_error("a code needs at least one word");
    const std::size_t n = words.front().length();
    if (n > max_length)
      throw cap_exceeded("word length " + std::to_string(n) + " exceeds the limit of " + std::to_string(max_length));
    for (const auto& w : words)
      if (w.length() != n) throw length_mismatch(n, w.length());
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return Code(n, std::move(words));
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  const_iterator begin() const noexcept { return words_.begin(); }
  const_iterator end() const noexcept { return words_.end(); }
  const Word& front() const noexcept { return words_.front(); }

  bool contains(const Word& w) const { return w.length() == n_ && members_.contains(w); }
  // Sorted order puts the zero word first when present.
  bool contains_zero() const noexcept { return words_.front().is_zero(); }

  friend bool operator==(const Code& a, const Code& b) { return a.words_ == b.words_; }

 private:
  Code(std::size_t n, std::vector<Word> sorted) : n_(n), words_(std::move(sorted)) {
    members_.reserve(words_.size());
    members_.insert(words_.begin(), words_.end());
  }

  std::size_t n_;
  std::vector<Word> words_;
  std::unordered_set<Word> members_;
};

inline Code code_from_words(std::vector<Word> words) { return Code::from_words(std::move(words)); }

/// C + x = { c + x : c in C }.
inline Code translate(const Code& code, const Word& x) {
  if (x.length() != code.length()) throw length_mismatch(code.length(), x.length());
  std::vector<Word> out;
  out.reserve(code.size());
  for (const auto& c : code) out.push_back(c ^ x);
  return Code::from_words(std::move(out), code.length());
}

/// True iff C + x = C. Since |C + x| = |C| it suffices that C + x is
/// contained in C; stops at the first word that leaves the code.
inline bool translation_invariant(const Code& code, const Word& x) {
  if (x.length() != code.length()) throw length_mismatch(code.length(), x.length());
  if (x.is_zero()) return true;
  for (const auto& c : code)
    if (!code.contains(c ^ x)) return false;
  return true;
}

}  // namespace plotkin
