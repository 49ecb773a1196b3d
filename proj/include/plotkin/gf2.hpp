#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

/// Largest subspace dimension that may be materialized word by word.
inline constexpr std::size_t default_enumeration_cap = 20;

/// The enumeration cap in effect: PLOTKIN_MAX_ENUM (a dimension, so 20
/// means 2^20 words) when set to a valid integer, the default otherwise.
inline std::size_t enumeration_cap() {
  const char* env = std::getenv("PLOTKIN_MAX_ENUM");
  if (env == nullptr) return default_enumeration_cap;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value > 40) return default_enumeration_cap;
  return value;
}

/// Reduced row echelon basis of a subspace of F^n.
///
/// Rows are sorted by pivot (leftmost 1), and every pivot column is zero in
/// all other rows. The form is unique per subspace, so two bases compare
/// equal exactly when they span the same space.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t n) : n_(n) {}

  std::size_t length() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::span<const Word> rows() const noexcept { return rows_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  /// Clears every pivot coordinate of w; w ends up zero iff it was in the span.
  void reduce(Word& w) const {
    if (w.length() != n_) throw length_mismatch(n_, w.length());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (w.test(pivots_[i])) w ^= rows_[i];
  }

  /// Adds w to the spanning set. Returns false if it was already in the span.
  bool insert(Word w) {
    reduce(w);
    const auto lead = w.leading_one();
    if (!lead) return false;
    const std::size_t p = *lead;
    for (auto& row : rows_)
      if (row.test(p)) row ^= w;
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(w));
    return true;
  }

  friend bool operator==(const Gf2Basis& a, const Gf2Basis& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t n_;
  std::vector<Word> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the span of `words`, all of length n.
inline Gf2Basis rref(std::span<const Word> words, std::size_t n) {
  Gf2Basis basis(n);
  for (const auto& w : words) {
    if (w.length() != n) throw length_mismatch(n, w.length());
    if (basis.dim() == n) break;
    basis.insert(w);
  }
  return basis;
}

inline Gf2Basis rref(std::span<const Word> words) {
  if (words.empty()) throw code_error("rref of an empty list needs an explicit length");
  return rref(words, words.front().length());
}

inline Gf2Basis rref(const Code& code) { return rref(code.words(), code.length()); }

inline bool in_span(const Gf2Basis& basis, Word w) {
  basis.reduce(w);
  return w.is_zero();
}

/// All 2^dim vectors of the span, visited in Gray-code order and returned as a Code.
inline Code span_enumerate(const Gf2Basis& basis, std::size_t cap = enumeration_cap()) {
  if (basis.dim() > cap)
    throw cap_exceeded("span of dimension " + std::to_string(basis.dim()) + " exceeds the enumeration cap of 2^" +
                       std::to_string(cap) + " words");
  const auto rows = basis.rows();
  const std::size_t count = std::size_t{1} << basis.dim();
  std::vector<Word> out;
  out.reserve(count);
  Word current(basis.length());
  out.push_back(current);
  for (std::size_t k = 1; k < count; ++k) {
    current ^= rows[static_cast<std::size_t>(std::countr_zero(k))];
    out.push_back(current);
  }
  return Code::from_words(std::move(out), basis.length());
}

}  // namespace plotkin
