#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

/// (n, M, d) plus the two linearity measures.
///
/// `d` is empty for a single-word code: minimum distance is only defined
/// over pairs of different codewords. `contains_zero` is reported because
/// the kernel is a subcode only when the zero word is a codeword; for other
/// codes the kernel is still computed by its definition.
struct CodeSummary {
  std::size_t n = 0;
  std::size_t M = 0;
  std::optional<std::size_t> d;
  std::size_t rank = 0;
  std::size_t ker_dim = 0;
  bool is_linear = false;
  bool contains_zero = false;

  friend bool operator==(const CodeSummary&, const CodeSummary&) = default;
};

/// Ker(C) both as a set and as its canonical basis.
struct Kernel {
  Code words;
  Gf2Basis basis;
};

inline std::size_t min_distance_pairwise(const Code& code) {
  if (code.size() < 2) throw code_error("distance undefined: code has fewer than two words");
  const auto words = code.words();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, hamming_distance(words[i], words[j]));
      if (best == 1) return best;
    }
  return best;
}

/// Smallest weight of a nonzero codeword. Equals the minimum distance only for linear codes.
inline std::size_t min_nonzero_weight(const Code& code) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& w : code)
    if (!w.is_zero()) best = std::min(best, w.weight());
  if (best == std::numeric_limits<std::size_t>::max()) throw code_error("distance undefined: no nonzero codeword");
  return best;
}

inline std::size_t rank(const Code& code) { return rref(code).dim(); }

inline bool is_linear(const Code& code, std::size_t code_rank) {
  return code_rank < 64 && code.size() == (std::size_t{1} << code_rank);
}

/// C is linear iff |C| = 2^rank(C), because C is always inside its span.
inline bool is_linear(const Code& code) { return is_linear(code, rank(code)); }

inline std::size_t min_distance(const Code& code) {
  if (code.size() < 2) throw code_error("distance undefined: code has fewer than two words");
  return is_linear(code) ? min_nonzero_weight(code) : min_distance_pairwise(code);
}

/// Ker(C) = { x : C + x = C }.
///
/// Any kernel vector x maps the first codeword c0 onto some codeword, so x
/// lies in C + c0 and only those |C| candidates need testing. Candidates
/// already spanned by kernel vectors found so far are members without a
/// test, since the kernel is closed under addition.
inline Kernel kernel(const Code& code) {
  const Word& c0 = code.front();
  Gf2Basis basis(code.length());
  for (const auto& c : code) {
    Word x = c ^ c0;
    if (in_span(basis, x)) continue;
    if (translation_invariant(code, x)) basis.insert(std::move(x));
  }
  // |Ker(C)| <= |C|, so materializing it is never larger than the code.
  Code words = span_enumerate(basis, basis.dim());
  return Kernel{std::move(words), std::move(basis)};
}

/// Summary from an already computed kernel and span basis of `code`.
inline CodeSummary summarize(const Code& code, const Kernel& code_kernel, const Gf2Basis& span) {
  CodeSummary s;
  s.n = code.length();
  s.M = code.size();
  s.rank = span.dim();
  s.ker_dim = code_kernel.basis.dim();
  s.is_linear = is_linear(code, s.rank);
  s.contains_zero = code.contains_zero();
  if (s.M >= 2) s.d = s.is_linear ? min_nonzero_weight(code) : min_distance_pairwise(code);
  return s;
}

inline CodeSummary summarize(const Code& code) { return summarize(code, kernel(code), rref(code)); }

}  // namespace plotkin
