#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/invariants.hpp"
#include "plotkin/oracle.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

/// { (u | u + v) : u in first, v in second }.
///
/// The map (u, v) -> (u | u + v) is injective, so the result always has
/// |first| * |second| words.
inline Code plotkin_construct(const Code& first, const Code& second) {
  if (first.length() != second.length()) throw length_mismatch(first.length(), second.length());
  std::vector<Word> out;
  out.reserve(first.size() * second.size());
  for (const auto& u : first)
    for (const auto& v : second) out.push_back(concat(u, u ^ v));
  return Code::from_words(std::move(out), 2 * first.length());
}

/// Left and right halves of an even-length word.
inline std::pair<Word, Word> split_halves(const Word& w) {
  if (w.length() % 2 != 0) throw code_error("cannot split a word of odd length " + std::to_string(w.length()));
  const std::size_t n = w.length() / 2;
  Word left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left.set(i, w.test(i));
    right.set(i, w.test(n + i));
  }
  return {std::move(left), std::move(right)};
}

/// The kernel of the constructed code assembled from the input kernels:
/// { (x | x + y) : x in first, y in second }.
inline Code kernel_direct(const Code& first_kernel, const Code& second_kernel) {
  return plotkin_construct(first_kernel, second_kernel);
}

/// Canonical basis of { (x | x + y) : x in span(first), y in span(second) },
/// generated by (b | b) for b in first and (0 | b) for b in second.
inline Gf2Basis span_direct(const Gf2Basis& first, const Gf2Basis& second) {
  if (first.length() != second.length()) throw length_mismatch(first.length(), second.length());
  const std::size_t n = first.length();
  const Word zero(n);
  Gf2Basis out(2 * n);
  for (const auto& b : first.rows()) out.insert(concat(b, b));
  for (const auto& b : second.rows()) out.insert(concat(zero, b));
  return out;
}

/// Every (x | x + y) with x in first_kernel, y in second_kernel leaves `code` invariant.
inline bool direct_kernel_translates_code(const Code& code, const Code& first_kernel, const Code& second_kernel) {
  for (const auto& x : first_kernel)
    for (const auto& y : second_kernel)
      if (!translation_invariant(code, concat(x, x ^ y))) return false;
  return true;
}

/// Every z = (a | b) in `kernel_words` splits as x = a in first_kernel, y = a + b in second_kernel.
inline bool kernel_splits(const Code& kernel_words, const Code& first_kernel, const Code& second_kernel) {
  for (const auto& z : kernel_words) {
    auto [a, b] = split_halves(z);
    if (!first_kernel.contains(a) || !second_kernel.contains(a ^ b)) return false;
  }
  return true;
}

struct PlotkinParams {
  std::size_t length = 0;
  std::size_t cardinality = 0;
  std::optional<std::size_t> distance;
  std::size_t rank = 0;
  std::size_t ker_dim = 0;
  bool linear = false;

  friend bool operator==(const PlotkinParams&, const PlotkinParams&) = default;
};

/// (2n, M1 M2, min{2 d1, d2}, rank1 + rank2, ker1 + ker2). The distance is
/// left empty when either input is a single word. The result is linear
/// exactly when both inputs are: a linear result contains zero, which forces
/// zero into both inputs, and then |C| = 2^rank(C) forces |Ci| = 2^rank(Ci).
inline PlotkinParams predict_params(const CodeSummary& first, const CodeSummary& second) {
  if (first.n != second.n) throw length_mismatch(first.n, second.n);
  PlotkinParams p;
  p.length = 2 * first.n;
  p.cardinality = first.M * second.M;
  if (first.d && second.d) p.distance = std::min(2 * *first.d, *second.d);
  p.rank = first.rank + second.rank;
  p.ker_dim = first.ker_dim + second.ker_dim;
  p.linear = first.is_linear && second.is_linear;
  return p;
}

struct VerifyOptions {
  /// Also recompute everything with the brute-force routines and compare.
  bool oracle = false;
};

/// Outcome of checking one input pair.
///
/// When `hypothesis_ok` (zero word in both inputs) every flag must be true.
/// Outside the hypothesis the flags are informational.
struct PlotkinReport {
  std::size_t n_in = 0;
  PlotkinParams predicted;
  PlotkinParams observed;
  bool theorem_i_holds = false;
  bool theorem_ii_holds = false;
  bool corollary_i_holds = false;
  bool corollary_ii_holds = false;
  bool params_hold = false;
  bool hypothesis_ok = false;
  /// Empty unless the oracle cross-check ran.
  std::optional<bool> oracle_agrees;
  /// Ker(C) and the canonical basis of the span of C, as measured.
  std::vector<Word> kernel;
  std::vector<Word> span_basis;

  /// Name of the first clause that failed, in reporting order.
  std::optional<std::string> first_failure() const {
    if (!theorem_i_holds) return "theorem (i): kernel of the constructed code";
    if (!theorem_ii_holds) return "theorem (ii): span of the constructed code";
    if (!corollary_i_holds) return "corollary (i): kernel dimension additivity";
    if (!corollary_ii_holds) return "corollary (ii): rank additivity";
    if (!params_hold) return "parameters: (2n, |C1||C2|, min{2d1,d2})";
    if (oracle_agrees == false) return "oracle: brute-force recomputation disagrees";
    return std::nullopt;
  }

  /// Oracle disagreement is fatal regardless of the hypothesis; it means
  /// the fast path is wrong, not that the theorem is.
  bool passed() const {
    if (oracle_agrees == false) return false;
    return !hypothesis_ok || !first_failure().has_value();
  }
};

namespace detail {

inline bool oracle_cross_check(const Code& first, const Code& second, const Code& constructed,
                               const Kernel& first_kernel, const Kernel& second_kernel, const Kernel& kernel_c,
                               const Gf2Basis& span_c, const PlotkinReport& report) {
  if (kernel_bruteforce(first) != first_kernel.words) return false;
  if (kernel_bruteforce(second) != second_kernel.words) return false;
  if (kernel_bruteforce(constructed) != kernel_c.words) return false;

  // Span of C as a closure set, against the enumerated pairs (x | x + y).
  const Code closure = span_bruteforce(constructed);
  if (closure != span_enumerate(span_c)) return false;
  // Outside the zero-word hypothesis the span identity may fail; the oracle
  // only has to reach the same verdict as the basis comparison.
  const Code direct = plotkin_construct(span_bruteforce(first), span_bruteforce(second));
  if ((closure == direct) != report.theorem_ii_holds) return false;

  if (constructed.size() >= 2 && report.observed.distance != min_distance_pairwise(constructed)) return false;
  return true;
}

}  // namespace detail

inline PlotkinReport verify_plotkin(const Code& first, const Code& second, const VerifyOptions& options = {}) {
  if (first.length() != second.length()) throw length_mismatch(first.length(), second.length());

  PlotkinReport r;
  r.n_in = first.length();
  r.hypothesis_ok = first.contains_zero() && second.contains_zero();

  const Code constructed = plotkin_construct(first, second);
  const Kernel k1 = kernel(first);
  const Kernel k2 = kernel(second);
  const Kernel kc = kernel(constructed);
  const Gf2Basis b1 = rref(first);
  const Gf2Basis b2 = rref(second);
  const Gf2Basis bc = rref(constructed);

  r.theorem_i_holds = kernel_direct(k1.words, k2.words) == kc.words;
  r.theorem_ii_holds = span_direct(b1, b2) == bc;
  r.corollary_i_holds = kc.basis.dim() == k1.basis.dim() + k2.basis.dim();
  r.corollary_ii_holds = bc.dim() == b1.dim() + b2.dim();

  const CodeSummary s1 = summarize(first, k1, b1);
  const CodeSummary s2 = summarize(second, k2, b2);
  const CodeSummary sc = summarize(constructed, kc, bc);

  r.predicted = predict_params(s1, s2);
  r.observed = PlotkinParams{sc.n, sc.M, sc.d, sc.rank, sc.ker_dim, sc.is_linear};
  r.params_hold = r.observed.length == r.predicted.length && r.observed.cardinality == r.predicted.cardinality &&
                  r.observed.linear == r.predicted.linear &&
                  (!r.predicted.distance || r.observed.distance == r.predicted.distance);

  r.kernel.assign(kc.words.begin(), kc.words.end());
  r.span_basis.assign(bc.rows().begin(), bc.rows().end());

  if (options.oracle) r.oracle_agrees = detail::oracle_cross_check(first, second, constructed, k1, k2, kc, bc, r);
  return r;
}

}  // namespace plotkin
