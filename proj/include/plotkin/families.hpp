#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/plotkin.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

/// SplitMix64: state += 0x9e3779b97f4a7c15, then the output is the state
/// passed through two xor-shift-multiply rounds (constants 0xbf58476d1ce4e5b9
/// and 0x94d049bb133111eb, shifts 30, 27, 31). Every seed is valid and the
/// stream is fixed for a given seed.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection, so no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

inline void require_length(std::size_t n) {
  if (n < 1) throw code_error("code length must be at least 1");
  if (n > default_max_length)
    throw cap_exceeded("code length " + std::to_string(n) + " exceeds the limit of " +
                       std::to_string(default_max_length));
}

inline void require_enumerable(std::size_t dim) {
  const std::size_t cap = enumeration_cap();
  if (dim > cap)
    throw cap_exceeded("code of dimension " + std::to_string(dim) + " exceeds the enumeration cap of 2^" +
                       std::to_string(cap) + " words");
}

/// {0, 1}: the [n, 1, n] repetition code.
inline Code repetition(std::size_t n) {
  require_length(n);
  return Code::from_words({Word(n), Word::ones(n)});
}

/// All of F^n: the [n, n, 1] code.
inline Code universe(std::size_t n) {
  require_length(n);
  require_enumerable(n);
  std::vector<Word> words;
  words.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) words.push_back(Word::from_uint(n, k));
  return Code::from_words(std::move(words));
}

/// Even-weight words: the [n, n-1, 2] code. For n = 1 this is {0}.
inline Code parity(std::size_t n) {
  require_length(n);
  require_enumerable(n - 1);
  std::vector<Word> words;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
    if (std::popcount(k) % 2 == 0) words.push_back(Word::from_uint(n, k));
  return Code::from_words(std::move(words));
}

/// Row space of a generator matrix.
inline Code from_generator(std::span<const Word> rows) {
  if (rows.empty()) throw code_error("generator matrix has no rows");
  const Gf2Basis basis = rref(rows);
  return span_enumerate(basis);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// RM(r, m) by iterating the (u | u + v) construction:
/// RM(r, m) = (RM(r, m-1) | RM(r-1, m-1)), with RM(0, m) the repetition
/// code and RM(m, m) all of F^(2^m).
inline Code reed_muller(int r, int m) {
  if (m < 1) throw code_error("reed_muller needs m >= 1");
  if (r < 0 || r > m) throw code_error("reed_muller needs 0 <= r <= m");
  if (m > 12) throw cap_exceeded("reed_muller length 2^" + std::to_string(m) + " exceeds the length limit");
  std::uint64_t dim = 0;
  for (int i = 0; i <= r; ++i) dim += binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(i));
  require_enumerable(dim);

  const std::size_t n = std::size_t{1} << m;
  if (r == 0) return repetition(n);
  if (r == m) return universe(n);
  return plotkin_construct(reed_muller(r, m - 1), reed_muller(r - 1, m - 1));
}

/// M distinct words of length n drawn from SplitMix64(seed). With
/// `include_zero` the zero word is a member; without it the zero word is
/// excluded. The remaining words come from a sparse Fisher-Yates shuffle
/// over the nonzero indices, or for n >= 64 from rejection sampling.
inline Code random_code(std::size_t n, std::uint64_t M, std::uint64_t seed, bool include_zero) {
  require_length(n);
  if (M < 1) throw code_error("random code needs M >= 1");
  if (n < 64) {
    const std::uint64_t space = std::uint64_t{1} << n;
    if (M > space) throw code_error("M = " + std::to_string(M) + " exceeds 2^n = " + std::to_string(space));
    if (!include_zero && M == space)
      throw code_error("M = 2^n forces the zero word; use include_zero");
  }
  if (M > (std::uint64_t{1} << std::min<std::size_t>(enumeration_cap(), 63)))
    throw cap_exceeded("M = " + std::to_string(M) + " exceeds the enumeration cap");

  SplitMix64 rng(seed);
  std::vector<Word> words;
  words.reserve(M);
  if (include_zero) words.emplace_back(n);
  const std::uint64_t wanted = include_zero ? M - 1 : M;

  if (n < 64) {
    // Positions 1 .. 2^n - 1 of a virtual identity permutation; `moved`
    // records only the slots that have been swapped.
    const std::uint64_t nonzero = (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    auto at = [&](std::uint64_t i) {
      auto it = moved.find(i);
      return it == moved.end() ? i : it->second;
    };
    for (std::uint64_t i = 0; i < wanted; ++i) {
      const std::uint64_t j = i + rng.below(nonzero - i);
      const std::uint64_t picked = at(j);
      moved[j] = at(i);
      words.push_back(Word::from_uint(n, picked + 1));
    }
  } else {
    std::unordered_set<Word> seen(words.begin(), words.end());
    while (words.size() < M) {
      Word w(n);
      for (std::size_t i = 0; i < n; i += 64) {
        const std::uint64_t bits = rng();
        for (std::size_t b = 0; b < 64 && i + b < n; ++b) w.set(i + b, (bits >> b) & 1U);
      }
      if (w.is_zero()) continue;
      if (seen.insert(w).second) words.push_back(std::move(w));
    }
  }
  return Code::from_words(std::move(words));
}

enum class FamilyKind { repetition, universe, parity, reed_muller, from_generator, random };

inline std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "repetition") return FamilyKind::repetition;
  if (name == "universe") return FamilyKind::universe;
  if (name == "parity") return FamilyKind::parity;
  if (name == "reed_muller" || name == "rm") return FamilyKind::reed_muller;
  if (name == "from_generator" || name == "gen") return FamilyKind::from_generator;
  if (name == "random") return FamilyKind::random;
  return std::nullopt;
}

/// A named family with its integer parameters: n for repetition, universe
/// and parity; (r, m) for reed_muller; (n, M, seed) for random. Generator
/// rows are used only by from_generator.
struct FamilySpec {
  FamilyKind kind = FamilyKind::repetition;
  std::vector<std::uint64_t> params;
  std::vector<Word> generator_rows;
  bool include_zero = true;
};

inline Code make_family(const FamilySpec& spec) {
  auto expect = [&](std::size_t count, const char* usage) {
    if (spec.params.size() != count) throw code_error(std::string("expected parameters: ") + usage);
  };
  switch (spec.kind) {
    case FamilyKind::repetition: expect(1, "n"); return repetition(spec.params[0]);
    case FamilyKind::universe: expect(1, "n"); return universe(spec.params[0]);
    case FamilyKind::parity: expect(1, "n"); return parity(spec.params[0]);
    case FamilyKind::reed_muller:
      expect(2, "r m");
      if (spec.params[0] > 64 || spec.params[1] > 64) throw code_error("reed_muller parameters out of range");
      return reed_muller(static_cast<int>(spec.params[0]), static_cast<int>(spec.params[1]));
    case FamilyKind::from_generator: expect(0, "(none; rows come from a generator file)"); return from_generator(spec.generator_rows);
    case FamilyKind::random: expect(3, "n M seed"); return random_code(spec.params[0], spec.params[1], spec.params[2], spec.include_zero);
  }
  throw code_error("unknown family");
}

}  // namespace plotkin
