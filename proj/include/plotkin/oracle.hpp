#pragma once

// Deliberately naive reference computations. Nothing here touches row
// reduction or the candidate pruning used by the fast paths, so they can
// serve as ground truth for both.

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

inline constexpr std::size_t kernel_bruteforce_max_length = 16;

/// Ker(C) by scanning all 2^n vectors of F^n.
inline Code kernel_bruteforce(const Code& code) {
  const std::size_t n = code.length();
  if (n > kernel_bruteforce_max_length)
    throw cap_exceeded("brute-force kernel supports n <= " + std::to_string(kernel_bruteforce_max_length) +
                       ", got " + std::to_string(n));
  std::vector<Word> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    Word x = Word::from_uint(n, k);
    bool invariant = true;
    for (const auto& c : code) {
      if (!code.contains(c ^ x)) {
        invariant = false;
        break;
      }
    }
    if (invariant) out.push_back(std::move(x));
  }
  return Code::from_words(std::move(out), n);
}

/// The span of C as a closure: start from {0} (the empty sum) and, for each
/// codeword not yet reached, add its sum with everything reached so far.
/// The set stays closed under addition after every step, so the fixpoint is
/// the smallest closed set containing C.
inline Code span_bruteforce(const Code& code, std::size_t cap = enumeration_cap()) {
  const std::size_t n = code.length();
  std::unordered_set<Word> reached{Word(n)};
  std::vector<Word> order{Word(n)};
  for (const auto& c : code) {
    if (reached.contains(c)) continue;
    if (order.size() >= (std::size_t{1} << cap))
      throw cap_exceeded("span closure exceeds the enumeration cap of 2^" + std::to_string(cap) + " words");
    const std::size_t current = order.size();
    for (std::size_t i = 0; i < current; ++i) {
      Word sum = order[i] ^ c;
      reached.insert(sum);
      order.push_back(std::move(sum));
    }
  }
  return Code::from_words(std::move(order), n);
}

}  // namespace plotkin
