#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/families.hpp"

namespace plotkin {

struct CorpusOptions {
  std::size_t pairs = 200;
  std::uint64_t seed = 1;
  std::size_t min_n = 2;
  std::size_t max_n = 8;
  std::uint64_t max_size = 64;
  bool include_zero = true;
};

struct CorpusPair {
  std::size_t index;
  std::uint64_t first_seed;
  std::uint64_t second_seed;
  Code first;
  Code second;
};

/// Seeded pairs of equal-length random codes. Each pair draws n uniformly
/// from [min_n, max_n] and each size uniformly from [1, min(max_size, 2^n)].
inline std::vector<CorpusPair> random_corpus(const CorpusOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > 20) throw code_error("corpus max-n must be in [1, 20]");
  if (opt.max_size < 1) throw code_error("corpus max-size must be at least 1");
  const std::size_t lo = std::min(opt.min_n, opt.max_n);
  SplitMix64 rng(opt.seed);
  std::vector<CorpusPair> out;
  out.reserve(opt.pairs);
  for (std::size_t i = 0; i < opt.pairs; ++i) {
    const std::size_t n = lo + rng.below(opt.max_n - lo + 1);
    std::uint64_t limit = std::min<std::uint64_t>(opt.max_size, std::uint64_t{1} << n);
    if (!opt.include_zero) limit = std::min<std::uint64_t>(limit, (std::uint64_t{1} << n) - 1);
    const std::uint64_t m1 = 1 + rng.below(limit);
    const std::uint64_t m2 = 1 + rng.below(limit);
    const std::uint64_t s1 = rng();
    const std::uint64_t s2 = rng();
    out.push_back(CorpusPair{i, s1, s2, random_code(n, m1, s1, opt.include_zero),
                             random_code(n, m2, s2, opt.include_zero)});
  }
  return out;
}

}  // namespace plotkin
