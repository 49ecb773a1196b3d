#include <gtest/gtest.h>

#include <random>

#include "plotkin/families.hpp"
#include "plotkin/invariants.hpp"
#include "plotkin/oracle.hpp"
#include "test_support.hpp"

using namespace plotkin;
using plotkin::test::C;
using plotkin::test::W;

TEST(MinDistance, Examples) {
  EXPECT_EQ(min_distance(C({"00", "11"})), 2u);
  // pairs: d(00,01)=1, d(00,10)=1, d(01,10)=2
  EXPECT_EQ(min_distance(C({"00", "01", "10"})), 1u);
  EXPECT_EQ(min_distance(parity(4)), 2u);
  EXPECT_EQ(min_distance_pairwise(parity(4)), 2u);
}

TEST(MinDistance, UndefinedForSingleWord) {
  EXPECT_THROW(min_distance(C({"0101"})), code_error);
  EXPECT_THROW(min_distance_pairwise(C({"0101"})), code_error);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(C({"000"})), 0u);
  EXPECT_EQ(rank(C({"00", "01", "10"})), 2u);
  EXPECT_EQ(rank(parity(5)), 4u);
  EXPECT_EQ(rank(repetition(7)), 1u);
}

TEST(Kernel, Examples) {
  const Code lin = parity(4);
  EXPECT_EQ(kernel(lin).words, lin);

  EXPECT_EQ(kernel(C({"00", "01", "10"})).words, C({"00"}));

  const Code constructed = C({"0000", "0011", "0101", "0110", "1010", "1001"});
  const Kernel k = kernel(constructed);
  EXPECT_EQ(k.words, C({"0000", "0011"}));
  EXPECT_EQ(k.words, kernel_bruteforce(constructed));
  EXPECT_EQ(k.basis.dim(), 1u);
}

TEST(Kernel, CodeWithoutZero) {
  // {01, 10}: translating by 11 swaps the two words, so Ker = {00, 11}, not a subcode.
  const Kernel k = kernel(C({"01", "10"}));
  EXPECT_EQ(k.words, C({"00", "11"}));
  EXPECT_EQ(k.words, kernel_bruteforce(C({"01", "10"})));
}

TEST(IsLinear, Examples) {
  EXPECT_TRUE(is_linear(C({"00", "11"})));
  EXPECT_FALSE(is_linear(C({"00", "01", "10"})));
  EXPECT_TRUE(is_linear(C({"000"})));
  EXPECT_FALSE(is_linear(C({"01", "10"})));
  // A coset of a subspace has 2^k words but is not itself a subspace.
  EXPECT_FALSE(is_linear(C({"01", "11"})));
}

TEST(Summarize, Examples) {
  const CodeSummary rep = summarize(C({"00", "11"}));
  EXPECT_EQ(rep, (CodeSummary{2, 2, 2, 1, 1, true, true}));

  const CodeSummary nl = summarize(C({"00", "01", "10"}));
  EXPECT_EQ(nl, (CodeSummary{2, 3, 1, 2, 0, false, true}));

  const CodeSummary trivial = summarize(C({"000"}));
  EXPECT_EQ(trivial.n, 3u);
  EXPECT_EQ(trivial.M, 1u);
  EXPECT_FALSE(trivial.d.has_value());
  EXPECT_EQ(trivial.rank, 0u);
  EXPECT_EQ(trivial.ker_dim, 0u);
  EXPECT_TRUE(trivial.is_linear);
}

TEST(InvariantsProperty, KernelMatchesBruteForceAndIsASubspace) {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const bool force_zero = trial % 2 == 0;
    const Code code = test::random_small_code(rng, n, 48, force_zero);
    const Kernel k = kernel(code);
    ASSERT_EQ(k.words, kernel_bruteforce(code)) << "n=" << n << " M=" << code.size();

    EXPECT_TRUE(k.words.contains_zero());
    for (const auto& x : k.words)
      for (const auto& y : k.words) ASSERT_TRUE(k.words.contains(x ^ y));
    EXPECT_EQ(k.words.size(), std::size_t{1} << k.basis.dim());

    // Search-space soundness: every kernel vector lies in C + c0.
    const Code shifted = translate(code, code.front());
    for (const auto& x : k.words) EXPECT_TRUE(shifted.contains(x));

    if (code.contains_zero()) {
      for (const auto& x : k.words) EXPECT_TRUE(code.contains(x));
    }
  }
}

TEST(InvariantsProperty, SummaryConsistency) {
  std::mt19937_64 rng(8086);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Code code = test::random_small_code(rng, n, 64, trial % 3 != 0);
    const CodeSummary s = summarize(code);
    EXPECT_LE(s.ker_dim, s.rank);
    EXPECT_LE(s.rank, s.n);
    EXPECT_LE(s.M, std::size_t{1} << s.rank);
    EXPECT_EQ(s.is_linear, s.M == (std::size_t{1} << s.rank));
    EXPECT_EQ(s.is_linear, s.rank == s.ker_dim && s.contains_zero);
    if (s.M >= 2) {
      EXPECT_EQ(*s.d, min_distance_pairwise(code));
    }
    const Code span = span_bruteforce(code);
    EXPECT_EQ(span.size(), std::size_t{1} << s.rank);
    for (const auto& w : code) EXPECT_TRUE(span.contains(w));
  }
}

TEST(InvariantsProperty, LinearCodesAgreeOnBothDistancePaths) {
  std::mt19937_64 rng(1999);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Word> gens;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) gens.push_back(test::random_word(rng, n));
    const Code code = from_generator(gens);
    ASSERT_TRUE(is_linear(code));
    const CodeSummary s = summarize(code);
    EXPECT_EQ(s.rank, s.ker_dim);
    EXPECT_EQ(std::size_t{1} << s.rank, s.M);
    if (code.size() >= 2) {
      EXPECT_EQ(min_nonzero_weight(code), min_distance_pairwise(code));
    }
  }
}
