#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <unordered_set>

#include "plotkin/code.hpp"
#include "plotkin/word.hpp"
#include "test_support.hpp"

using namespace plotkin;
using plotkin::test::C;
using plotkin::test::W;

TEST(Word, XorExamples) {
  EXPECT_EQ(word_xor(W("0101"), W("0011")), W("0110"));
  const Word w = W("1101001");
  EXPECT_EQ(word_xor(w, w), Word(7));
  EXPECT_EQ(word_xor(w, Word(7)), w);
}

TEST(Word, XorRejectsLengthMismatch) {
  EXPECT_THROW(word_xor(W("01"), W("011")), length_mismatch);
  EXPECT_THROW(hamming_distance(W("01"), W("011")), length_mismatch);
}

TEST(Word, HammingDistanceExamples) {
  EXPECT_EQ(hamming_distance(W("0101"), W("0011")), 2u);
  EXPECT_EQ(hamming_distance(W("0110"), W("0110")), 0u);
  for (std::size_t n : {1u, 5u, 64u, 65u, 130u}) EXPECT_EQ(hamming_distance(Word(n), Word::ones(n)), n);
}

TEST(Word, ConcatExamples) {
  EXPECT_EQ(concat(W("01"), W("11")), W("0111"));
  EXPECT_EQ(concat(Word(3), Word(3)), Word(6));
  const Word u = W("10"), v = W("11");
  EXPECT_EQ(concat(u, u ^ v), W("1001"));
}

TEST(Word, ZeroLengthAndBadCharactersRejected) {
  EXPECT_THROW(Word(0), code_error);
  EXPECT_THROW(W("01x1"), code_error);
  EXPECT_THROW(W(""), code_error);
}

TEST(Word, StringRoundTripAcrossBlockBoundaries) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 63u, 64u, 65u, 127u, 128u, 200u}) {
    const Word w = test::random_word(rng, n);
    EXPECT_EQ(Word::from_string(w.to_string()), w);
    EXPECT_EQ(w.to_string().size(), n);
  }
}

TEST(Word, PaddingStaysZero) {
  // ones() must not set storage bits past the length, otherwise weight and equality break.
  for (std::size_t n : {1u, 3u, 63u, 64u, 65u, 100u}) {
    const Word ones = Word::ones(n);
    EXPECT_EQ(ones.weight(), n);
    EXPECT_EQ(ones ^ ones, Word(n));
    EXPECT_EQ(Word::from_string(std::string(n, '1')), ones);
  }
}

TEST(Word, FromUintIsLexicographic) {
  EXPECT_EQ(Word::from_uint(4, 0b0110), W("0110"));
  EXPECT_EQ(Word::from_uint(64, 1).to_string(), std::string(63, '0') + "1");
  for (std::uint64_t k = 0; k + 1 < 32; ++k) EXPECT_LT(Word::from_uint(5, k), Word::from_uint(5, k + 1));
}

TEST(Word, OrderMatchesStringOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const Word a = test::random_word(rng, n), b = test::random_word(rng, n);
    EXPECT_EQ(a < b, a.to_string() < b.to_string());
  }
}

TEST(Word, LeadingOne) {
  EXPECT_FALSE(Word(70).leading_one());
  EXPECT_EQ(W("0010").leading_one(), 2u);
  Word w(130);
  w.set(129);
  EXPECT_EQ(w.leading_one(), 129u);
}

TEST(WordProperty, TriangleInequalityAndSymmetry) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const Word a = test::random_word(rng, n), b = test::random_word(rng, n), c = test::random_word(rng, n);
    EXPECT_LE(hamming_distance(a, c), hamming_distance(a, b) + hamming_distance(b, c));
    EXPECT_EQ(hamming_distance(a, b), hamming_distance(b, a));
    EXPECT_EQ(hamming_distance(a, b), (a ^ b).weight());
    EXPECT_EQ(hamming_distance(a, b) == 0, a == b);
    EXPECT_EQ(concat(a, b).length(), a.length() + b.length());
  }
}

TEST(Word, HashDistinguishesSmallWords) {
  std::unordered_set<std::size_t> hashes;
  for (std::uint64_t k = 0; k < 4096; ++k) hashes.insert(std::hash<Word>{}(Word::from_uint(12, k)));
  EXPECT_GT(hashes.size(), 4000u);
}

TEST(Code, FromWordsDeduplicates) {
  const Code c = C({"00", "11", "11"});
  EXPECT_EQ(c.length(), 2u);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(test::strings(c), (std::vector<std::string>{"00", "11"}));

  const Code trivial = code_from_words({Word(4)});
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial.contains_zero());
}

TEST(Code, RejectsEmptyAndMixedLengths) {
  EXPECT_THROW(code_from_words({}), code_error);
  EXPECT_THROW(code_from_words({W("01"), W("011")}), length_mismatch);
}

TEST(Code, LengthCap) {
  EXPECT_NO_THROW(code_from_words({Word(default_max_length)}));
  EXPECT_THROW(code_from_words({Word(default_max_length + 1)}), cap_exceeded);
  EXPECT_NO_THROW(Code::from_words({Word(5000)}, 8192));
}

TEST(Code, IterationIsSorted) {
  const Code c = C({"110", "001", "100", "000"});
  EXPECT_EQ(test::strings(c), (std::vector<std::string>{"000", "001", "100", "110"}));
  EXPECT_TRUE(c.contains(W("100")));
  EXPECT_FALSE(c.contains(W("111")));
  EXPECT_FALSE(c.contains(W("1000")));
  EXPECT_FALSE(C({"01", "10"}).contains_zero());
}

TEST(Code, TranslateExamples) {
  EXPECT_EQ(translate(C({"00", "01", "10"}), W("00")), C({"00", "01", "10"}));
  EXPECT_EQ(translate(C({"00", "11"}), W("11")), C({"00", "11"}));
  // 00+01=01, 01+01=00, 10+01=11
  EXPECT_EQ(translate(C({"00", "01", "10"}), W("01")), C({"01", "00", "11"}));
  EXPECT_THROW(translate(C({"00"}), W("000")), length_mismatch);
}

TEST(CodeProperty, TranslationIsAnInvolutionAndKeepsSize) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Code code = test::random_small_code(rng, n, 40, false);
    const Word x = test::random_word(rng, n);
    const Code moved = translate(code, x);
    EXPECT_EQ(moved.size(), code.size());
    EXPECT_EQ(translate(moved, x), code);
    EXPECT_EQ(translation_invariant(code, x), moved == code);
  }
}
