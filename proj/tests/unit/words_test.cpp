#include <gtest/gtest.h>

#include <set>

#include "freerot/sampling.hpp"
#include "freerot/words.hpp"
#include "oracles.hpp"

using namespace freerot;

namespace {

Word w(std::string_view text) { return parse_word(text); }
ReducedWord rw(std::string_view text) { return ReducedWord::from_reduced(parse_word(text)); }

}  // namespace

TEST(Letter, InverseIsAnInvolution) {
  EXPECT_EQ(inverse(Letter::GenA), Letter::InvA);
  EXPECT_EQ(inverse(Letter::GenB), Letter::InvB);
  for (Letter l : kLetters) EXPECT_EQ(inverse(inverse(l)), l);
}

TEST(Letter, TextAlphabetRoundTrips) {
  for (Letter l : kLetters) EXPECT_EQ(letter_from_char(to_char(l)), l);
  EXPECT_FALSE(letter_from_char('c').has_value());
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(w("abA")));
  EXPECT_FALSE(is_reduced(w("aAb")));
  EXPECT_TRUE(is_reduced(w("")));
  EXPECT_TRUE(is_reduced(w("abba")));
  EXPECT_FALSE(is_reduced(w("abBa")));
}

TEST(ReducedWord, ConstructionRejectsCancellingPairs) {
  EXPECT_NO_THROW(rw("abA"));
  try {
    rw("abBa");
    FAIL() << "expected NotReduced";
  } catch (const NotReduced& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Classify, ByFirstLetter) {
  EXPECT_EQ(classify(rw("abA")), WordClass::AWord);
  EXPECT_EQ(classify(rw("")), WordClass::Empty);
  EXPECT_EQ(classify(rw("Ba")), WordClass::BInvWord);
  EXPECT_EQ(classify(rw("Ab")), WordClass::AInvWord);
  EXPECT_EQ(classify(rw("b")), WordClass::BWord);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(w("aA")), rw(""));
  EXPECT_EQ(reduce(w("aAb")), rw("b"));
  EXPECT_EQ(reduce(w("abBA")), rw(""));
  EXPECT_EQ(reduce_tail_first(w("abBA")), rw(""));
}

TEST(ReduceTailFirst, Examples) {
  EXPECT_EQ(reduce_tail_first(w("aA")), rw(""));
  EXPECT_EQ(reduce_tail_first(w("bbB")), rw("b"));
  EXPECT_EQ(reduce_tail_first(w("")), rw(""));
}

TEST(Reduce, MatchesOraclesOnRandomWeakWords) {
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const Word x = random_weak_word(rng, 60);
    const ReducedWord fixed = reduce(x);
    ASSERT_EQ(fixed, reduce_tail_first(x)) << format_word(x);
    ASSERT_EQ(fixed.letters(), oracle::naive_reduce(x)) << format_word(x);
    ASSERT_LE(fixed.size(), x.size());
    ASSERT_EQ((x.size() - fixed.size()) % 2, 0u);
  }
}

TEST(Reduce, IdempotentAndIdentityOnReducedInput) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const ReducedWord r = random_reduced_word(rng, 50);
    EXPECT_EQ(reduce(r.view()), r);
  }
}

TEST(Reduce, CommutesWithReversalOnWeakWords) {
  Rng rng(13);
  for (int i = 0; i < 5000; ++i) {
    const Word x = random_weak_word(rng, 40);
    Word rev(x.rbegin(), x.rend());
    const ReducedWord fixed = reduce(x);
    const Word fixed_rev(fixed.letters().rbegin(), fixed.letters().rend());
    ASSERT_EQ(reduce(rev).letters(), fixed_rev) << format_word(x);
  }
}

TEST(Reduce, FixFusion) {
  Rng rng(17);
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (int i = 0; i < 5000; ++i) {
    const Word x = random_weak_word(rng, 20);
    const Word y = random_weak_word(rng, 20);
    const Word z = random_weak_word(rng, 20);
    const ReducedWord whole = reduce(cat(cat(x, y), z));
    ASSERT_EQ(reduce(cat(x, reduce(cat(y, z)).letters())), whole);
    ASSERT_EQ(reduce(cat(reduce(cat(x, y)).letters(), z)), whole);
  }
}

TEST(Reduce, DeepInputDoesNotOverflowTheStack) {
  Word x;
  for (int i = 0; i < 200000; ++i) x.push_back(i % 2 ? Letter::InvB : Letter::GenB);
  EXPECT_TRUE(reduce(x).empty());
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(rw("abb"), rw("B")), rw("ab"));
  EXPECT_EQ(compose(rw("ab"), rw("BA")), rw(""));
  EXPECT_EQ(compose(rw("ab"), rw("BA")), compose(rw("ab"), inverse(rw("ab"))));
  const ReducedWord x = rw("abAB");
  EXPECT_EQ(compose(x, rw("")), x);
  EXPECT_EQ(compose(rw(""), x), x);
}

TEST(Compose, AgreesWithReduceOfConcatenation) {
  Rng rng(19);
  for (int i = 0; i < 5000; ++i) {
    const ReducedWord x = random_reduced_word(rng, 30);
    const ReducedWord y = random_reduced_word(rng, 30);
    Word cat = x.letters();
    cat.insert(cat.end(), y.letters().begin(), y.letters().end());
    ASSERT_EQ(compose(x, y), reduce(cat));
  }
}

TEST(Compose, GroupLaws) {
  Rng rng(23);
  for (int i = 0; i < 3000; ++i) {
    const ReducedWord x = random_reduced_word(rng, 25);
    const ReducedWord y = random_reduced_word(rng, 25);
    const ReducedWord z = random_reduced_word(rng, 25);
    ASSERT_TRUE(is_reduced(compose(x, y).view()));
    ASSERT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
    ASSERT_TRUE(compose(x, inverse(x)).empty());
    ASSERT_TRUE(compose(inverse(x), x).empty());
    ASSERT_EQ(inverse(compose(x, y)), compose(inverse(y), inverse(x)));
  }
}

TEST(Flip, Examples) {
  EXPECT_EQ(flip(w("aAB")), w("Aab"));
  EXPECT_EQ(flip(w("")), w(""));
  EXPECT_EQ(flip(flip(w("abBAab"))), w("abBAab"));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(WordView(w("aAB"))), w("baA"));
  EXPECT_EQ(inverse(WordView(w(""))), w(""));
  EXPECT_EQ(inverse(inverse(WordView(w("aABbb")))), w("aABbb"));
}

TEST(Inverse, DoesNotReduce) {
  EXPECT_FALSE(is_reduced(inverse(WordView(w("aAB")))));
}

TEST(Inverse, PreservesReducedness) {
  Rng rng(29);
  for (int i = 0; i < 2000; ++i) {
    const ReducedWord x = random_reduced_word(rng, 30);
    EXPECT_TRUE(is_reduced(inverse(x).view()));
  }
}

TEST(Enumerate, SmallLengths) {
  const auto zero = enumerate(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());

  const auto one = enumerate(1);
  ASSERT_EQ(one.size(), 4u);
  EXPECT_EQ(one[0], rw("a"));
  EXPECT_EQ(one[1], rw("A"));
  EXPECT_EQ(one[2], rw("b"));
  EXPECT_EQ(one[3], rw("B"));
}

TEST(Enumerate, MatchesBruteForceInOrder) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto fast = enumerate(n);
    const auto slow = oracle::brute_force_reduced(n);
    ASSERT_EQ(fast.size(), slow.size()) << "n=" << n;
    for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_EQ(fast[i].letters(), slow[i]);
  }
  EXPECT_EQ(enumerate(2).size(), 12u);
}

TEST(Enumerate, CountFormula) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto words = enumerate(n);
    std::uint64_t expected = 4;
    for (std::size_t i = 1; i < n; ++i) expected *= 3;
    EXPECT_EQ(words.size(), expected);
    EXPECT_EQ(reduced_word_count(n), expected);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  }
}

TEST(ParseWord, Examples) {
  EXPECT_EQ(parse_word("abBA"),
            (Word{Letter::GenA, Letter::GenB, Letter::InvB, Letter::InvA}));
  EXPECT_TRUE(parse_word("").empty());
  try {
    parse_word("abx");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(ParseWord, RoundTripsWithFormat) {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const Word x = random_weak_word(rng, 30);
    EXPECT_EQ(parse_word(format_word(x)), x);
  }
}

TEST(ReducedWord, HashAgreesWithEquality) {
  std::set<std::size_t> hashes;
  for (const auto& x : enumerate(5)) hashes.insert(std::hash<ReducedWord>{}(x));
  EXPECT_GT(hashes.size(), 300u);
  EXPECT_EQ(std::hash<ReducedWord>{}(rw("abA")), std::hash<ReducedWord>{}(reduce(w("abbBA"))));
}
