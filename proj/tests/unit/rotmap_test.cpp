#include <gtest/gtest.h>

#include "freerot/rotmap.hpp"
#include "freerot/sampling.hpp"
#include "oracles.hpp"

using namespace freerot;

namespace {

ReducedWord rw(std::string_view text) { return ReducedWord::from_reduced(parse_word(text)); }

const QSqrt2 kThird = QSqrt2::rational(1, 3);
const QSqrt2 kS = QSqrt2(0, mpq_class(2, 3));  // 2√2/3

}  // namespace

TEST(Generator, EntriesAsDisplayed) {
  const QSqrt2 zero, one(1);
  EXPECT_EQ(generator(Letter::GenA), Mat3({one, zero, zero,
                                          zero, kThird, -kS,
                                          zero, kS, kThird}));
  EXPECT_EQ(generator(Letter::InvA), Mat3({one, zero, zero,
                                          zero, kThird, kS,
                                          zero, -kS, kThird}));
  EXPECT_EQ(generator(Letter::GenB), Mat3({kThird, -kS, zero,
                                          kS, kThird, zero,
                                          zero, zero, one}));
  EXPECT_EQ(generator(Letter::InvB), Mat3({kThird, kS, zero,
                                          -kS, kThird, zero,
                                          zero, zero, one}));
}

TEST(Generator, InverseLetterIsTranspose) {
  for (Letter l : kLetters) {
    EXPECT_EQ(generator(inverse(l)), transpose(generator(l)));
    EXPECT_EQ(generator(l) * generator(inverse(l)), Mat3::identity());
  }
}

TEST(Generator, OrthogonalWithUnitDeterminant) {
  for (Letter l : kLetters) {
    EXPECT_EQ(det(generator(l)), QSqrt2(1));
    EXPECT_EQ(oracle::leibniz_det(generator(l)), QSqrt2(1));
    EXPECT_EQ(transpose(generator(l)) * generator(l), Mat3::identity());
    EXPECT_TRUE(is_rotation(generator(l)));
  }
}

TEST(Rotation, Examples) {
  EXPECT_EQ(rotation(rw("")), Mat3::identity());
  EXPECT_EQ(rotation(rw("a")), generator(Letter::GenA));
  const Mat3 ab = rotation(rw("ab"));
  EXPECT_EQ(ab, generator(Letter::GenA) * generator(Letter::GenB));
  EXPECT_EQ(ab(0, 0), kThird);
}

TEST(Rotation, WeakWordsAreReducedFirst) {
  const Word weak = parse_word("abBaAAbBA");
  EXPECT_EQ(rotation(WordView(weak)), rotation(reduce(weak)));
  EXPECT_EQ(rotation(WordView(weak)), rotation(rw("A")));
}

TEST(Rotation, FoldDirectionIsIrrelevant) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const ReducedWord w = random_reduced_word(rng, 12);
    ASSERT_EQ(rotation(w), oracle::right_fold_rotation(w.view()));
  }
}

TEST(RotationOfInverse, Examples) {
  EXPECT_EQ(rotation_of_inverse(rw("")), Mat3::identity());
  EXPECT_EQ(rotation_of_inverse(rw("a")), generator(Letter::InvA));
  EXPECT_EQ(rotation_of_inverse(rw("ab")), generator(Letter::InvB) * generator(Letter::InvA));
}

TEST(RotationOfInverse, EqualsInverseAndTranspose) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const ReducedWord w = random_reduced_word(rng, 10);
    const Mat3 m = rotation(w);
    ASSERT_EQ(rotation_of_inverse(w), inverse(m));
    ASSERT_EQ(rotation_of_inverse(w), transpose(m));
  }
}

TEST(Rotation, Homomorphism) {
  Rng rng(47);
  for (int i = 0; i < 1000; ++i) {
    const ReducedWord w1 = random_reduced_word(rng, 12);
    const ReducedWord w2 = random_reduced_word(rng, 12);
    ASSERT_EQ(rotation(w1) * rotation(w2), rotation(compose(w1, w2)))
        << format_word(w1) << " " << format_word(w2);
  }
}

TEST(Rotation, EveryImageUpToLengthFiveIsARotation) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate(n)) ASSERT_TRUE(is_rotation(rotation(w))) << format_word(w);
  }
}

TEST(Rotation, DenominatorsDividePowerOfThree) {
  for (std::size_t n = 0; n <= 6; ++n) {
    mpz_class pow3;
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, n);
    for (const auto& w : enumerate(n)) {
      const Mat3 m = rotation(w);
      for (const auto& e : m.entries()) {
        ASSERT_TRUE(mpz_divisible_p(pow3.get_mpz_t(), e.rat().get_den_mpz_t()));
        ASSERT_TRUE(mpz_divisible_p(pow3.get_mpz_t(), e.irr().get_den_mpz_t()));
      }
    }
  }
}
