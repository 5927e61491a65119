#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "freerot/mat3.hpp"
#include "freerot/rotmap.hpp"
#include "freerot/sampling.hpp"
#include "oracles.hpp"

using namespace freerot;

namespace {

const QSqrt2 kThird = QSqrt2::rational(1, 3);
const QSqrt2 kS = QSqrt2(0, mpq_class(2, 3));  // 2√2/3

const Mat3& a_plus() { return generator(Letter::GenA); }
const Mat3& a_minus() { return generator(Letter::InvA); }

Vec3 vec(QSqrt2 x, QSqrt2 y, QSqrt2 z) { return {{std::move(x), std::move(y), std::move(z)}}; }

}  // namespace

TEST(Mat3, Identity) {
  const Mat3 id = identity();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id(i, j), QSqrt2(i == j ? 1 : 0));
  }
  EXPECT_EQ(det(id), QSqrt2(1));
  EXPECT_EQ(id * id, id);
  Rng rng(1);
  const Mat3 m = random_mat3(rng);
  EXPECT_EQ(id * m, m);
  EXPECT_EQ(m * id, m);
}

TEST(Mat3, ApplyReadsOffColumn) {
  EXPECT_EQ(apply(a_plus(), vec(0, 1, 0)), vec(0, kThird, kS));
}

TEST(Mat3, GeneratorTimesItsInverse) {
  EXPECT_EQ(a_plus() * a_minus(), identity());
  EXPECT_EQ(a_minus() * a_plus(), identity());
}

TEST(Mat3, Transpose) {
  EXPECT_EQ(transpose(identity()), identity());
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Mat3 m1 = random_mat3(rng), m2 = random_mat3(rng);
    ASSERT_EQ(transpose(transpose(m1)), m1);
    ASSERT_EQ(transpose(m1 * m2), transpose(m2) * transpose(m1));
  }
}

TEST(Mat3, DeterminantMatchesLeibnizExpansion) {
  EXPECT_EQ(det(a_plus()), QSqrt2(1));
  EXPECT_EQ(oracle::leibniz_det(a_plus()), QSqrt2(1));
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Mat3 m = random_mat3(rng);
    ASSERT_EQ(det(m), oracle::leibniz_det(m));
  }
}

TEST(Mat3, DeterminantIsMultiplicative) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Mat3 m1 = random_mat3(rng), m2 = random_mat3(rng);
    ASSERT_EQ(det(m1 * m2), det(m1) * det(m2));
  }
}

TEST(Mat3, MultiplicationIsAssociative) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Mat3 a = random_mat3(rng), b = random_mat3(rng), c = random_mat3(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Mat3, Inverse) {
  EXPECT_EQ(inverse(identity()), identity());
  EXPECT_EQ(inverse(a_plus()), transpose(a_plus()));
  Rng rng(6);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Mat3 m1 = random_mat3(rng), m2 = random_mat3(rng);
    if (det(m1).is_zero() || det(m2).is_zero()) continue;
    ++checked;
    const Mat3 i1 = inverse(m1);
    ASSERT_EQ(m1 * i1, identity());
    ASSERT_EQ(i1 * m1, identity());
    ASSERT_EQ(inverse(m1 * m2), inverse(m2) * i1);
  }
  EXPECT_GT(checked, 250);
}

TEST(Mat3, InverseOfSingularThrows) {
  const Mat3 rank_one({QSqrt2(1), QSqrt2(2), QSqrt2(3),
                       QSqrt2(2), QSqrt2(4), QSqrt2(6),
                       QSqrt2::sqrt2(), QSqrt2::sqrt2() * QSqrt2(2), QSqrt2::sqrt2() * QSqrt2(3)});
  EXPECT_EQ(det(rank_one), QSqrt2());
  EXPECT_THROW(inverse(rank_one), Singular);
  EXPECT_THROW(inverse(Mat3()), Singular);
}

TEST(Mat3, IsRotation) {
  EXPECT_TRUE(is_rotation(identity()));
  EXPECT_TRUE(is_rotation(a_plus()));
  EXPECT_FALSE(is_rotation(Mat3::diagonal(2, 1, 1)));
  // Orthogonal but a reflection.
  EXPECT_FALSE(is_rotation(Mat3::diagonal(-1, 1, 1)));
  // det 1 but not orthogonal.
  EXPECT_FALSE(is_rotation(Mat3::diagonal(2, QSqrt2::rational(1, 2), 1)));
}

TEST(Mat3, RotationPredicateMatchesInverseEqualsTranspose) {
  // For nonsingular m: inverse(m) == m^T exactly when m^T m == I.
  Rng rng(7);
  std::vector<Mat3> samples = {identity(), a_plus(), Mat3::diagonal(-1, 1, 1),
                               Mat3::diagonal(2, 1, 1)};
  for (int i = 0; i < 200; ++i) samples.push_back(random_mat3(rng));
  for (const auto& word : enumerate(3)) samples.push_back(rotation(word));
  for (const Mat3& m : samples) {
    if (det(m).is_zero()) continue;
    ASSERT_EQ(inverse(m) == transpose(m), transpose(m) * m == identity());
  }
}

TEST(Mat3, RotationClosure) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Mat3 r1 = rotation(random_reduced_word(rng, 6));
    const Mat3 r2 = rotation(random_reduced_word(rng, 6));
    ASSERT_TRUE(is_rotation(r1 * r2));
    ASSERT_TRUE(is_rotation(inverse(r1)));
  }
}

TEST(Mat3, NormSquared) {
  EXPECT_EQ(norm_sq(vec(0, 1, 0)), QSqrt2(1));
  EXPECT_EQ(norm_sq(vec(1, 1, QSqrt2::sqrt2())), QSqrt2(4));
}

TEST(Mat3, RotationsPreserveDistance) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Mat3 r = rotation(random_reduced_word(rng, 8));
    const Vec3 p = random_vec3(rng);
    ASSERT_EQ(norm_sq(r * p), norm_sq(p));
  }
}

TEST(Mat3, JsonRoundTrip) {
  const nlohmann::json j = to_json(a_plus());
  ASSERT_EQ(j.size(), 9u);
  EXPECT_EQ(j[4], nlohmann::json::parse(R"([["1","3"],["0","1"]])"));
  EXPECT_EQ(j[5], nlohmann::json::parse(R"([["0","1"],["-2","3"]])"));
  EXPECT_EQ(mat3_from_json(j), a_plus());
}

TEST(Mat3, PrettyStringAlignsColumns) {
  EXPECT_EQ(to_pretty_string(a_plus()),
            "[ 1      0       0 ]\n"
            "[ 0    1/3  -2/3√2 ]\n"
            "[ 0  2/3√2     1/3 ]\n");
}

TEST(Mat3, CanonicalKeySeparatesDistinctMatrices) {
  EXPECT_EQ(canonical_key(a_plus() * a_minus()), canonical_key(identity()));
  EXPECT_NE(canonical_key(a_plus()), canonical_key(a_minus()));
}
