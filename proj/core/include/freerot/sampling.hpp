#pragma once

// Seeded generators for randomized checks.
//
// All randomness comes from one std::mt19937_64 seeded with the user seed.
// Draws use `rng() % n` on the raw 64-bit output rather than the standard
// distributions, whose output is not specified across library versions, so a
// (seed, sample index) pair names the same input everywhere.

#include <cstddef>
#include <cstdint>
#include <random>

#include "freerot/mat3.hpp"
#include "freerot/words.hpp"

namespace freerot {

using Rng = std::mt19937_64;

/// Uniform in [0, n). n must be positive.
std::uint64_t draw_below(Rng& rng, std::uint64_t n);

/// Uniform in [lo, hi].
long draw_between(Rng& rng, long lo, long hi);

/// Length uniform in [0, max_len], letters uniform over all four.
Word random_weak_word(Rng& rng, std::size_t max_len);

/// Length uniform in [0, max_len]; first letter uniform over four, each
/// later letter uniform over the three that do not cancel.
ReducedWord random_reduced_word(Rng& rng, std::size_t max_len);

/// p/q + r/s*sqrt2 with |p|, |r| <= bound and 1 <= q, s <= bound.
QSqrt2 random_scalar(Rng& rng, long bound = 9);

/// Rational point (no sqrt2 part) with components p/q, |p|, q <= bound.
Vec3 random_rational_point(Rng& rng, long bound = 20);

Vec3 random_vec3(Rng& rng, long bound = 9);
Mat3 random_mat3(Rng& rng, long bound = 9);

}  // namespace freerot
