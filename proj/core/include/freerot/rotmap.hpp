#pragma once

// The homomorphism from F2 into SO(3) over Q(sqrt2).

#include <array>

#include "freerot/mat3.hpp"
#include "freerot/words.hpp"

namespace freerot {

/// Rotation matrix for each letter, indexed by `index_of`:
///
///   A+ = [1 0 0; 0 1/3 -2√2/3; 0 2√2/3 1/3]      (a)
///   A- = transpose(A+)                           (a^-1)
///   B+ = [1/3 -2√2/3 0; 2√2/3 1/3 0; 0 0 1]      (b)
///   B- = transpose(B+)                           (b^-1)
///
/// A± turn about the x-axis and B± about the z-axis, each by arccos(1/3).
using GeneratorTable = std::array<Mat3, 4>;

const GeneratorTable& generator_table();

inline const Mat3& generator(Letter l) { return generator_table()[index_of(l)]; }

/// X1 * X2 * ... * Xn for w = x1 x2 ... xn; the identity for the empty word.
/// Folds from the left: ((X1 X2) X3) ...
Mat3 rotation(const ReducedWord& w);

/// Accepts a weak word by reducing it first.
Mat3 rotation(WordView w);

/// rotation(inverse(w)).
Mat3 rotation_of_inverse(const ReducedWord& w);

}  // namespace freerot
