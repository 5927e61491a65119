#include "freerot/rotmap.hpp"

namespace freerot {

namespace {

GeneratorTable make_generator_table() {
  const QSqrt2 zero;
  const QSqrt2 one(1);
  const QSqrt2 third = QSqrt2::rational(1, 3);
  const QSqrt2 s = QSqrt2(0, mpq_class(2, 3));  // 2√2/3

  const Mat3 a_plus({one, zero, zero,
                     zero, third, -s,
                     zero, s, third});
  const Mat3 a_minus({one, zero, zero,
                      zero, third, s,
                      zero, -s, third});
  const Mat3 b_plus({third, -s, zero,
                     s, third, zero,
                     zero, zero, one});
  const Mat3 b_minus({third, s, zero,
                      -s, third, zero,
                      zero, zero, one});

  GeneratorTable table;
  table[index_of(Letter::GenA)] = a_plus;
  table[index_of(Letter::InvA)] = a_minus;
  table[index_of(Letter::GenB)] = b_plus;
  table[index_of(Letter::InvB)] = b_minus;
  return table;
}

}  // namespace

const GeneratorTable& generator_table() {
  static const GeneratorTable table = make_generator_table();
  return table;
}

Mat3 rotation(const ReducedWord& w) {
  Mat3 acc = Mat3::identity();
  for (Letter l : w.letters()) acc = acc * generator(l);
  return acc;
}

Mat3 rotation(WordView w) { return rotation(reduce(w)); }

Mat3 rotation_of_inverse(const ReducedWord& w) { return rotation(inverse(w)); }

}  // namespace freerot
