#include "freerot/sampling.hpp"

#include <stdexcept>

namespace freerot {

std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("draw_below: n must be positive");
  return rng() % n;
}

long draw_between(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(draw_below(rng, span));
}

Word random_weak_word(Rng& rng, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(draw_below(rng, max_len + 1));
  Word w(len);
  for (auto& l : w) l = kLetters[draw_below(rng, 4)];
  return w;
}

ReducedWord random_reduced_word(Rng& rng, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(draw_below(rng, max_len + 1));
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i == 0) {
      w.push_back(kLetters[draw_below(rng, 4)]);
      continue;
    }
    // Skip over the one forbidden letter.
    std::size_t pick = draw_below(rng, 3);
    const std::size_t forbidden = index_of(inverse(w.back()));
    if (pick >= forbidden) ++pick;
    w.push_back(kLetters[pick]);
  }
  return ReducedWord::from_reduced(std::move(w));
}

namespace {

mpq_class random_rational(Rng& rng, long bound) {
  return mpq_class(draw_between(rng, -bound, bound), draw_between(rng, 1, bound));
}

}  // namespace

QSqrt2 random_scalar(Rng& rng, long bound) {
  mpq_class rat = random_rational(rng, bound);
  mpq_class irr = random_rational(rng, bound);
  return QSqrt2(std::move(rat), std::move(irr));
}

Vec3 random_rational_point(Rng& rng, long bound) {
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = QSqrt2(random_rational(rng, bound), 0);
  return v;
}

Vec3 random_vec3(Rng& rng, long bound) {
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = random_scalar(rng, bound);
  return v;
}

Mat3 random_mat3(Rng& rng, long bound) {
  std::array<QSqrt2, 9> e;
  for (auto& x : e) x = random_scalar(rng, bound);
  return Mat3(e);
}

}  // namespace freerot
