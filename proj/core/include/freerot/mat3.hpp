#pragma once

// Exact 3x3 matrices and 3-vectors over Q(sqrt2).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "freerot/scalar.hpp"

namespace freerot {

class Singular : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vec3 {
  std::array<QSqrt2, 3> c;

  const QSqrt2& operator[](std::size_t i) const { return c[i]; }
  QSqrt2& operator[](std::size_t i) { return c[i]; }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Row-major 3x3 matrix. The shape is fixed by the type.
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(const std::array<QSqrt2, 9>& entries) : e_(entries) {}

  static Mat3 identity();
  static Mat3 diagonal(const QSqrt2& d0, const QSqrt2& d1, const QSqrt2& d2);

  const QSqrt2& operator()(std::size_t row, std::size_t col) const {
    return e_[row * 3 + col];
  }
  QSqrt2& operator()(std::size_t row, std::size_t col) {
    return e_[row * 3 + col];
  }
  const std::array<QSqrt2, 9>& entries() const noexcept { return e_; }

  Vec3 column(std::size_t col) const {
    return {{(*this)(0, col), (*this)(1, col), (*this)(2, col)}};
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<QSqrt2, 9> e_;
};

inline Mat3 identity() { return Mat3::identity(); }

Mat3 mul(const Mat3& m1, const Mat3& m2);
Vec3 apply(const Mat3& m, const Vec3& v);

inline Mat3 operator*(const Mat3& m1, const Mat3& m2) { return mul(m1, m2); }
inline Vec3 operator*(const Mat3& m, const Vec3& v) { return apply(m, v); }

Mat3 transpose(const Mat3& m);

/// Cofactor expansion along the first row.
QSqrt2 det(const Mat3& m);

/// Transpose of the cofactor matrix.
Mat3 adjugate(const Mat3& m);

/// adjugate(m) / det(m). Throws Singular when det(m) = 0.
Mat3 inverse(const Mat3& m);

/// det(m) = 1 and m^T m = I, compared exactly.
bool is_rotation(const Mat3& m);

QSqrt2 dot(const Vec3& u, const Vec3& v);
QSqrt2 norm_sq(const Vec3& v);

/// Row-major array of nine scalar renderings.
nlohmann::json to_json(const Mat3& m);
Mat3 mat3_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Vec3& v);

/// Multi-line text with right-aligned columns.
std::string to_pretty_string(const Mat3& m);

/// A canonical byte string for m: equal matrices and only equal matrices
/// share a key. Used for set membership in the injectivity checks.
std::string canonical_key(const Mat3& m);

std::string to_string(const Vec3& v);

}  // namespace freerot
