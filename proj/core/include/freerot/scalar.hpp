#pragma once

// Exact arithmetic in the quadratic field Q(sqrt2).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace freerot {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// rat + irr*sqrt2 with rational coefficients. Both coefficients are kept in
/// lowest terms with positive denominators, and since sqrt2 is irrational the
/// pair is unique per value: equality is structural.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long rat) : rat_(rat) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(mpq_class rat, mpq_class irr);

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  static QSqrt2 rational(long num, long den);

  const mpq_class& rat() const noexcept { return rat_; }
  const mpq_class& irr() const noexcept { return irr_; }

  bool is_zero() const noexcept { return sgn(rat_) == 0 && sgn(irr_) == 0; }

  /// rat^2 - 2*irr^2; the field norm, zero only at zero.
  mpq_class norm() const { return rat_ * rat_ - 2 * irr_ * irr_; }
  QSqrt2 conjugate() const { return QSqrt2(rat_, -irr_); }

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
  friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
  friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
  friend QSqrt2 operator-(const QSqrt2& a) { return QSqrt2(-a.rat_, -a.irr_); }

  friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }

 private:
  mpq_class rat_;
  mpq_class irr_;
};

inline QSqrt2 add(const QSqrt2& s, const QSqrt2& t) { return s + t; }
inline QSqrt2 mul(const QSqrt2& s, const QSqrt2& t) { return s * t; }
inline QSqrt2 neg(const QSqrt2& s) { return -s; }

/// (a - b*sqrt2) / (a^2 - 2b^2). Throws DivisionByZero on zero.
QSqrt2 inv(const QSqrt2& s);

/// s / sqrt2.
QSqrt2 div_exact_sqrt2(const QSqrt2& s);

/// s * 3^k; k may be negative.
QSqrt2 scale_pow3(const QSqrt2& s, long k);

/// The integer value of s. Throws NonIntegral when s has a sqrt2 part or a
/// denominator other than 1.
mpz_class as_integer(const QSqrt2& s);

/// "p/q + r/s*sqrt2" with zero terms elided, "0" for zero.
std::string to_string(const QSqrt2& s);

/// Compact form used in matrix pretty-printing: "p/q+r/s√2".
std::string to_pretty_string(const QSqrt2& s);

/// [[p,q],[r,s]] with every integer as a decimal string.
nlohmann::json to_json(const QSqrt2& s);
QSqrt2 scalar_from_json(const nlohmann::json& j);

struct Int3 {
  mpz_class x;
  mpz_class y;
  mpz_class z;

  friend bool operator==(const Int3& a, const Int3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

std::string to_string(const Int3& v);

}  // namespace freerot
