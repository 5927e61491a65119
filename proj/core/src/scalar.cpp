#include "freerot/scalar.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace freerot {

QSqrt2::QSqrt2(mpq_class rat, mpq_class irr)
    : rat_(std::move(rat)), irr_(std::move(irr)) {
  rat_.canonicalize();
  irr_.canonicalize();
}

QSqrt2 QSqrt2::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("QSqrt2::rational: zero denominator");
  return QSqrt2(mpq_class(num, den), 0);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  // (r1 + i1 s)(r2 + i2 s) = (r1 r2 + 2 i1 i2) + (r1 i2 + r2 i1) s
  mpq_class r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
  mpq_class i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QSqrt2 inv(const QSqrt2& s) {
  if (s.is_zero()) throw DivisionByZero("inv: zero has no inverse in Q(sqrt2)");
  const mpq_class n = s.norm();
  return QSqrt2(s.rat() / n, -s.irr() / n);
}

QSqrt2 div_exact_sqrt2(const QSqrt2& s) {
  // (r + i sqrt2) / sqrt2 = i + (r/2) sqrt2
  return QSqrt2(s.irr(), s.rat() / 2);
}

QSqrt2 scale_pow3(const QSqrt2& s, long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return QSqrt2(s.rat() * p, s.irr() * p);
  return QSqrt2(s.rat() / p, s.irr() / p);
}

mpz_class as_integer(const QSqrt2& s) {
  if (sgn(s.irr()) != 0 || s.rat().get_den() != 1) {
    throw NonIntegral("as_integer: " + to_string(s) + " is not an integer");
  }
  return s.rat().get_num();
}

namespace {

// Coefficient of sqrt2 followed by the unit, dropping a coefficient of +-1.
std::string irr_term(const mpq_class& irr, std::string_view sep,
                     std::string_view unit) {
  if (irr == 1) return std::string(unit);
  if (irr == -1) return "-" + std::string(unit);
  return irr.get_str() + std::string(sep) + std::string(unit);
}

}  // namespace

std::string to_string(const QSqrt2& s) {
  const bool has_rat = sgn(s.rat()) != 0;
  const bool has_irr = sgn(s.irr()) != 0;
  if (!has_rat && !has_irr) return "0";
  if (!has_irr) return s.rat().get_str();
  if (!has_rat) return irr_term(s.irr(), "*", "sqrt2");
  if (sgn(s.irr()) < 0) {
    return s.rat().get_str() + " - " + irr_term(-s.irr(), "*", "sqrt2");
  }
  return s.rat().get_str() + " + " + irr_term(s.irr(), "*", "sqrt2");
}

std::string to_pretty_string(const QSqrt2& s) {
  const bool has_rat = sgn(s.rat()) != 0;
  const bool has_irr = sgn(s.irr()) != 0;
  if (!has_rat && !has_irr) return "0";
  if (!has_irr) return s.rat().get_str();
  if (!has_rat) return irr_term(s.irr(), "", "√2");
  if (sgn(s.irr()) < 0) return s.rat().get_str() + "-" + irr_term(-s.irr(), "", "√2");
  return s.rat().get_str() + "+" + irr_term(s.irr(), "", "√2");
}

nlohmann::json to_json(const QSqrt2& s) {
  return nlohmann::json::array(
      {nlohmann::json::array({s.rat().get_num().get_str(),
                              s.rat().get_den().get_str()}),
       nlohmann::json::array({s.irr().get_num().get_str(),
                              s.irr().get_den().get_str()})});
}

QSqrt2 scalar_from_json(const nlohmann::json& j) {
  auto component = [](const nlohmann::json& pair) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("scalar JSON: expected [num, den]");
    }
    mpz_class num(pair[0].get<std::string>());
    mpz_class den(pair[1].get<std::string>());
    if (den == 0) throw DivisionByZero("scalar JSON: zero denominator");
    return mpq_class(num, den);
  };
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("scalar JSON: expected [[p,q],[r,s]]");
  }
  return QSqrt2(component(j[0]), component(j[1]));
}

std::string to_string(const Int3& v) {
  return "(" + v.x.get_str() + ", " + v.y.get_str() + ", " + v.z.get_str() + ")";
}

}  // namespace freerot
