#include "freerot/mat3.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace freerot {

Mat3 Mat3::identity() { return diagonal(1, 1, 1); }

Mat3 Mat3::diagonal(const QSqrt2& d0, const QSqrt2& d1, const QSqrt2& d2) {
  Mat3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Mat3 mul(const Mat3& m1, const Mat3& m2) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      QSqrt2 acc;
      for (std::size_t k = 0; k < 3; ++k) {
        if (m1(i, k).is_zero() || m2(k, j).is_zero()) continue;
        acc += m1(i, k) * m2(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    QSqrt2 acc;
    for (std::size_t k = 0; k < 3; ++k) {
      if (m(i, k).is_zero() || v[k].is_zero()) continue;
      acc += m(i, k) * v[k];
    }
    out[i] = std::move(acc);
  }
  return out;
}

Mat3 transpose(const Mat3& m) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out(j, i) = m(i, j);
  }
  return out;
}

QSqrt2 det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 adjugate(const Mat3& m) {
  // adj(m)(j, i) = cofactor(i, j). With cyclic indices the signs of the 2x2
  // minors come out right without an explicit (-1)^(i+j).
  Mat3 adj;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      adj(j, i) = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
    }
  }
  return adj;
}

Mat3 inverse(const Mat3& m) {
  const QSqrt2 d = det(m);
  if (d.is_zero()) throw Singular("inverse: matrix is singular");
  const QSqrt2 scale = inv(d);
  Mat3 out = adjugate(m);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out(i, j) *= scale;
  }
  return out;
}

bool is_rotation(const Mat3& m) {
  return det(m) == QSqrt2(1) && mul(transpose(m), m) == Mat3::identity();
}

QSqrt2 dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

QSqrt2 norm_sq(const Vec3& v) { return dot(v, v); }

nlohmann::json to_json(const Mat3& m) {
  auto out = nlohmann::json::array();
  for (const auto& e : m.entries()) out.push_back(to_json(e));
  return out;
}

Mat3 mat3_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 9) {
    throw std::invalid_argument("matrix JSON: expected 9 scalars");
  }
  std::array<QSqrt2, 9> entries;
  for (std::size_t i = 0; i < 9; ++i) entries[i] = scalar_from_json(j[i]);
  return Mat3(entries);
}

nlohmann::json to_json(const Vec3& v) {
  return nlohmann::json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

namespace {

// Display width in code points; the only non-ASCII glyph we emit is √.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string to_pretty_string(const Mat3& m) {
  std::array<std::string, 9> cells;
  std::array<std::size_t, 3> widths{};
  for (std::size_t i = 0; i < 9; ++i) {
    cells[i] = to_pretty_string(m.entries()[i]);
    widths[i % 3] = std::max(widths[i % 3], display_width(cells[i]));
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < 3; ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string& cell = cells[r * 3 + c];
      out << std::string(widths[c] - display_width(cell), ' ') << cell;
      out << (c < 2 ? "  " : " ]\n");
    }
  }
  return out.str();
}

std::string canonical_key(const Mat3& m) {
  std::string key;
  for (const auto& e : m.entries()) {
    key += e.rat().get_str(32);
    key += ',';
    key += e.irr().get_str(32);
    key += ';';
  }
  return key;
}

std::string to_string(const Vec3& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " +
         to_string(v[2]) + ")";
}

}  // namespace freerot
