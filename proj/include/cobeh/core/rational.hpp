#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cobeh {

/// Exact rational number p/q with arbitrary-precision numerator and
/// denominator. Always kept in lowest terms with q > 0.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p", "-p", "p/q" (surrounding whitespace allowed). Throws
  /// MalformedInput on syntax errors or a zero denominator.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

using QVector = std::vector<Rational>;
/// Row-major square or rectangular matrix.
using QMatrix = std::vector<QVector>;

QVector zero_vector(std::size_t dim);
QVector unit_vector(std::size_t dim, std::size_t i);
bool is_zero(const QVector& v);

/// The following throw DimensionMismatch on incompatible shapes.
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
/// Row vector times matrix: (v M)(j) = sum_i v(i) M(i, j).
QVector row_times(const QVector& v, const QMatrix& m);
/// Matrix times column vector: (M v)(i) = sum_j M(i, j) v(j).
QVector times_column(const QMatrix& m, const QVector& v);

/// "[1/2, 0, -3]"
std::string format_vector(const QVector& v);
/// Parses "[1/2, 0, -3]"; throws MalformedInput.
QVector parse_vector(std::string_view text);

}  // namespace cobeh
