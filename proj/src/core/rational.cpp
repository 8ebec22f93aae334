#include "cobeh/core/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cobeh/core/error.hpp"

namespace cobeh {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

void require_same_dim(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector dimensions " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
  }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  Rational r;
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

QVector zero_vector(std::size_t dim) { return QVector(dim); }

QVector unit_vector(std::size_t dim, std::size_t i) {
  QVector v(dim);
  v.at(i) = 1;
  return v;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  require_same_dim(a, b);
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

QVector sub(const QVector& a, const QVector& b) {
  require_same_dim(a, b);
  QVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  require_same_dim(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

QVector row_times(const QVector& v, const QMatrix& m) {
  if (m.size() != v.size()) {
    throw DimensionMismatch("row vector of dimension " + std::to_string(v.size()) +
                            " against matrix with " + std::to_string(m.size()) + " rows");
  }
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  QVector out(cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (m[i].size() != cols) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!m[i][j].is_zero()) out[j] += v[i] * m[i][j];
    }
  }
  return out;
}

QVector times_column(const QMatrix& m, const QVector& v) {
  QVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

std::string format_vector(const QVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].str();
  }
  out += ']';
  return out;
}

QVector parse_vector(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw MalformedInput("vector must be written [p/q, ...]: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  QVector out;
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace cobeh
