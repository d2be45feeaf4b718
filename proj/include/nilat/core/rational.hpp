#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nilat/core/errors.hpp"

namespace nilat {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

namespace detail {
inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
inline std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return s;
}
} // namespace detail

inline Integer parse_integer(std::string_view s) {
  require_input(detail::is_digits(detail::strip_sign(s)),
                "not an integer: '" + std::string(s) + "'");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

// Accepts "p", "-p", "p/q"; the result is canonical.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_s = s.substr(slash + 1);
  require_input(detail::is_digits(den_s), "bad denominator in '" + std::string(s) + "'");
  Integer den(std::string(den_s), 10);
  require_input(den != 0, "zero denominator in '" + std::string(s) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline std::string to_string(const Rational &q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational &q) {
  require_input(is_integer(q), "expected an integer, got " + to_string(q));
  return q.get_num();
}

inline long to_long(const Integer &z) {
  require_input(z.fits_slong_p(), "integer too large: " + z.get_str());
  return z.get_si();
}

inline int sign(const Integer &z) { return sgn(z); }
inline int sign(const Rational &q) { return sgn(q); }

inline Integer gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching nonnegative remainder (b > 0) or
// remainder with the sign of b.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_mod(const Integer &a, const Integer &b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer trunc_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer &d, const Integer &n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer &n) {
  require_input(n >= 0, "isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Integer &n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with a*s + b*t = g.
inline Integer ext_gcd(const Integer &a, const Integer &b, Integer &s, Integer &t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

// Generalized binomial coefficient t(t-1)...(t-k+1)/k! for any rational t.
inline Rational binomial(const Rational &t, unsigned k) {
  Rational b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= t - Rational(i);
    b /= Rational(i + 1);
  }
  return b;
}

inline bool is_zero(const QVector &v) {
  for (const auto &x : v)
    if (x != 0) return false;
  return true;
}

inline QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline QVector add(const QVector &a, const QVector &b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVector sub(const QVector &a, const QVector &b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVector scale(const Rational &c, const QVector &a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rational dot(const QVector &a, const QVector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVector to_rational(const ZVector &v) {
  QVector r;
  r.reserve(v.size());
  for (const auto &z : v) r.emplace_back(z);
  return r;
}

} // namespace nilat
