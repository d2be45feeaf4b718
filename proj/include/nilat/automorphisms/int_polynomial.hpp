#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nilat/core/matrix.hpp"

namespace nilat {

// Univariate polynomial with integer coefficients, dense from low to high
// degree; the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(ZVector coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntPolynomial monomial(const Integer &c, std::size_t k) {
    ZVector v(k + 1, Integer(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const ZVector &coefficients() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }

  Integer eval(const Integer &x) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  Rational eval(const Rational &x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rational(c_[i]);
    return r;
  }

  friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial &a, const IntPolynomial &b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    ZVector r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial &a) {
    ZVector r = a.c_;
    for (auto &x : r) x = -x;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZVector r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }

  // "X^3 - 15*X - 1"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer &c = c_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      std::string x = i == 0 ? "" : i == 1 ? "X" : "X^" + std::to_string(i);
      if (i == 0) out += mag.get_str();
      else out += (mag == 1 ? "" : mag.get_str() + "*") + x;
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  ZVector c_;
};

inline IntPolynomial derivative(const IntPolynomial &p) {
  ZVector r;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) r.push_back(Integer(static_cast<long>(i)) * p.coeff(i));
  return IntPolynomial(std::move(r));
}

// X^deg p(1/X) after removing any factor X.
inline IntPolynomial reciprocal(const IntPolynomial &p) {
  ZVector c = p.coefficients();
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

inline Integer content(const IntPolynomial &p) {
  Integer g = 0;
  for (const auto &c : p.coefficients()) g = gcd(g, c);
  return g;
}

// Content removed and leading coefficient made positive.
inline IntPolynomial primitive_part(const IntPolynomial &p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  ZVector c = p.coefficients();
  for (auto &x : c) x /= g;
  return IntPolynomial(std::move(c));
}

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly to_qpoly(const IntPolynomial &p) {
  QPoly r;
  for (const auto &c : p.coefficients()) r.emplace_back(c);
  return r;
}

inline IntPolynomial to_primitive(QPoly p) {
  trim(p);
  Integer den = 1;
  for (const auto &c : p) den = lcm(den, c.get_den());
  ZVector z;
  for (const auto &c : p) z.push_back(to_integer(c * Rational(den)));
  return primitive_part(IntPolynomial(std::move(z)));
}

// Remainder of a modulo b over Q; b nonzero. Quotient written to q if given.
inline QPoly divmod(QPoly a, const QPoly &b, QPoly *q = nullptr) {
  trim(a);
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    if (q) (*q)[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Rational eval(const QPoly &p, const Rational &x) {
  Rational r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

} // namespace detail

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline IntPolynomial gcd(const IntPolynomial &a, const IntPolynomial &b) {
  detail::QPoly x = detail::to_qpoly(a), y = detail::to_qpoly(b);
  while (!y.empty()) {
    detail::QPoly r = detail::divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return detail::to_primitive(x);
}

// a / b when b divides a over Z.
inline IntPolynomial exact_quotient(const IntPolynomial &a, const IntPolynomial &b) {
  require_input(!b.is_zero(), "division by the zero polynomial");
  detail::QPoly q;
  detail::QPoly r = detail::divmod(detail::to_qpoly(a), detail::to_qpoly(b), &q);
  require(r.empty(), "polynomial does not divide");
  ZVector z;
  for (const auto &c : q) {
    require(is_integer(c), "quotient is not integral");
    z.push_back(to_integer(c));
  }
  return IntPolynomial(std::move(z));
}

// Number of distinct real roots in (lo, hi] by a Sturm sequence.
inline std::size_t sturm_count(const IntPolynomial &p, const Rational &lo, const Rational &hi) {
  require_input(!p.is_zero(), "Sturm count of the zero polynomial");
  std::vector<detail::QPoly> seq{detail::to_qpoly(p), detail::to_qpoly(derivative(p))};
  while (!seq.back().empty()) {
    detail::QPoly r = detail::divmod(seq[seq.size() - 2], seq.back());
    for (auto &c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  auto variations = [&](const Rational &x) {
    std::size_t v = 0;
    int last = 0;
    for (const auto &s : seq) {
      int sg = sgn(detail::eval(s, x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

// For a palindromic g of degree 2k, the h of degree k with g(z) = z^k h(z + 1/z),
// built from z^j + z^-j = D_j(x), D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}.
inline IntPolynomial chebyshev_transform(const IntPolynomial &g) {
  require_input(!g.is_zero() && g.degree() % 2 == 0 && reciprocal(g) == g && g.coeff(0) != 0,
                "polynomial is not palindromic of even degree");
  const std::size_t k = static_cast<std::size_t>(g.degree() / 2);
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  IntPolynomial d_prev{2}, d = x;
  IntPolynomial h = IntPolynomial::monomial(g.coeff(k), 0);
  for (std::size_t j = 1; j <= k; ++j) {
    h = h + IntPolynomial::monomial(g.coeff(k + j), 0) * d;
    IntPolynomial next = x * d - d_prev;
    d_prev = d;
    d = next;
  }
  return h;
}

// Exact test for a complex root of modulus one.
inline bool has_unit_circle_root(const IntPolynomial &p) {
  require_input(!p.is_zero(), "zero polynomial");
  std::size_t low = 0;
  while (p.coeff(low) == 0) ++low;
  IntPolynomial q(ZVector(p.coefficients().begin() + static_cast<long>(low), p.coefficients().end()));
  if (q.degree() == 0) return false;
  if (q.eval(Integer(1)) == 0 || q.eval(Integer(-1)) == 0) return true;
  IntPolynomial g = gcd(q, reciprocal(q));
  if (g.degree() == 0) return false;
  // Without roots +-1 the root multiset of g is closed under z -> 1/z with
  // product 1, so g is palindromic of even degree.
  IntPolynomial h = chebyshev_transform(g);
  std::size_t inside = sturm_count(h, Rational(-2), Rational(2));
  if (h.eval(Rational(-2)) == 0) ++inside;
  return inside > 0;
}

// det(X I - m) by the Faddeev-LeVerrier recursion.
inline IntPolynomial characteristic_polynomial(const ZMatrix &m) {
  require_input(m.square(), "characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  QMatrix a = to_rational(m), mk(n, n);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * QMatrix::identity(n);
    QMatrix amk = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  ZVector z;
  for (const auto &x : c) z.push_back(to_integer(x));
  return IntPolynomial(std::move(z));
}

// Second compound: the action on the pairs e_i ^ e_j (i < j), lexicographic.
inline ZMatrix second_compound(const ZMatrix &m) {
  require_input(m.square(), "compound of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  ZMatrix out(pairs.size(), pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      auto [i, j] = pairs[r];
      auto [k, l] = pairs[s];
      out(r, s) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  return out;
}

} // namespace nilat
