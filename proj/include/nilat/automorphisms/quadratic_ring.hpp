#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilat/core/rational.hpp"

namespace nilat {

// Ring of integers of Q(sqrt m), m squarefree. Elements a + b w with w = sqrt m
// (Sqrt basis) or w = (1 + sqrt m) / 2 when m = 1 mod 4 (Half basis). The
// parameter m is the usual one: m > 0 gives a real field, m < 0 an imaginary one.
enum class BasisKind { Sqrt, Half };

struct QuadInt {
  Integer a = 0, b = 0;
  friend bool operator==(const QuadInt &x, const QuadInt &y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadInt &x, const QuadInt &y) { return !(x == y); }
};

inline bool is_squarefree(const Integer &m) {
  Integer n = abs(m);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

struct QuadraticRing {
  Integer m;
  BasisKind kind = BasisKind::Sqrt;
  Integer p, q;  // w^2 = p + q w

  QuadInt one() const { return {1, 0}; }
  QuadInt w() const { return {0, 1}; }

  QuadInt add(const QuadInt &x, const QuadInt &y) const { return {x.a + y.a, x.b + y.b}; }
  QuadInt neg(const QuadInt &x) const { return {-x.a, -x.b}; }
  QuadInt mul(const QuadInt &x, const QuadInt &y) const {
    Integer bd = x.b * y.b;
    return {x.a * y.a + bd * p, x.a * y.b + x.b * y.a + bd * q};
  }
  // conjugate of w is q - w
  QuadInt conj(const QuadInt &x) const { return {x.a + x.b * q, -x.b}; }
  Integer norm(const QuadInt &x) const { return x.a * x.a + x.a * x.b * q - x.b * x.b * p; }
  Integer trace(const QuadInt &x) const { return 2 * x.a + x.b * q; }
  bool is_unit(const QuadInt &x) const { return abs(norm(x)) == 1; }

  QuadInt unit_inverse(const QuadInt &x) const {
    Integer n = norm(x);
    require(abs(n) == 1, "element is not a unit");
    QuadInt c = conj(x);
    return {c.a * n, c.b * n};
  }

  QuadInt pow(const QuadInt &x, long k) const {
    QuadInt base = k < 0 ? unit_inverse(x) : x;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    QuadInt r = one();
    while (e) {
      if (e & 1ul) r = mul(r, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return r;
  }

  // Matrix of multiplication by x in the basis (1, w).
  std::vector<std::vector<Integer>> mult_matrix(const QuadInt &x) const {
    return {{x.a, x.b * p}, {x.b, x.a + x.b * q}};
  }

  // x = r + s sqrt m
  std::pair<Rational, Rational> radical_coords(const QuadInt &x) const {
    if (kind == BasisKind::Sqrt) return {Rational(x.a), Rational(x.b)};
    Rational h(x.b, 2);
    h.canonicalize();
    return {Rational(x.a) + h, h};
  }

  QuadInt from_radical(const Rational &r, const Rational &s) const {
    if (kind == BasisKind::Sqrt) {
      require_input(is_integer(r) && is_integer(s), "number is not in the ring");
      return {to_integer(r), to_integer(s)};
    }
    Rational b = 2 * s, a = r - s;
    require_input(is_integer(a) && is_integer(b), "number is not in the ring");
    return {to_integer(a), to_integer(b)};
  }

  void validate() const {
    const QuadInt basis[2] = {one(), w()};
    for (const auto &x : basis)
      for (const auto &y : basis)
        for (const auto &z : basis)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw StructuralError("multiplication is not associative");
    auto [r, s] = radical_coords(w());
    require(r * r + s * s * Rational(m) == Rational(p) + Rational(q) * r && 2 * r * s == Rational(q) * s,
            "w does not satisfy its minimal polynomial");
  }
};

inline QuadraticRing ring_of_integers(const Integer &m) {
  require_input(m != 0 && m != 1, "m must differ from 0 and 1");
  require_input(is_squarefree(m), "m must be squarefree");
  QuadraticRing r;
  r.m = m;
  if (floor_mod(m, 4) == 1) {
    r.kind = BasisKind::Half;
    r.p = (m - 1) / 4;
    r.q = 1;
  } else {
    r.p = m;
    r.q = 0;
  }
  r.validate();
  return r;
}

// Sign of r + s sqrt m for m > 0.
inline int real_sign(const Integer &m, const Rational &r, const Rational &s) {
  int a = sgn(r), b = sgn(s);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  Rational d = r * r - s * s * Rational(m);
  return sgn(d) * a;
}

// Compare |r + s sqrt m| with 1 (complex modulus when m < 0).
inline int compare_modulus_with_one(const Integer &m, const Rational &r, const Rational &s) {
  if (m < 0) {
    Rational n = r * r - s * s * Rational(m);
    return n > 1 ? 1 : n < 1 ? -1 : 0;
  }
  if (real_sign(m, r - 1, s) > 0 || real_sign(m, r + 1, s) < 0) return 1;
  if (real_sign(m, r - 1, s) == 0 || real_sign(m, r + 1, s) == 0) return 0;
  return -1;
}

// Text such as "1+sqrt2", "(1+sqrt5)/2", "-sqrt(-1)".
inline std::string radical_string(const Integer &m, const Rational &r, const Rational &s) {
  Integer den = lcm(r.get_den(), s.get_den());
  Integer x = to_integer(r * Rational(den)), y = to_integer(s * Rational(den));
  std::string root = m > 0 ? "sqrt" + m.get_str() : "sqrt(" + m.get_str() + ")";
  std::string out;
  if (y == 0) {
    out = x.get_str();
  } else {
    std::string coeff = y == 1 ? "" : y == -1 ? "-" : y.get_str();
    if (x != 0) out = x.get_str() + (y > 0 ? "+" : "");
    out += coeff + root;
  }
  if (den == 1) return out;
  bool sum = x != 0 && y != 0;
  return (sum ? "(" + out + ")" : out) + "/" + den.get_str();
}

inline std::string to_string(const QuadraticRing &ring, const QuadInt &x) {
  auto [r, s] = ring.radical_coords(x);
  return radical_string(ring.m, r, s);
}

// Fundamental unit of a real quadratic ring: the first convergent p/q of the
// continued fraction of w with p - q w' a unit, w' the conjugate of w.
inline QuadInt fundamental_unit(const Integer &m) {
  require_input(m > 1, "fundamental unit needs a real field (m > 1)");
  QuadraticRing ring = ring_of_integers(m);
  // Complete quotients (P + sqrt m) / Q with Q | m - P^2.
  Integer P = ring.kind == BasisKind::Half ? 1 : 0, Q = ring.kind == BasisKind::Half ? 2 : 1;
  const Integer s = isqrt(m);
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  for (;;) {
    Integer a = floor_div(P + s, Q);
    Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    QuadInt u = ring.kind == BasisKind::Half ? QuadInt{h - k, k} : QuadInt{h, k};
    if (ring.is_unit(u)) return u;
    P = a * Q - P;
    Q = (m - P * P) / Q;
  }
}

struct UnitGroupDesc {
  unsigned torsion = 2;  // order of the cyclic torsion subgroup
  std::optional<QuadInt> fundamental;

  std::string torsion_name() const { return "C" + std::to_string(torsion); }
};

// Roots of unity counted among elements of norm 1 in a box that contains all
// of them when m < 0; only +-1 when m > 0.
inline unsigned unit_torsion(const Integer &m) {
  QuadraticRing ring = ring_of_integers(m);
  if (m > 0) return 2;
  unsigned count = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      if (ring.norm({a, b}) == 1) ++count;
  return count;
}

inline UnitGroupDesc unit_group(const Integer &m) {
  UnitGroupDesc d;
  d.torsion = unit_torsion(m);
  if (m > 1) d.fundamental = fundamental_unit(m);
  return d;
}

} // namespace nilat
