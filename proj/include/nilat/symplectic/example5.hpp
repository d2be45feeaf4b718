#pragma once

#include <optional>

#include "nilat/core/integer_forms.hpp"

namespace nilat {

// Intersection of the integer lattice of the six-dimensional cyclic example
// with exp(I^perp), where I^perp is cut out by sum x_i b_i = 0 and the b_i are
// real numbers given by rational coordinates over a Q-independent basis.
struct GammaPrimeReport {
  std::size_t w_dim = 0;           // dim over Q of span{b_1, b_2, b_3}
  std::size_t gamma_prime_rank = 0;
  bool is_lattice = false;         // rank equals dim I^perp = 5
  std::vector<ZVector> x_part;     // Z-basis of { x in Z^3 : sum x_i b_i = 0 }
  std::optional<ZVector> form;     // primitive f with Gamma' = { f(x) = 0 } when w_dim = 1
};

inline GammaPrimeReport example5_gamma_prime(const std::vector<QVector> &b) {
  require_input(b.size() == 3, "three coefficient vectors expected");
  const std::size_t m = b[0].size();
  require_input(m > 0 && b[1].size() == m && b[2].size() == m, "coefficient vectors of different lengths");
  // Clear denominators column by column; the integer kernel is unchanged.
  ZMatrix a(m, 3);
  for (std::size_t c = 0; c < m; ++c) {
    Integer den = 1;
    for (std::size_t i = 0; i < 3; ++i) den = lcm(den, b[i][c].get_den());
    for (std::size_t i = 0; i < 3; ++i) a(c, i) = to_integer(b[i][c] * Rational(den));
  }
  require_input(!a.is_zero(), "all coefficients vanish");
  GammaPrimeReport rep;
  rep.w_dim = rank(to_rational(a));
  rep.x_part = integer_kernel(a);
  rep.gamma_prime_rank = rep.x_part.size() + 3;
  rep.is_lattice = rep.gamma_prime_rank == 5;
  if (rep.w_dim == 1) {
    for (std::size_t c = 0; c < m && !rep.form; ++c) {
      ZVector f{a(c, 0), a(c, 1), a(c, 2)};
      if (f[0] == 0 && f[1] == 0 && f[2] == 0) continue;
      Integer g = gcd(gcd(f[0], f[1]), f[2]);
      Integer s = 0;
      for (auto &v : f) {
        v /= g;
        if (s == 0 && v != 0) s = v > 0 ? 1 : -1;
      }
      for (auto &v : f) v *= s;
      rep.form = f;
    }
  }
  return rep;
}

} // namespace nilat
