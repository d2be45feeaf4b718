#pragma once

#include <optional>
#include <vector>

#include "nilat/core/matrix.hpp"

namespace nilat {

struct SnfResult {
  ZVector divisors;  // min(rows, cols) entries, d_i | d_{i+1}, all >= 0
  ZMatrix left;      // unimodular, rows x rows
  ZMatrix right;     // unimodular, cols x cols
};

// left * m * right = diag(divisors). Pivot = entry of minimal nonzero
// absolute value in the active block.
inline SnfResult smith_normal_form(const ZMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  ZMatrix a = m;
  ZMatrix L = ZMatrix::identity(R), Rt = ZMatrix::identity(C);
  const std::size_t steps = std::min(R, C);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pi = R, pj = C;
      Integer best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (a(i, j) == 0) continue;
          Integer v = abs(a(i, j));
          if (pi == R || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == R) break;  // active block is zero
      a.swap_rows(t, pi);
      L.swap_rows(t, pi);
      a.swap_cols(t, pj);
      Rt.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = trunc_div(a(i, t), a(t, t));
        a.add_row(i, t, -q);
        L.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = trunc_div(a(t, j), a(t, t));
        a.add_col(j, t, -q);
        Rt.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce the divisor chain: fold an offending row into row t.
      bool chain = true;
      for (std::size_t i = t + 1; i < R && chain; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!divides(a(t, t), a(i, j))) {
            a.add_row(t, i, Integer(1));
            L.add_row(t, i, Integer(1));
            chain = false;
            break;
          }
      if (chain) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      L.negate_row(t);
    }
  }
  SnfResult res;
  for (std::size_t t = 0; t < steps; ++t) res.divisors.push_back(a(t, t));
  res.left = std::move(L);
  res.right = std::move(Rt);
  return res;
}

inline Integer determinant(const ZMatrix &m) {
  require_input(m.square(), "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer prev = 1;
  int sgn_ = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn_ = -sgn_;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return Integer(sgn_ * a(n - 1, n - 1));
}

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// nonzero rows only, positive pivots, entries above each pivot in [0, pivot).
inline ZMatrix hermite_normal_form(const ZMatrix &m) {
  ZMatrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    while (true) {
      std::size_t p = R;
      for (std::size_t i = r; i < R; ++i)
        if (a(i, c) != 0 && (p == R || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == R) break;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (a(i, c) == 0) continue;
        a.add_row(i, r, -trunc_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < R && a(r, c) != 0) {
      if (a(r, c) < 0) a.negate_row(r);
      for (std::size_t i = 0; i < r; ++i) a.add_row(i, r, -floor_div(a(i, c), a(r, c)));
      ++r;
    }
  }
  ZMatrix h(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) h(i, j) = a(i, j);
  return h;
}

// Z-basis (as columns) of { x in Z^n : m x = 0 }; automatically saturated.
inline std::vector<ZVector> integer_kernel(const ZMatrix &m) {
  SnfResult s = smith_normal_form(m);
  std::vector<ZVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero_col = j >= s.divisors.size() || s.divisors[j] == 0;
    if (zero_col) out.push_back(s.right.col(j));
  }
  return out;
}

// Integer solution of m x = b if one exists.
inline std::optional<ZVector> solve_integer(const ZMatrix &m, const ZVector &b) {
  require_input(b.size() == m.rows(), "solve_integer: size mismatch");
  SnfResult s = smith_normal_form(m);
  ZVector c = s.left * b;  // D y = c with x = right y
  ZVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d = i < s.divisors.size() ? s.divisors[i] : Integer(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (!divides(d, c[i])) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  return s.right * y;
}

inline ZMatrix integer_inverse(const ZMatrix &m) {
  Integer det = determinant(m);
  require(det == 1 || det == -1, "matrix is not unimodular");
  // Solve column by column over Z.
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    ZVector e(m.rows(), Integer(0));
    e[j] = 1;
    auto x = solve_integer(m, e);
    require(x.has_value(), "matrix is not unimodular");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = (*x)[i];
  }
  return out;
}

} // namespace nilat
