#pragma once

#include "nilat/core/matrix.hpp"

namespace nilat {

inline bool is_nilpotent_matrix(const QMatrix &d) {
  require_input(d.square(), "nilpotent test on a non-square matrix");
  return power(d, static_cast<unsigned>(d.rows())).is_zero();
}

// Coefficients d^k / k! of exp(t d) as a polynomial in t, up to the last
// nonzero power.
inline std::vector<QMatrix> nilpotent_exp_series(const QMatrix &d) {
  require(is_nilpotent_matrix(d), "matrix is not nilpotent");
  std::vector<QMatrix> out{QMatrix::identity(d.rows())};
  QMatrix pw = d;
  for (unsigned k = 1; !pw.is_zero(); ++k) {
    out.push_back((1 / factorial(k)) * pw);
    pw = pw * d;
  }
  return out;
}

inline QMatrix nilpotent_exp(const QMatrix &d, const Rational &t) {
  auto series = nilpotent_exp_series(d);
  QMatrix r(d.rows(), d.cols());
  Rational tk = 1;
  for (const auto &c : series) {
    r = r + tk * c;
    tk *= t;
  }
  return r;
}

// log of a unipotent matrix: sum (-1)^{k+1} (u - I)^k / k.
inline QMatrix unipotent_log(const QMatrix &u) {
  QMatrix n = u - QMatrix::identity(u.rows());
  require(is_nilpotent_matrix(n), "matrix is not unipotent");
  QMatrix r(u.rows(), u.cols());
  QMatrix pw = n;
  for (unsigned k = 1; !pw.is_zero(); ++k) {
    Rational c(k % 2 ? 1 : -1, k);
    c.canonicalize();
    r = r + c * pw;
    pw = pw * n;
  }
  return r;
}

// g^t = sum_k binom(t, k) (g - I)^k for unipotent g and rational t; equals
// the ordinary power for integer t.
inline QMatrix unipotent_power(const QMatrix &g, const Rational &t) {
  QMatrix n = g - QMatrix::identity(g.rows());
  require(is_nilpotent_matrix(n), "matrix is not unipotent");
  QMatrix r = QMatrix::identity(g.rows());
  QMatrix pw = n;
  for (unsigned k = 1; !pw.is_zero(); ++k) {
    r = r + binomial(t, k) * pw;
    pw = pw * n;
  }
  return r;
}

} // namespace nilat
