#pragma once

#include "nilat/symplectic/forms.hpp"

namespace nilat {

// A bivector r is a skew matrix; as a map G* -> G it sends alpha to the
// vector with components sum_i alpha_i r(i, j). The Yang-Baxter bracket is
// [[r,r]](a, b, c) = <a, [r b, r c]> + <b, [r c, r a]> + <c, [r a, r b]>.
inline QVector r_sharp(const QMatrix &r, const QVector &alpha) { return r.transpose() * alpha; }

inline Rational cybe_bracket(const LieAlgebra &L, const QMatrix &r, const QVector &a, const QVector &b,
                             const QVector &c) {
  QVector ra = r_sharp(r, a), rb = r_sharp(r, b), rc = r_sharp(r, c);
  return dot(a, L.bracket(rb, rc)) + dot(b, L.bracket(rc, ra)) + dot(c, L.bracket(ra, rb));
}

inline bool cybe_check(const LieAlgebra &L, const QMatrix &r) {
  require_input(r.square() && r.rows() == L.dim(), "bivector of wrong size");
  require_input(is_skew(r), "bivector is not alternating");
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (cybe_bracket(L, r, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)) != 0) return false;
  return true;
}

// Bivector inverse to a nondegenerate form.
inline QMatrix inverse_bivector(const AlternatingForm &w) {
  require(is_nondegenerate(w), "form is degenerate");
  return inverse(w.matrix());
}

namespace detail {

// (ad*_x alpha)(y) = -alpha([x, y]).
inline QVector coadjoint(const LieAlgebra &L, const QVector &x, const QVector &alpha) {
  return scale(-1, L.ad(x).transpose() * alpha);
}

} // namespace detail

// Both algebras live on G* + G with covectors first (indices 0..n-1).
struct DoubleThetaReport {
  bool isomorphism = false;
  LieAlgebra cotangent;      // G* semidirect G via the coadjoint action
  LieAlgebra double_algebra; // D(G, r)
  QMatrix theta;             // (alpha, x) -> (alpha, r alpha + x)
};

inline LieAlgebra cotangent_algebra(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  LieAlgebra T(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVector b = L.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) T.add_bracket(n + i, n + j, n + k, b[k]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      QVector v = detail::coadjoint(L, unit_vector(n, i), unit_vector(n, a));
      for (std::size_t k = 0; k < n; ++k) T.add_bracket(n + i, a, k, v[k]);
    }
  return T;
}

// Manin double of the bialgebra of a triangular r: on G*,
// [a, b]_* = ad*_{ra} b - ad*_{rb} a; mixed [x, a] = ad*_x a - ad*_a x with
// <ad*_a x, b> = -<x, [a, b]_*>.
inline LieAlgebra double_algebra(const LieAlgebra &L, const QMatrix &r) {
  const std::size_t n = L.dim();
  auto star = [&](const QVector &a, const QVector &b) {
    return sub(detail::coadjoint(L, r_sharp(r, a), b), detail::coadjoint(L, r_sharp(r, b), a));
  };
  LieAlgebra D(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVector b = L.basis_bracket(i, j);
      QVector s = star(unit_vector(n, i), unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        D.add_bracket(n + i, n + j, n + k, b[k]);
        D.add_bracket(i, j, k, s[k]);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      QVector ea = unit_vector(n, a), xi = unit_vector(n, i);
      QVector cov = detail::coadjoint(L, xi, ea);
      QVector vec(n);
      for (std::size_t k = 0; k < n; ++k) vec[k] = star(ea, unit_vector(n, k))[i];
      // [x_i, a] = cov - ad*_a x_i, and (ad*_a x_i)_k = -[a, e_k^*]_*(x_i).
      for (std::size_t k = 0; k < n; ++k) {
        D.add_bracket(n + i, a, k, cov[k]);
        D.add_bracket(n + i, a, n + k, vec[k]);
      }
    }
  return D;
}

inline DoubleThetaReport double_theta_check(const LieAlgebra &L, const QMatrix &r) {
  require(cybe_check(L, r), "bivector does not solve the Yang-Baxter equation");
  const std::size_t n = L.dim();
  DoubleThetaReport rep;
  rep.cotangent = cotangent_algebra(L);
  rep.double_algebra = double_algebra(L, r);
  rep.theta = QMatrix::identity(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    QVector ra = r_sharp(r, unit_vector(n, a));
    for (std::size_t k = 0; k < n; ++k) rep.theta(n + k, a) = ra[k];
  }
  rep.isomorphism = validate_lie(rep.double_algebra).ok &&
                    is_homomorphism(rep.double_algebra, rep.cotangent, rep.theta);
  return rep;
}

struct RationalDouble {
  QMatrix basis;           // columns: dual basis covectors, then lattice vectors
  LieAlgebra cotangent;    // structure constants in that basis
  LieAlgebra double_algebra;
};

// Structure constants of t*G and D(G, r) in the basis (B* x 0) + (0 x B) for a
// Q-basis B of G taken from the logarithm of a lattice.
inline RationalDouble rational_structure_for_double(const LieAlgebra &L, const QMatrix &r,
                                                    const std::vector<QVector> &lattice_log) {
  const std::size_t n = L.dim();
  require_input(lattice_log.size() == n, "lattice basis must have dim G vectors");
  QMatrix p = QMatrix::from_columns(lattice_log, n);
  require_input(rank(p) == n, "lattice vectors do not span the algebra");
  QMatrix dual = inverse(p).transpose();  // column i is the covector b_i^*
  RationalDouble out;
  out.basis = QMatrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      out.basis(k, i) = dual(k, i);
      out.basis(n + k, n + i) = p(k, i);
    }
  out.cotangent = change_basis(cotangent_algebra(L), out.basis);
  out.double_algebra = change_basis(double_algebra(L, r), out.basis);
  return out;
}

} // namespace nilat
