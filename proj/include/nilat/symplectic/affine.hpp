#pragma once

#include "nilat/symplectic/forms.hpp"

namespace nilat {

struct AffineStructure {
  ProductTable product;  // products[a][b] = L_a b
  QVector e_square;      // L_e e
};

// Left-symmetric product on L = I + Re with I an abelian ideal: L_x = 0 for
// x in I, L_e = ad_e on I, and L_e e = c where w(c, y) = -w(e, [e, y]) on I
// and w(c, e) = 0. With L_e e = 0 the parallelism identity fails whenever
// w(e, [e, I]) is nonzero, so the correction term is required.
inline AffineStructure codim1_affine_structure(const LieAlgebra &L, const Subspace &ideal, const QVector &e,
                                               const AlternatingForm &w) {
  const std::size_t n = L.dim();
  require_symplectic(L, w);
  require_input(ideal.ambient() == n && e.size() == n, "sizes do not match the algebra");
  require(ideal.dim() + 1 == n, "subspace is not of codimension one");
  require(!ideal.contains(e), "complement vector lies in the subspace");
  require(is_ideal(L, ideal), "subspace is not an ideal");
  require(is_abelian_subspace(L, ideal), "ideal is not abelian");

  // Solve for c: rows w(., y) for y in a basis of I and w(., e).
  QMatrix sys(n, n);
  QVector rhs(n);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const QVector &y = ideal.basis()[r];
    for (std::size_t c = 0; c < n; ++c) sys(r, c) = w.eval(unit_vector(n, c), y);
    rhs[r] = -w.eval(e, L.bracket(e, y));
  }
  for (std::size_t c = 0; c < n; ++c) sys(n - 1, c) = w.eval(unit_vector(n, c), e);
  AffineStructure out;
  out.e_square = *solve(sys, rhs);

  // Split each basis vector as x + t e with x in I.
  std::vector<QVector> cols = ideal.basis();
  cols.push_back(e);
  QMatrix split = inverse(QMatrix::from_columns(cols, n));
  std::vector<Rational> t(n);
  std::vector<QVector> x(n);
  for (std::size_t p = 0; p < n; ++p) {
    QVector c = split * unit_vector(n, p);
    t[p] = c[n - 1];
    x[p] = sub(unit_vector(n, p), scale(t[p], e));
  }
  out.product = {n, std::vector<std::vector<QVector>>(n, std::vector<QVector>(n, QVector(n, Rational(0))))};
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      out.product.products[a][b] = scale(t[a], add(L.bracket(e, x[b]), scale(t[b], out.e_square)));
  }
  return out;
}

} // namespace nilat
