#pragma once

#include "nilat/core/algebras.hpp"
#include "nilat/core/cocycle.hpp"

namespace nilat {

inline bool is_symplectic(const LieAlgebra &L, const AlternatingForm &w) {
  return w.dim() == L.dim() && is_nondegenerate(w) && is_cocycle(L, w);
}

inline void require_symplectic(const LieAlgebra &L, const AlternatingForm &w) {
  require_input(w.dim() == L.dim(), "form and algebra dimensions differ");
  require(is_nondegenerate(w), "form is degenerate");
  require(is_cocycle(L, w), "form is not a cocycle");
}

// sum_{i<n} (-1)^i e_i^* ^ e_{2n-1-i}^* on the filiform algebra of dimension 2n.
inline AlternatingForm filiform_cocycle(std::size_t n) {
  require_input(n >= 2, "filiform cocycle needs n >= 2");
  const std::size_t dim = 2 * n;
  AlternatingForm w(dim);
  for (std::size_t i = 0; i < n; ++i) w.add_wedge(i, dim - 1 - i, i % 2 == 0 ? 1 : -1);
  if (!is_symplectic(algebras::filiform(dim - 1), w)) throw StructuralError("filiform form failed verification");
  return w;
}

// w(x, y) = k(Dx, y) for an invariant symmetric form k and a derivation D.
inline AlternatingForm derivation_cocycle(const QMatrix &k, const QMatrix &d) {
  require_input(k.square() && d.square() && k.rows() == d.rows(), "form and derivation sizes differ");
  QMatrix m = d.transpose() * k;
  require(is_skew(m), "k(D., .) is not alternating");
  return AlternatingForm(m);
}

// On R^3 + Lambda^2 R^3: the pairing k(e_i, f_i) = 1 is invariant and
// D = diag(1, 2, -3, -1, -2, 3) is an invertible derivation.
inline AlternatingForm tstar_h1_cocycle() {
  QMatrix k(6, 6), d(6, 6);
  const long diag[6] = {1, 2, -3, -1, -2, 3};
  for (std::size_t i = 0; i < 3; ++i) {
    k(i, i + 3) = 1;
    k(i + 3, i) = 1;
  }
  for (std::size_t i = 0; i < 6; ++i) d(i, i) = diag[i];
  AlternatingForm w = derivation_cocycle(k, d);
  if (!is_symplectic(algebras::tstar_h1(), w)) throw StructuralError("derivation form failed verification");
  return w;
}

// { x : w(x, h) = 0 for all h in H }.
inline Subspace orthogonal_subalgebra(const LieAlgebra &L, const AlternatingForm &w, const Subspace &h) {
  require_symplectic(L, w);
  require_input(h.ambient() == L.dim(), "subspace of wrong ambient dimension");
  if (h.dim() == 0) return Subspace::whole(L.dim());
  std::vector<QVector> rows;
  for (const auto &v : h.basis()) rows.push_back(w.contract(v));
  return kernel(QMatrix::from_rows(rows));
}

} // namespace nilat
