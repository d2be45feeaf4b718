#pragma once

#include "nilat/core/lie_algebra.hpp"

namespace nilat::algebras {

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

// H_1: [e1,e2] = e3.
inline LieAlgebra heisenberg3() { return LieAlgebra::from_terms(3, {{0, 1, 2, 1}}); }

// L_n: basis e_0..e_n, [e_0, e_i] = e_{i+1} for 1 <= i < n.
inline LieAlgebra filiform(std::size_t n) {
  LieAlgebra L(n + 1);
  for (std::size_t i = 1; i < n; ++i) L.add_bracket(0, i, i + 1, 1);
  return L;
}

// R^3 + Lambda^2 R^3 with [(x,u),(y,v)] = (0, x ^ y); basis e1,e2,e3,f1,f2,f3
// where f1 = e2^e3, f2 = e3^e1, f3 = e1^e2.
inline LieAlgebra tstar_h1() {
  return LieAlgebra::from_terms(6, {{1, 2, 3, 1}, {0, 2, 4, -1}, {0, 1, 5, 1}});
}

// [e1,e4] = [e2,e3] = e5, [e1,e3] = e6, [e2,e4] = -d e6.
inline LieAlgebra pfaffian_form_a(const Integer &d) {
  return LieAlgebra::from_terms(6, {{0, 3, 4, 1}, {1, 2, 4, 1}, {0, 2, 5, 1}, {1, 3, 5, Rational(-d)}});
}

// [e1,e2] = [e3,e4] = e5, [e1,e3] = e6, [e2,e4] = -d e6.
inline LieAlgebra pfaffian_form_b(const Integer &d) {
  return LieAlgebra::from_terms(6, {{0, 1, 4, 1}, {2, 3, 4, 1}, {0, 2, 5, 1}, {1, 3, 5, Rational(-d)}});
}

// [e1,e3] = [e2,e4] = e5, [e1,e2] = e6.
inline LieAlgebra dual_numbers_form() {
  return LieAlgebra::from_terms(6, {{0, 2, 4, 1}, {1, 3, 4, 1}, {0, 1, 5, 1}});
}

// 2-dim non-abelian: [e1,e2] = e2.
inline LieAlgebra affine_line() { return LieAlgebra::from_terms(2, {{0, 1, 1, 1}}); }

} // namespace nilat::algebras
