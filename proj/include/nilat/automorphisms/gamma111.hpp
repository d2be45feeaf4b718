#pragma once

#include "nilat/automorphisms/int_polynomial.hpp"
#include "nilat/core/integer_forms.hpp"
#include "nilat/groups/presentation.hpp"

namespace nilat {

struct Gamma111Automorphism {
  ZMatrix b;  // induced map on the quotient by the center, basis y1, y2, y3
  ZMatrix a;  // restriction to the center, basis z1, z2, z3
  Assignment images;
  bool relations_hold = false;
};

// The automorphism of the TriD(1,1,1) lattice with y'_j = y1^m_1j y2^m_2j
// y3^m_3j z'_j. The center images are forced: z1 -> <y'2, y'3> and cyclically.
// Commutators are alternating and bilinear modulo the center, so the center
// matrix is the cofactor matrix det(B) B^-T.
inline Gamma111Automorphism gamma111_automorphism(const ZMatrix &m, const std::vector<ZVector> &zprime) {
  require_input(m.rows() == 3 && m.cols() == 3, "expected a 3x3 integer matrix");
  require_input(zprime.size() == 3, "expected three central elements");
  for (const auto &z : zprime) require_input(z.size() == 3, "central elements have three coordinates");
  require(abs(determinant(m)) == 1, "matrix is not in GL(3, Z)");

  GroupModel model = GroupModel::trid(1, 1, 1);
  Assignment std_gens = trid_standard_generators();
  Gamma111Automorphism out;
  out.b = m;
  for (std::size_t j = 0; j < 3; ++j) {
    Word w;
    for (std::size_t i = 0; i < 3; ++i) w.push_back({"y" + std::to_string(i + 1), to_long(m(i, j))});
    for (std::size_t i = 0; i < 3; ++i) w.push_back({"z" + std::to_string(i + 1), to_long(zprime[j][i])});
    out.images["y" + std::to_string(j + 1)] = evaluate_word(model, std_gens, w);
  }
  out.a = ZMatrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto &g = out.images["y" + std::to_string((i + 1) % 3 + 1)].coords;
    const auto &h = out.images["y" + std::to_string((i + 2) % 3 + 1)].coords;
    QVector c = model.commutator(g, h);
    for (std::size_t k = 3; k < 6; ++k)
      if (c[k] != 0) throw StructuralError("commutator of images is not central");
    for (std::size_t k = 0; k < 3; ++k) out.a(k, i) = to_integer(c[k]);
    out.images["z" + std::to_string(i + 1)] = {c};
  }
  out.relations_hold = check_relations(model, out.images, trid_presentation(1, 1, 1)).ok;
  return out;
}

struct CharPolyPair {
  IntPolynomial p_b, q_a;
};

// p_B = X^3 - tr B X^2 + tr L2B X - det B and q_A = X^3 - tr L2B X^2 +
// det B tr B X - 1, checked against the characteristic polynomials of B and of
// the second compound of B.
inline CharPolyPair char_poly_pair(const ZMatrix &b) {
  require_input(b.rows() == 3 && b.cols() == 3, "expected a 3x3 integer matrix");
  const Integer det = determinant(b);
  require(abs(det) == 1, "matrix is not in GL(3, Z)");
  const Integer tr = b(0, 0) + b(1, 1) + b(2, 2);
  const ZMatrix l2 = second_compound(b);
  const Integer tr2 = l2(0, 0) + l2(1, 1) + l2(2, 2);
  CharPolyPair out;
  out.p_b = IntPolynomial(ZVector{-det, tr2, -tr, 1});
  out.q_a = IntPolynomial(ZVector{-1, det * tr, -tr2, 1});
  if (out.p_b != characteristic_polynomial(b) || out.q_a != characteristic_polynomial(l2))
    throw StructuralError("characteristic polynomial formulas disagree with direct computation");
  return out;
}

// Integer matrix with no eigenvalue on the unit circle, invertible over Z.
inline bool is_hyperbolic_unimodular(const ZMatrix &b) {
  require_input(b.square() && b.rows() > 0, "expected a square integer matrix");
  if (abs(determinant(b)) != 1) return false;
  return !has_unit_circle_root(characteristic_polynomial(b));
}

// The eigenvalues on the center are, up to sign, inverses of those of B, so B
// alone decides.
inline bool is_anosov(const ZMatrix &b) {
  require_input(b.rows() == 3 && b.cols() == 3, "expected a 3x3 integer matrix");
  return is_hyperbolic_unimodular(b);
}

} // namespace nilat
