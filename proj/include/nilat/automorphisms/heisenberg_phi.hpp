#pragma once

#include "nilat/automorphisms/quadratic_ring.hpp"
#include "nilat/core/linalg.hpp"
#include "nilat/groups/models.hpp"

namespace nilat {

// One eigenvalue r + s sqrt m of a multiplication-by-unit block.
struct QuadEigenvalue {
  Rational r, s;
  int modulus_vs_one = 0;  // sign of |value| - 1
  std::string text;
};

struct PhiAutomorphism {
  QuadInt alpha, beta, gamma;
  QMatrix matrix;  // on (x1,x2,y1,y2,z1,z2) of the HeisQuad model over the ring
  std::vector<QuadEigenvalue> eigenvalues;  // alpha, alpha', beta, beta', gamma, gamma'
  std::size_t expanding = 0, contracting = 0;
  bool anosov = false;
};

namespace detail {

inline std::pair<QuadEigenvalue, QuadEigenvalue> embeddings(const QuadraticRing &ring, const QuadInt &u) {
  auto [r, s] = ring.radical_coords(u);
  QuadEigenvalue a{r, s, compare_modulus_with_one(ring.m, r, s), radical_string(ring.m, r, s)};
  QuadEigenvalue b{r, -s, compare_modulus_with_one(ring.m, r, -s), radical_string(ring.m, r, -s)};
  return {a, b};
}

} // namespace detail

// (x, y, z) -> (alpha x, beta y, alpha beta z) on the Heisenberg group over
// the ring of integers of Q(sqrt m), in the lattice coordinates of the model.
inline PhiAutomorphism phi_automorphism(const QuadraticRing &ring, const QuadInt &alpha, const QuadInt &beta) {
  require(ring.is_unit(alpha) && ring.is_unit(beta), "alpha and beta must be units");
  PhiAutomorphism out;
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = ring.mul(alpha, beta);
  out.matrix = QMatrix(6, 6);
  const QuadInt blocks[3] = {out.alpha, out.beta, out.gamma};
  for (std::size_t k = 0; k < 3; ++k) {
    auto mm = ring.mult_matrix(blocks[k]);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) out.matrix(2 * k + i, 2 * k + j) = mm[i][j];
  }

  // The product correction is bilinear, so checking generator pairs suffices.
  GroupModel model = GroupModel::heis_quad(ring.m);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      QVector a = unit_vector(6, i), b = unit_vector(6, j);
      QVector lhs = out.matrix * model.multiply(a, b);
      QVector rhs = model.multiply(out.matrix * a, out.matrix * b);
      if (lhs != rhs) throw StructuralError("phi does not respect the group product");
    }
  if (!is_integral(out.matrix) || abs(determinant(out.matrix)) != 1)
    throw StructuralError("phi does not preserve the integral lattice");

  for (const auto &u : blocks) {
    auto [a, b] = detail::embeddings(ring, u);
    out.eigenvalues.push_back(a);
    out.eigenvalues.push_back(b);
  }
  for (const auto &e : out.eigenvalues) {
    if (e.modulus_vs_one > 0) ++out.expanding;
    if (e.modulus_vs_one < 0) ++out.contracting;
  }
  out.anosov = out.expanding + out.contracting == 6;
  return out;
}

} // namespace nilat
