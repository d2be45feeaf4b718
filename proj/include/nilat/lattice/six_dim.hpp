#pragma once

#include <optional>
#include <random>
#include <string>

#include "nilat/core/algebras.hpp"
#include "nilat/core/lie_algebra.hpp"

namespace nilat {

// Squarefree integer of the same sign with n / result a perfect square.
inline Integer squarefree_part(const Integer &n) {
  require_input(n != 0, "squarefree_part of 0");
  Integer m = abs(n), out = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    if (!divides(p, m)) continue;
    unsigned e = 0;
    while (divides(p, m)) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= m;
  return n < 0 ? Integer(-out) : out;
}

enum class SixDimFamily { H1_DUAL, H1_COMPLEX, H1_RxR };

inline std::string to_string(SixDimFamily f) {
  switch (f) {
  case SixDimFamily::H1_DUAL: return "H1_DUAL";
  case SixDimFamily::H1_COMPLEX: return "H1_COMPLEX";
  case SixDimFamily::H1_RxR: return "H1_RxR";
  }
  return "";
}

inline SixDimFamily parse_family(const std::string &s) {
  if (s == "H1_DUAL") return SixDimFamily::H1_DUAL;
  if (s == "H1_COMPLEX") return SixDimFamily::H1_COMPLEX;
  if (s == "H1_RxR") return SixDimFamily::H1_RxR;
  throw InputError("unknown family " + s);
}

struct SixDimClassification {
  SixDimFamily family;
  std::optional<Integer> d;
  // Columns are the new basis e1..e6 in the input coordinates; in that basis the
  // brackets are the normal form (dual_numbers_form or pfaffian_form_a(d)).
  QMatrix witness;
  // Pfaffian binary form A x^2 + B xy + C y^2 on the chosen basis of W.
  Rational A, B, C;
};

inline bool commensurable(const SixDimClassification &a, const SixDimClassification &b) {
  return a.family == b.family && a.d == b.d;
}

namespace detail {
inline Rational pfaffian4(const QMatrix &m) { return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2); }

inline QMatrix wedge_matrix(const QVector &f, const QVector &g) {
  QMatrix m(f.size(), f.size());
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) m(a, b) = f[a] * g[b] - g[a] * f[b];
  return m;
}

// Positive rational square root when it exists.
inline std::optional<Rational> rational_sqrt(const Rational &q) {
  if (q < 0) return std::nullopt;
  Integer n = q.get_num(), d = q.get_den();
  if (!is_square(n) || !is_square(d)) return std::nullopt;
  return Rational(isqrt(n), isqrt(d));
}

inline QVector combine(const std::vector<QVector> &basis, const QVector &coords) {
  QVector v(basis[0].size(), Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) v = add(v, scale(coords[i], basis[i]));
  return v;
}

inline QMatrix columns_matrix(const std::vector<QVector> &cols) {
  QMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

inline bool is_witness(const LieAlgebra &L, const QMatrix &p, const LieAlgebra &target) {
  if (determinant(p) == 0) return false;
  return change_basis(L, p) == target;
}

// Basis with [e1,e4] = [e2,e3] = e5, [e1,e3] = e6, [e2,e4] = -d e6, from a
// Q-linear s on V with s^2 = -d and [sx, y] = [x, sy].
inline std::optional<QMatrix> rank_two_witness(const LieAlgebra &L, const std::vector<QVector> &v, const QMatrix &s,
                                               const Integer &d) {
  const LieAlgebra target = algebras::pfaffian_form_a(d);
  std::vector<QVector> trial;
  for (std::size_t i = 0; i < 4; ++i) trial.push_back(unit_vector(4, i));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) trial.push_back(add(unit_vector(4, i), unit_vector(4, j)));
  for (const auto &a : trial)
    for (const auto &b : trial) {
      QVector e1 = combine(v, a), e2 = combine(v, s * a), e3 = combine(v, b), e4 = combine(v, s * b);
      QVector e5 = L.bracket(e1, e4), e6 = L.bracket(e1, e3);
      QMatrix p = columns_matrix({e1, e2, e3, e4, e5, e6});
      if (is_witness(L, p, target)) return p;
    }
  return std::nullopt;
}
} // namespace detail

// Classifies a 6-dimensional 2-step nilpotent algebra whose center equals its
// derived algebra, both of dimension 2. complement_seed != 0 picks a different
// complement of the center and a different basis of it.
inline SixDimClassification classify_six_dim(const LieAlgebra &L, unsigned complement_seed = 0) {
  require_input(L.dim() == 6, "classification needs a 6-dimensional algebra");
  require_input(validate_lie(L).ok, "structure constants violate the Jacobi identity");
  Subspace D = derived_algebra(L), Z = center(L);
  require_input(D.dim() == 2, "derived algebra must have dimension 2");
  require_input(Z.contains(D), "algebra is not 2-step nilpotent");

  std::vector<QVector> v = D.standard_complement();
  if (complement_seed != 0) {
    std::mt19937 rng(complement_seed);
    std::uniform_int_distribution<int> u(-3, 3);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < i; ++j) v[i] = add(v[i], scale(Rational(u(rng)), v[j]));
      for (const auto &z : D.basis()) v[i] = add(v[i], scale(Rational(u(rng)), z));
    }
  }

  // bracket components on V
  QMatrix B1(4, 4), B2(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      QVector c = D.coordinates(L.bracket(v[a], v[b]));
      B1(a, b) = c[0];
      B2(a, b) = c[1];
    }
  const Rational A = detail::pfaffian4(B1), C = detail::pfaffian4(B2);
  const Rational B = detail::pfaffian4(B1 + B2) - A - C;
  if (A == 0 && B == 0 && C == 0) throw StructuralError("Pfaffian form vanishes identically");
  require_input(Z == D, "center must equal the derived algebra");

  SixDimClassification out{SixDimFamily::H1_DUAL, std::nullopt, QMatrix(), A, B, C};
  const Rational disc = B * B - 4 * A * C;

  if (disc == 0) {
    // isotropic line (x0, y0) of the rank-one form and an independent direction
    Rational x0 = 1, y0 = 0;
    if (A != 0) {
      x0 = -B / (2 * A);
      y0 = 1;
    }
    Rational x1 = y0 == 0 ? Rational(0) : Rational(1), y1 = y0 == 0 ? Rational(1) : Rational(0);
    QMatrix Md = x0 * B1 + y0 * B2, Mo = x1 * B1 + y1 * B2;
    std::size_t pa = 4, pb = 4;
    for (std::size_t a = 0; a < 4 && pa == 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b)
        if (Md(a, b) != 0) {
          pa = a;
          pb = b;
          break;
        }
    require(pa < 4, "isotropic form vanishes");
    QVector f = scale(1 / Md(pa, pb), Md.col(pa)), g = Md.col(pb);
    require(detail::wedge_matrix(f, g) == Md, "isotropic form is not decomposable");
    // f^h + g^k + c f^g = Mo, unknowns (h, k, c)
    QMatrix sys(16, 9);
    QVector rhs(16);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        std::size_t r = a * 4 + b;
        for (std::size_t i = 0; i < 4; ++i) {
          // (f^h)(a,b) = f_a h_b - h_a f_b
          sys(r, i) = (i == b ? f[a] : Rational(0)) - (i == a ? f[b] : Rational(0));
          sys(r, 4 + i) = (i == b ? g[a] : Rational(0)) - (i == a ? g[b] : Rational(0));
        }
        sys(r, 8) = f[a] * g[b] - g[a] * f[b];
        rhs[r] = Mo(a, b);
      }
    auto sol = solve(sys, rhs);
    require(sol.has_value(), "no decomposition of the second form");
    QVector h(sol->begin(), sol->begin() + 4), k(sol->begin() + 4, sol->begin() + 8);
    QMatrix F = QMatrix::from_rows({f, g, h, k});
    QMatrix Finv = inverse(F);
    std::vector<QVector> e;
    for (std::size_t i = 0; i < 4; ++i) e.push_back(detail::combine(v, Finv.col(i)));
    e.push_back(L.bracket(e[0], e[2]));
    e.push_back(L.bracket(e[0], e[1]));
    out.witness = detail::columns_matrix(e);
    require(detail::is_witness(L, out.witness, algebras::dual_numbers_form()), "normal form check failed");
    return out;
  }

  const Rational D4 = -disc;  // 4AC - B^2
  const Integer d = squarefree_part(D4.get_num() * D4.get_den());
  out.d = d;
  out.family = d > 0 ? SixDimFamily::H1_COMPLEX : SixDimFamily::H1_RxR;

  // J on V with J^T B_c = B_c J for both components
  QMatrix sys(32, 16);
  for (std::size_t c = 0; c < 2; ++c) {
    const QMatrix &Bc = c == 0 ? B1 : B2;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        std::size_t r = c * 16 + a * 4 + b;
        // (J^T B)_{ab} = sum_k J_{ka} B_{kb};  (B J)_{ab} = sum_k B_{ak} J_{kb}
        for (std::size_t k = 0; k < 4; ++k) {
          sys(r, k * 4 + a) += Bc(k, b);
          sys(r, k * 4 + b) -= Bc(a, k);
        }
      }
  }
  QMatrix J;
  for (const auto &sol : nullspace(sys)) {
    QMatrix cand(4, 4);
    for (std::size_t i = 0; i < 16; ++i) cand(i / 4, i % 4) = sol[i];
    bool scalar = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (cand(i, j) != (i == j ? cand(0, 0) : Rational(0))) scalar = false;
    if (!scalar) {
      J = cand;
      break;
    }
  }
  require(J.rows() == 4, "no compatible complex structure found");
  // J^2 = alpha J + beta I
  QMatrix J2 = J * J, fit(16, 2);
  QVector rhs(16);
  for (std::size_t i = 0; i < 16; ++i) {
    fit(i, 0) = J(i / 4, i % 4);
    fit(i, 1) = i / 4 == i % 4 ? 1 : 0;
    rhs[i] = J2(i / 4, i % 4);
  }
  auto ab = solve(fit, rhs);
  require(ab.has_value(), "compatible endomorphism is not quadratic");
  const Rational alpha = (*ab)[0], beta = (*ab)[1];
  QMatrix s0 = J - (alpha / 2) * QMatrix::identity(4);
  const Rational minus_sq = -(alpha * alpha / 4 + beta);  // s0^2 = -minus_sq
  require(minus_sq != 0 && squarefree_part(minus_sq.get_num() * minus_sq.get_den()) == d,
          "Pfaffian and structure discriminants disagree");
  auto m = detail::rational_sqrt(minus_sq / Rational(d));
  require(m.has_value(), "discriminant ratio is not a square");
  QMatrix s = (1 / *m) * s0;
  auto w = detail::rank_two_witness(L, v, s, d);
  require(w.has_value(), "no normal-form basis found");
  out.witness = *w;
  return out;
}

} // namespace nilat
