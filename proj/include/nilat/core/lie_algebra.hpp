#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "nilat/core/linalg.hpp"

namespace nilat {

struct BracketTerm {
  std::size_t i, j, k;  // [e_i, e_j] has coefficient c on e_k, with i < j
  Rational c;
};

// Finite-dimensional Lie algebra over Q given by structure constants.
// Indices are 0-based here; the JSON layer converts to 1-based.
class LieAlgebra {
public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  static LieAlgebra from_terms(std::size_t dim, const std::vector<BracketTerm> &terms) {
    LieAlgebra L(dim);
    for (const auto &t : terms) L.add_bracket(t.i, t.j, t.k, t.c);
    return L;
  }

  std::size_t dim() const { return dim_; }

  // Adds c * e_k to [e_i, e_j] (and the antisymmetric partner).
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational &c) {
    require_input(i < dim_ && j < dim_ && k < dim_, "bracket index out of range");
    require_input(i != j || c == 0, "bracket [e_i, e_i] must vanish");
    if (i == j) return;
    at(i, j, k) += c;
    at(j, i, k) -= c;
  }

  void set_bracket(std::size_t i, std::size_t j, const QVector &v) {
    require_input(v.size() == dim_, "bracket value of wrong length");
    for (std::size_t k = 0; k < dim_; ++k) {
      at(i, j, k) = 0;
      at(j, i, k) = 0;
      add_bracket(i, j, k, v[k]);
    }
  }

  const Rational &structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  QVector basis_bracket(std::size_t i, std::size_t j) const {
    QVector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = structure(i, j, k);
    return v;
  }

  // Nonzero constants with i < j, in lexicographic order.
  std::vector<BracketTerm> terms() const {
    std::vector<BracketTerm> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (structure(i, j, k) != 0) out.push_back({i, j, k, structure(i, j, k)});
    return out;
  }

  // Bracket of coordinate vectors over any commutative ring S containing Q.
  template <class S>
  std::vector<S> bracket(const std::vector<S> &x, const std::vector<S> &y) const {
    require_input(x.size() == dim_ && y.size() == dim_, "bracket argument of wrong length");
    std::vector<S> r(dim_, S(0));
    for (const auto &t : terms()) {
      S coef = x[t.i] * y[t.j] - x[t.j] * y[t.i];
      r[t.k] += t.c * coef;
    }
    return r;
  }

  QVector bracket(const QVector &x, const QVector &y) const { return bracket<Rational>(x, y); }

  // Matrix of ad_x (column j = [x, e_j]).
  QMatrix ad(const QVector &x) const {
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) += x[i] * structure(i, j, k);
    }
    return m;
  }

  QMatrix ad_basis(std::size_t i) const { return ad(unit_vector(dim_, i)); }

  bool is_abelian() const { return terms().empty(); }

  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  Rational &at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  QVector defect;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

inline JacobiReport validate_lie(const LieAlgebra &L) {
  JacobiReport rep;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        QVector s = add(add(L.bracket(ei, L.basis_bracket(j, k)), L.bracket(ej, L.basis_bracket(k, i))),
                        L.bracket(ek, L.basis_bracket(i, j)));
        if (!is_zero(s)) {
          rep.ok = false;
          rep.violations.push_back({i, j, k, std::move(s)});
        }
      }
  return rep;
}

// [A, B] for subspaces A, B.
inline Subspace bracket_span(const LieAlgebra &L, const Subspace &a, const Subspace &b) {
  std::vector<QVector> gens;
  for (const auto &x : a.basis())
    for (const auto &y : b.basis()) gens.push_back(L.bracket(x, y));
  return Subspace::span(L.dim(), gens);
}

inline Subspace derived_algebra(const LieAlgebra &L) {
  Subspace all = Subspace::whole(L.dim());
  return bracket_span(L, all, all);
}

// { x : [x, L] subset of S }, for an ideal S.
inline Subspace centralizer_mod(const LieAlgebra &L, const Subspace &s) {
  const std::size_t n = L.dim();
  // Constraint rows: for each basis e_j and each functional vanishing on s.
  std::vector<QVector> annihilators;
  {
    QMatrix m(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = s.basis()[r][c];
    annihilators = s.dim() ? nullspace(m) : std::vector<QVector>{};
    if (s.dim() == 0)
      for (std::size_t c = 0; c < n; ++c) annihilators.push_back(unit_vector(n, c));
  }
  QMatrix cons(n * annihilators.size(), n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix adj = L.ad_basis(j);  // column x -> [e_j, x]
    for (const auto &f : annihilators) {
      for (std::size_t x = 0; x < n; ++x) {
        Rational v = 0;
        for (std::size_t k = 0; k < n; ++k) v += f[k] * adj(k, x);
        cons(row, x) = v;
      }
      ++row;
    }
  }
  return kernel(cons);
}

inline Subspace center(const LieAlgebra &L) { return centralizer_mod(L, Subspace(L.dim())); }

struct CentralSeries {
  std::vector<Subspace> ascending;   // C_1 = center, C_2, ... until stable
  std::vector<Subspace> descending;  // C^1 = [L,L], C^2 = [L,C^1], ... until stable
};

inline CentralSeries central_series(const LieAlgebra &L) {
  CentralSeries cs;
  Subspace cur(L.dim());
  while (true) {
    Subspace next = centralizer_mod(L, cur);
    if (next == cur) break;
    cs.ascending.push_back(next);
    cur = next;
  }
  Subspace all = Subspace::whole(L.dim());
  cur = all;
  while (true) {
    Subspace next = bracket_span(L, all, cur);
    if (next == cur) break;
    cs.descending.push_back(next);
    cur = next;
    if (cur.dim() == 0) break;
  }
  return cs;
}

inline bool is_nilpotent(const LieAlgebra &L) {
  CentralSeries cs = central_series(L);
  return L.dim() == 0 || (!cs.descending.empty() ? cs.descending.back().dim() == 0 : L.is_abelian());
}

// Length of the lower central series (0 for the zero algebra, 1 for abelian).
inline std::size_t nilpotency_class(const LieAlgebra &L) {
  require(is_nilpotent(L), "algebra is not nilpotent");
  if (L.dim() == 0) return 0;
  if (L.is_abelian()) return 1;
  return central_series(L).descending.size();
}

// Structure constants in the basis given by the columns of p.
inline LieAlgebra change_basis(const LieAlgebra &L, const QMatrix &p) {
  require_input(p.rows() == L.dim() && p.square(), "change_basis: size mismatch");
  QMatrix pinv = inverse(p);
  const std::size_t n = L.dim();
  LieAlgebra out(n);
  auto cols = p.to_columns();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.set_bracket(a, b, pinv * L.bracket(cols[a], cols[b]));
  return out;
}

// m : L1 -> L2 (columns are images of basis vectors) preserves brackets.
inline bool is_homomorphism(const LieAlgebra &L1, const LieAlgebra &L2, const QMatrix &m) {
  require_input(m.cols() == L1.dim() && m.rows() == L2.dim(), "homomorphism: size mismatch");
  auto cols = m.to_columns();
  for (std::size_t a = 0; a < L1.dim(); ++a)
    for (std::size_t b = a + 1; b < L1.dim(); ++b)
      if (m * L1.basis_bracket(a, b) != L2.bracket(cols[a], cols[b])) return false;
  return true;
}

inline bool is_ideal(const LieAlgebra &L, const Subspace &s) {
  return s.contains(bracket_span(L, Subspace::whole(L.dim()), s));
}

inline bool is_abelian_subspace(const LieAlgebra &L, const Subspace &s) {
  return bracket_span(L, s, s).dim() == 0;
}

} // namespace nilat
