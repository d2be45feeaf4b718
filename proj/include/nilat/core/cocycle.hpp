#pragma once

#include <map>
#include <utility>

#include "nilat/core/lie_algebra.hpp"

namespace nilat {

// Alternating bilinear form w(x, y) = x^T M y.
class AlternatingForm {
public:
  AlternatingForm() = default;
  explicit AlternatingForm(std::size_t n) : m_(n, n) {}
  explicit AlternatingForm(QMatrix m) : m_(std::move(m)) {
    require_input(is_skew(m_), "form matrix is not skew-symmetric");
  }

  // Sum of c * e_i^* ^ e_j^*.
  static AlternatingForm from_wedges(std::size_t n,
                                     const std::vector<std::tuple<std::size_t, std::size_t, Rational>> &w) {
    AlternatingForm f(n);
    for (const auto &[i, j, c] : w) f.add_wedge(i, j, c);
    return f;
  }

  void add_wedge(std::size_t i, std::size_t j, const Rational &c) {
    require_input(i < dim() && j < dim(), "wedge index out of range");
    if (i == j) return;
    m_(i, j) += c;
    m_(j, i) -= c;
  }

  std::size_t dim() const { return m_.rows(); }
  const QMatrix &matrix() const { return m_; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Rational eval(const QVector &x, const QVector &y) const { return dot(x, m_ * y); }

  // Covector w(x, .).
  QVector contract(const QVector &x) const { return m_.transpose() * x; }

  bool is_zero() const { return m_.is_zero(); }

  friend AlternatingForm operator+(const AlternatingForm &a, const AlternatingForm &b) {
    return AlternatingForm(a.m_ + b.m_);
  }
  friend AlternatingForm operator*(const Rational &c, const AlternatingForm &a) {
    return AlternatingForm(c * a.m_);
  }
  friend bool operator==(const AlternatingForm &a, const AlternatingForm &b) { return a.m_ == b.m_; }

private:
  QMatrix m_;
};

inline bool is_nondegenerate(const AlternatingForm &w) {
  if (w.dim() % 2 == 1) return false;
  return determinant(w.matrix()) != 0;
}

// dw(x,y,z) = w([x,y],z) + w([y,z],x) + w([z,x],y).
inline Rational coboundary(const LieAlgebra &L, const AlternatingForm &w, const QVector &x, const QVector &y,
                           const QVector &z) {
  return w.eval(L.bracket(x, y), z) + w.eval(L.bracket(y, z), x) + w.eval(L.bracket(z, x), y);
}

inline bool is_cocycle(const LieAlgebra &L, const AlternatingForm &w) {
  require_input(w.dim() == L.dim(), "form and algebra dimensions differ");
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (coboundary(L, w, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)) != 0) return false;
  return true;
}

struct CocycleSpace {
  std::vector<AlternatingForm> cocycles;     // basis of Z^2
  std::vector<AlternatingForm> coboundaries; // basis of B^2
};

namespace detail {
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i,j), i < j, in lexicographic order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline AlternatingForm form_from_coords(std::size_t n, const QVector &v) {
  AlternatingForm f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) f.add_wedge(i, j, v[pair_index(n, i, j)]);
  return f;
}

inline QVector form_coords(const AlternatingForm &f) {
  const std::size_t n = f.dim();
  QVector v(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v[pair_index(n, i, j)] = f(i, j);
  return v;
}
} // namespace detail

// Linear system dw = 0 in the unknowns w_ij (i < j), one row per triple.
inline QMatrix cocycle_constraints(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * (n - 1) / 2;
  std::vector<QVector> rows;
  auto add_term = [&](QVector &row, std::size_t s, std::size_t t, const Rational &c) {
    // c * w(e_s, e_t)
    if (s == t || c == 0) return;
    if (s < t)
      row[detail::pair_index(n, s, t)] += c;
    else
      row[detail::pair_index(n, t, s)] -= c;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVector row(unknowns, Rational(0));
        for (std::size_t s = 0; s < n; ++s) {
          add_term(row, s, k, L.structure(i, j, s));
          add_term(row, s, i, L.structure(j, k, s));
          add_term(row, s, j, L.structure(k, i, s));
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return QMatrix(0, unknowns);
  return QMatrix::from_rows(rows);
}

inline CocycleSpace cocycle_space(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * (n - 1) / 2;
  CocycleSpace cs;
  QMatrix cons = cocycle_constraints(L);
  std::vector<QVector> z;
  if (cons.rows() == 0) {
    for (std::size_t u = 0; u < unknowns; ++u) z.push_back(unit_vector(unknowns, u));
  } else {
    z = nullspace(cons);
  }
  for (const auto &v : z) cs.cocycles.push_back(detail::form_from_coords(n, v));
  std::vector<QVector> b;
  for (std::size_t s = 0; s < n; ++s) {
    AlternatingForm f(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) f.add_wedge(i, j, L.structure(i, j, s));
    b.push_back(detail::form_coords(f));
  }
  Subspace bspan = Subspace::span(unknowns, b);
  for (const auto &v : bspan.basis()) cs.coboundaries.push_back(detail::form_from_coords(n, v));
  return cs;
}

// Table of products a.b stored as products[a][b] (coordinate vectors).
struct ProductTable {
  std::size_t dim = 0;
  std::vector<std::vector<QVector>> products;

  QVector multiply(const QVector &a, const QVector &b) const {
    QVector r(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j] == 0) continue;
        Rational c = a[i] * b[j];
        for (std::size_t k = 0; k < dim; ++k) r[k] += c * products[i][j][k];
      }
    }
    return r;
  }

  // Matrix of left multiplication by a.
  QMatrix left(const QVector &a) const {
    QMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      QVector col = multiply(a, unit_vector(dim, j));
      for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
    }
    return m;
  }

  bool is_zero() const {
    for (const auto &row : products)
      for (const auto &v : row)
        if (!nilat::is_zero(v)) return false;
    return true;
  }
};

// ab - ba = [a,b] on basis pairs.
inline bool is_torsion_free(const LieAlgebra &L, const ProductTable &p) {
  for (std::size_t a = 0; a < p.dim; ++a)
    for (std::size_t b = 0; b < p.dim; ++b)
      if (sub(p.products[a][b], p.products[b][a]) != L.basis_bracket(a, b)) return false;
  return true;
}

// (ab)c - a(bc) = (ba)c - b(ac) on basis triples.
inline bool is_left_symmetric(const ProductTable &p) {
  const std::size_t n = p.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        QVector ec = unit_vector(n, c);
        QVector lhs = sub(p.multiply(p.products[a][b], ec), p.multiply(unit_vector(n, a), p.products[b][c]));
        QVector rhs = sub(p.multiply(p.products[b][a], ec), p.multiply(unit_vector(n, b), p.products[a][c]));
        if (lhs != rhs) return false;
      }
  return true;
}

// w(L_a b, c) + w(b, L_a c) = 0 on basis triples.
inline bool is_form_parallel(const ProductTable &p, const AlternatingForm &w) {
  const std::size_t n = p.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (w.eval(p.products[a][b], unit_vector(n, c)) + w.eval(unit_vector(n, b), p.products[a][c]) != 0)
          return false;
  return true;
}

// L_[a,b] = [L_a, L_b] on basis pairs.
inline bool is_flat(const LieAlgebra &L, const ProductTable &p) {
  const std::size_t n = p.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QMatrix la = p.left(unit_vector(n, a)), lb = p.left(unit_vector(n, b));
      if (p.left(L.basis_bracket(a, b)) != la * lb - lb * la) return false;
    }
  return true;
}

// Product defined by w(ab, c) = -w(b, [a, c]) for a nondegenerate cocycle w.
inline ProductTable left_symmetric_product(const LieAlgebra &L, const AlternatingForm &w) {
  require_input(w.dim() == L.dim(), "form and algebra dimensions differ");
  require(is_nondegenerate(w), "form is degenerate");
  require(is_cocycle(L, w), "form is not a cocycle");
  const std::size_t n = L.dim();
  // w(x, c) = sum_i x_i M_ic, so the system is M^T x = rhs.
  QMatrix mt = w.matrix().transpose();
  ProductTable p{n, std::vector<std::vector<QVector>>(n, std::vector<QVector>(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QVector rhs(n);
      for (std::size_t c = 0; c < n; ++c) rhs[c] = -w.eval(unit_vector(n, b), L.basis_bracket(a, c));
      p.products[a][b] = *solve(mt, rhs);
    }
  return p;
}

} // namespace nilat
