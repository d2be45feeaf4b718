#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nilat/core/linalg.hpp"

namespace nilat {

// Finite-dimensional commutative associative unital algebra over Q.
class CommAlgebra {
public:
  using Table = std::vector<std::vector<QVector>>;

  CommAlgebra() = default;
  CommAlgebra(Table products, QVector unit) : products_(std::move(products)), unit_(std::move(unit)) {
    validate();
  }

  std::size_t dim() const { return products_.size(); }
  const Table &products() const { return products_; }
  const QVector &unit() const { return unit_; }

  QVector multiply(const QVector &a, const QVector &b) const {
    const std::size_t n = dim();
    QVector r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        Rational c = a[i] * b[j];
        for (std::size_t k = 0; k < n; ++k) r[k] += c * products_[i][j][k];
      }
    }
    return r;
  }

  const QVector &basis_product(std::size_t i, std::size_t j) const { return products_[i][j]; }

  // Matrix of x -> a x.
  QMatrix mult_matrix(const QVector &a) const {
    const std::size_t n = dim();
    QMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      QVector col = multiply(a, unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
  }

private:
  void validate() const {
    const std::size_t n = dim();
    require_input(n > 0, "algebra must have positive dimension");
    require_input(unit_.size() == n, "unit of wrong length");
    for (const auto &row : products_) {
      require_input(row.size() == n, "product table is not square");
      for (const auto &v : row) require_input(v.size() == n, "product of wrong length");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (products_[i][j] != products_[j][i]) throw StructuralError("algebra is not commutative");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          QVector ek = unit_vector(n, k), ei = unit_vector(n, i);
          if (multiply(products_[i][j], ek) != multiply(ei, products_[j][k]))
            throw StructuralError("algebra is not associative");
        }
    for (std::size_t j = 0; j < n; ++j)
      if (multiply(unit_, unit_vector(n, j)) != unit_vector(n, j))
        throw StructuralError("unit does not act as identity");
  }

  Table products_;
  QVector unit_;
};

// Q[x_1..x_v] modulo every monomial outside `basis`; basis must be closed
// under division and contain the constant monomial.
inline CommAlgebra monomial_algebra(const std::vector<std::vector<unsigned>> &basis) {
  require_input(!basis.empty(), "monomial basis is empty");
  const std::size_t vars = basis[0].size();
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_input(basis[i].size() == vars, "monomials with different variable counts");
    require_input(index.emplace(basis[i], i).second, "repeated monomial");
  }
  std::vector<unsigned> one(vars, 0);
  require_input(index.count(one), "constant monomial missing");
  for (const auto &m : basis)
    for (std::size_t v = 0; v < vars; ++v)
      if (m[v] > 0) {
        auto d = m;
        --d[v];
        require_input(index.count(d), "monomial basis is not closed under division");
      }
  const std::size_t n = basis.size();
  CommAlgebra::Table t(n, std::vector<QVector>(n, QVector(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> m(vars);
      for (std::size_t v = 0; v < vars; ++v) m[v] = basis[i][v] + basis[j][v];
      auto it = index.find(m);
      if (it != index.end()) t[i][j][it->second] = 1;
    }
  return CommAlgebra(std::move(t), unit_vector(n, index[one]));
}

// Q[x]/(x^n) on 1, x, ..., x^{n-1}.
inline CommAlgebra truncated_polynomial(unsigned n) {
  require_input(n >= 1, "truncation degree must be positive");
  std::vector<std::vector<unsigned>> b;
  for (unsigned i = 0; i < n; ++i) b.push_back({i});
  return monomial_algebra(b);
}

inline CommAlgebra dual_numbers() { return truncated_polynomial(2); }

// Q + V with V^2 = 0, dim V = v.
inline CommAlgebra square_zero_extension(unsigned v) {
  std::vector<std::vector<unsigned>> b{std::vector<unsigned>(v, 0)};
  for (unsigned i = 0; i < v; ++i) {
    std::vector<unsigned> m(v, 0);
    m[i] = 1;
    b.push_back(m);
  }
  return monomial_algebra(b);
}

// Q[x,y]/(x^3, y^2, xy) on 1, x, x^2, y.
inline CommAlgebra socle_two_example() { return monomial_algebra({{0, 0}, {1, 0}, {2, 0}, {0, 1}}); }

// Q + V + Q with (l,v,m)(l',v',m') = (ll', lv' + l'v, q(v,v') + lm' + l'm),
// where q is the symmetric matrix of the bilinear form.
inline CommAlgebra quadratic_form_algebra(const QMatrix &q) {
  require_input(q.square() && q.transpose() == q, "quadratic form must be a symmetric matrix");
  const std::size_t v = q.rows(), n = v + 2;
  CommAlgebra::Table t(n, std::vector<QVector>(n, QVector(n, Rational(0))));
  for (std::size_t j = 0; j < n; ++j) {
    t[0][j][j] = 1;
    t[j][0][j] = 1;
  }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) t[1 + a][1 + b][n - 1] = q(a, b);
  return CommAlgebra(std::move(t), unit_vector(n, 0));
}

inline CommAlgebra direct_product(const CommAlgebra &a, const CommAlgebra &b) {
  const std::size_t p = a.dim(), n = p + b.dim();
  CommAlgebra::Table t(n, std::vector<QVector>(n, QVector(n, Rational(0))));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) t[i][j][k] = a.basis_product(i, j)[k];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) t[p + i][p + j][p + k] = b.basis_product(i, j)[k];
  QVector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return CommAlgebra(std::move(t), std::move(unit));
}

struct SocleReport {
  Subspace radical;
  Subspace socle;
  bool is_local = false;
};

inline SocleReport radical_and_socle(const CommAlgebra &A) {
  const std::size_t n = A.dim();
  // Trace form (x, y) -> tr(mult by xy); its kernel is the nilradical in characteristic 0.
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram(i, j) = trace(A.mult_matrix(A.basis_product(i, j)));
      gram(j, i) = gram(i, j);
    }
  SocleReport rep;
  rep.radical = kernel(gram);
  for (const auto &r : rep.radical.basis()) {
    QVector p = r;
    for (std::size_t k = 1; k < n && !is_zero(p); ++k) p = A.multiply(p, r);
    if (!is_zero(p)) throw StructuralError("radical element is not nilpotent");
  }
  // Socle: s with s r = 0 for every radical basis vector r.
  std::vector<QVector> rows;
  for (const auto &r : rep.radical.basis()) {
    QMatrix m = A.mult_matrix(r);
    for (std::size_t k = 0; k < n; ++k) rows.push_back(m.row(k));
  }
  rep.socle = rows.empty() ? Subspace::whole(n) : kernel(QMatrix::from_rows(rows));
  rep.is_local = n - rep.radical.dim() == 1;
  return rep;
}

} // namespace nilat
