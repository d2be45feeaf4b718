#pragma once

#include <optional>
#include <vector>

#include "nilat/core/matrix.hpp"

namespace nilat {

struct Rref {
  QMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Rref rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix &m) { return rref(m).pivots.size(); }

// Basis of { x : m x = 0 }.
inline std::vector<QVector> nullspace(const QMatrix &m) {
  Rref R = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : R.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = b, if one exists.
inline std::optional<QVector> solve(const QMatrix &m, const QVector &b) {
  require_input(b.size() == m.rows(), "solve: size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref R = rref(aug);
  if (!R.pivots.empty() && R.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < R.pivots.size(); ++i) x[R.pivots[i]] = R.matrix(i, m.cols());
  return x;
}

inline Rational determinant(QMatrix m) {
  require_input(m.square(), "determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline QMatrix inverse(const QMatrix &m) {
  require_input(m.square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref R = rref(aug);
  require(R.pivots.size() == n && R.pivots.back() == n - 1, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = R.matrix(i, n + j);
  return inv;
}

// Subspace of Q^n stored as the nonzero rows of a reduced row-echelon basis,
// so equal subspaces have equal representations.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<QVector> &vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    QMatrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      require_input(vectors[i].size() == ambient, "subspace generator of wrong length");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    Rref R = rref(m);
    for (std::size_t i = 0; i < R.pivots.size(); ++i) s.basis_.push_back(R.matrix.row(i));
    s.pivots_ = R.pivots;
    return s;
  }

  static Subspace whole(std::size_t n) {
    std::vector<QVector> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
    return span(n, e);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(const QVector &v) const {
    QVector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Rational c = r[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
    }
    return is_zero(r);
  }

  bool contains(const Subspace &other) const {
    for (const auto &v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  // Coordinates of v in the stored basis (v must lie in the subspace).
  QVector coordinates(const QVector &v) const {
    QVector c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Subspace sum(const Subspace &other) const {
    std::vector<QVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  Subspace intersect(const Subspace &other) const {
    // Solve sum a_i u_i = sum b_j w_j.
    const std::size_t p = basis_.size(), q = other.basis_.size();
    if (p == 0 || q == 0) return Subspace(ambient_);
    QMatrix m(ambient_, p + q);
    for (std::size_t k = 0; k < ambient_; ++k) {
      for (std::size_t i = 0; i < p; ++i) m(k, i) = basis_[i][k];
      for (std::size_t j = 0; j < q; ++j) m(k, p + j) = -other.basis_[j][k];
    }
    std::vector<QVector> gens;
    for (const auto &sol : nullspace(m)) {
      QVector v(ambient_, Rational(0));
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < ambient_; ++k) v[k] += sol[i] * basis_[i][k];
      gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
  }

  // Standard basis vectors completing this subspace to the whole space.
  std::vector<QVector> standard_complement() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<QVector> out;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!is_pivot[i]) out.push_back(unit_vector(ambient_, i));
    return out;
  }

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace &a, const Subspace &b) { return !(a == b); }

private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Image of a subspace under a linear map.
inline Subspace image(const QMatrix &m, const Subspace &s) {
  std::vector<QVector> gens;
  for (const auto &v : s.basis()) gens.push_back(m * v);
  return Subspace::span(m.rows(), gens);
}

inline Subspace kernel(const QMatrix &m) { return Subspace::span(m.cols(), nullspace(m)); }

inline Subspace column_space(const QMatrix &m) { return Subspace::span(m.rows(), m.to_columns()); }

} // namespace nilat
