#pragma once

#include <random>

#include "nilat/core/bch.hpp"
#include "nilat/core/polynomial.hpp"
#include "nilat/symplectic/forms.hpp"

namespace nilat {

// Q(exp x) as polynomials in the exponential coordinates x_0..x_{n-1}, one
// per dual-basis direction.
struct MomentMapPoly {
  std::vector<Poly> components;

  QVector eval(const QVector &x) const {
    QVector out;
    for (const auto &p : components) out.push_back(p.eval(x));
    return out;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto &p : components) d = std::max(d, p.degree());
    return d;
  }
};

namespace detail {

// (ad*_x xi)_j = -sum_k xi_k [x, e_j]_k, over any coefficient ring.
template <class S>
std::vector<S> coad(const LieAlgebra &L, const std::vector<S> &x, const std::vector<S> &xi) {
  const std::size_t n = L.dim();
  std::vector<S> out(n, S(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<S> ej(n, S(0));
    ej[j] = S(1);
    std::vector<S> b = L.bracket(x, ej);
    S acc(0);
    for (std::size_t k = 0; k < n; ++k) acc = acc + xi[k] * b[k];
    out[j] = S(0) - acc;
  }
  return out;
}

// exp(ad*_x) xi; the series stops because ad_x is nilpotent.
template <class S>
std::vector<S> coadjoint_exp(const LieAlgebra &L, const std::vector<S> &x, const std::vector<S> &xi) {
  std::vector<S> out = xi, term = xi;
  for (unsigned k = 1; k <= L.dim(); ++k) {
    term = coad(L, x, term);
    Rational c = 1 / factorial(k);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + c * term[j];
  }
  return out;
}

template <class S>
std::vector<S> moment_series(const LieAlgebra &L, const AlternatingForm &w, const std::vector<S> &x) {
  const std::size_t n = L.dim();
  std::vector<S> term(n, S(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (w(i, j) != 0) term[j] = term[j] + w(i, j) * x[i];
  std::vector<S> out = term;
  for (unsigned k = 2; k <= n + 1; ++k) {
    term = coad(L, x, term);
    Rational c = 1 / factorial(k);
    for (std::size_t j = 0; j < n; ++j) out[j] = out[j] + c * term[j];
  }
  return out;
}

} // namespace detail

inline MomentMapPoly moment_map(const LieAlgebra &L, const AlternatingForm &w) {
  require(is_nilpotent(L), "algebra is not nilpotent");
  require_symplectic(L, w);
  std::vector<Poly> x;
  for (std::size_t i = 0; i < L.dim(); ++i) x.push_back(Poly::var(i));
  return {detail::moment_series(L, w, x)};
}

struct MomentIdentityReport {
  bool holds = false;
  bool exact = false;  // polynomial identity rather than sampled pairs
};

// Q(s t) = Q(s) + Ad*_s Q(t) with s t computed by truncated BCH: as a
// polynomial identity in x, y for class <= 3, on 100 seeded pairs otherwise.
inline MomentIdentityReport verify_moment_identity(const LieAlgebra &L, const MomentMapPoly &q,
                                                   unsigned seed = 0) {
  const std::size_t n = L.dim();
  const unsigned cls = static_cast<unsigned>(nilpotency_class(L));
  MomentIdentityReport rep;
  if (cls <= 3) {
    rep.exact = true;
    std::vector<Poly> x, y;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(Poly::var(i));
      y.push_back(Poly::var(n + i));
    }
    std::vector<Poly> z = bch(L, x, y, cls);
    std::vector<Poly> qy;
    for (const auto &c : q.components) qy.push_back(c.compose(y));
    std::vector<Poly> rhs = detail::coadjoint_exp(L, x, qy);
    rep.holds = true;
    for (std::size_t j = 0; j < n; ++j)
      if (q.components[j].compose(z) != q.components[j] + rhs[j]) rep.holds = false;
    return rep;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  rep.holds = true;
  for (int s = 0; s < 100 && rep.holds; ++s) {
    QVector x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(num(rng), den(rng));
      x[i].canonicalize();
      y[i] = Rational(num(rng), den(rng));
      y[i].canonicalize();
    }
    QVector lhs = q.eval(bch(L, x, y, cls));
    QVector rhs = add(q.eval(x), detail::coadjoint_exp(L, x, q.eval(y)));
    if (lhs != rhs) rep.holds = false;
  }
  return rep;
}

} // namespace nilat
