#pragma once

#include <optional>
#include <random>
#include <string>

#include "nilat/core/cocycle.hpp"
#include "nilat/symplectic/comm_algebra.hpp"

namespace nilat {

// H_k(A) = H_k(R) (x) A on the basis e_i(x)a, f_i(x)a, g(x)a in that order,
// with [e_i(x)a, f_i(x)b] = g(x)ab.
struct HeisenbergOverA {
  CommAlgebra base;
  std::size_t k = 1;
  LieAlgebra algebra;

  std::size_t l() const { return base.dim(); }
  std::size_t e(std::size_t i, std::size_t a) const { return i * l() + a; }
  std::size_t f(std::size_t i, std::size_t a) const { return (k + i) * l() + a; }
  std::size_t g(std::size_t a) const { return 2 * k * l() + a; }

  Subspace center_copy() const {
    std::vector<QVector> gens;
    for (std::size_t a = 0; a < l(); ++a) gens.push_back(unit_vector(algebra.dim(), g(a)));
    return Subspace::span(algebra.dim(), gens);
  }
};

inline HeisenbergOverA heisenberg_over(const CommAlgebra &A, std::size_t k) {
  require_input(k >= 1, "Heisenberg rank must be positive");
  HeisenbergOverA H{A, k, LieAlgebra((2 * k + 1) * A.dim())};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < A.dim(); ++a)
      for (std::size_t b = 0; b < A.dim(); ++b) {
        const QVector &ab = A.basis_product(a, b);
        for (std::size_t c = 0; c < A.dim(); ++c)
          if (ab[c] != 0) H.algebra.add_bracket(H.e(i, a), H.f(i, b), H.g(c), ab[c]);
      }
  return H;
}

enum class SearchOutcome { Nondegenerate, Degenerate, Undetermined };

struct NondegeneracySearch {
  SearchOutcome outcome = SearchOutcome::Undetermined;
  std::string certificate;                 // parity, sample, isotropy, grid, budget
  std::optional<AlternatingForm> witness;  // a nondegenerate cocycle
  std::optional<Subspace> isotropic_u, isotropic_w;  // w(U, W) = 0 for every cocycle
};

namespace detail {

// { w : c(u, w) = 0 for every cocycle c }.
inline Subspace cocycle_orthogonal(const std::vector<AlternatingForm> &z, const QVector &u, std::size_t n) {
  std::vector<QVector> rows;
  for (const auto &c : z) rows.push_back(c.contract(u));
  if (rows.empty()) return Subspace::whole(n);
  return kernel(QMatrix::from_rows(rows));
}

inline AlternatingForm combination(const std::vector<AlternatingForm> &z, const QVector &t, std::size_t n) {
  AlternatingForm w(n);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (t[i] != 0) w = w + t[i] * z[i];
  return w;
}

} // namespace detail

struct SearchOptions {
  unsigned seed = 0;
  std::size_t budget = 20000;  // determinant evaluations
  std::size_t samples = 32;
  bool certificates = true;
};

// Decides whether some 2-cocycle of L is nondegenerate. Order: parity,
// random samples, an isotropy certificate (w(U, W) = 0 for all cocycles with
// dim U + dim W > dim L), then an exact grid test on det(sum t_i w_i) when the
// grid fits in the evaluation budget.
inline NondegeneracySearch nondegenerate_cocycle_search(const LieAlgebra &L, const SearchOptions &opt = {}) {
  const std::size_t n = L.dim();
  NondegeneracySearch out;
  if (n % 2 == 1) {
    out.outcome = SearchOutcome::Degenerate;
    out.certificate = "parity";
    return out;
  }
  std::vector<AlternatingForm> z = cocycle_space(L).cocycles;
  const std::size_t m = z.size();
  std::mt19937 rng(opt.seed);
  const std::size_t budget = opt.budget;
  std::uniform_int_distribution<int> coef(-5, 5);
  std::size_t evals = 0;
  for (std::size_t s = 0; s < opt.samples && evals < budget; ++s, ++evals) {
    QVector t(m);
    for (auto &x : t) x = coef(rng);
    AlternatingForm w = detail::combination(z, t, n);
    if (is_nondegenerate(w)) {
      out.outcome = SearchOutcome::Nondegenerate;
      out.certificate = "sample";
      out.witness = w;
      return out;
    }
  }
  // Greedy isotropy certificate over basis vectors and central vectors.
  std::vector<QVector> cands;
  for (std::size_t i = 0; i < n; ++i) cands.push_back(unit_vector(n, i));
  Subspace z_l = center(L);
  for (const auto &c : z_l.basis()) cands.push_back(c);
  std::vector<Subspace> orth;
  if (opt.certificates)
    for (const auto &c : cands) orth.push_back(detail::cocycle_orthogonal(z, c, n));
  for (std::size_t s = 0; opt.certificates && s < cands.size(); ++s) {
    Subspace U = Subspace::span(n, {cands[s]});
    Subspace W = orth[s];
    for (std::size_t t = 0; t < cands.size(); ++t) {
      Subspace U2 = U.sum(Subspace::span(n, {cands[t]}));
      if (U2.dim() == U.dim()) continue;
      Subspace W2 = W.intersect(orth[t]);
      if (U2.dim() + W2.dim() >= U.dim() + W.dim()) {
        U = U2;
        W = W2;
      }
    }
    if (U.dim() + W.dim() > n) {
      out.outcome = SearchOutcome::Degenerate;
      out.certificate = "isotropy";
      out.isotropic_u = U;
      out.isotropic_w = W;
      return out;
    }
  }
  // det(sum t_i w_i) has degree n; zero on {0..n}^m means identically zero.
  double grid = 1;
  for (std::size_t i = 0; i < m; ++i) grid *= static_cast<double>(n + 1);
  if (m == 0 || grid + static_cast<double>(evals) <= static_cast<double>(budget)) {
    std::vector<unsigned> idx(m, 0);
    while (true) {
      QVector t(m);
      for (std::size_t i = 0; i < m; ++i) t[i] = idx[i];
      AlternatingForm w = detail::combination(z, t, n);
      if (is_nondegenerate(w)) {
        out.outcome = SearchOutcome::Nondegenerate;
        out.certificate = "grid";
        out.witness = w;
        return out;
      }
      std::size_t p = 0;
      while (p < m && ++idx[p] > n) idx[p++] = 0;
      if (p == m) break;
    }
    out.outcome = SearchOutcome::Degenerate;
    out.certificate = "grid";
    return out;
  }
  out.certificate = "budget";
  return out;
}

struct H1Decision {
  bool symplectic = false;
  std::string reason;  // satisfied, parity, socle-dim, non-local
  std::string method;  // theorem, generic-search
  bool determined = true;
  std::size_t socle_dim = 0;
};

inline H1Decision h1_symplectic_decision(const CommAlgebra &A, const SearchOptions &opt = {}) {
  SocleReport rep = radical_and_socle(A);
  H1Decision d;
  d.socle_dim = rep.socle.dim();
  if (!rep.is_local) {
    d.reason = "non-local";
    d.method = "generic-search";
    NondegeneracySearch s = nondegenerate_cocycle_search(heisenberg_over(A, 1).algebra, opt);
    d.symplectic = s.outcome == SearchOutcome::Nondegenerate;
    d.determined = s.outcome != SearchOutcome::Undetermined;
    return d;
  }
  d.method = "theorem";
  if (A.dim() % 2 == 1) {
    d.reason = "parity";
  } else if (rep.socle.dim() > 2) {
    d.reason = "socle-dim";
  } else {
    d.reason = "satisfied";
    d.symplectic = true;
  }
  return d;
}

struct H1Cocycle {
  AlternatingForm form;
  bool symplectic = false;
  std::string branch;  // socle-one, socle-two, generic-search
};

namespace detail {

// Dual functionals of the socle basis, zero on the standard complement.
inline std::vector<QVector> socle_functionals(const Subspace &socle) {
  const std::size_t n = socle.ambient();
  std::vector<QVector> cols = socle.basis();
  for (const auto &c : socle.standard_complement()) cols.push_back(c);
  QMatrix pinv = inverse(QMatrix::from_columns(cols, n));
  std::vector<QVector> out;
  for (std::size_t i = 0; i < socle.dim(); ++i) out.push_back(pinv.row(i));
  return out;
}

inline Rational apply(const QVector &functional, const QVector &v) { return dot(functional, v); }

} // namespace detail

inline H1Cocycle h1_cocycle_construct(const CommAlgebra &A) {
  H1Decision dec = h1_symplectic_decision(A);
  require(dec.symplectic, "H_1(A) is not symplectic (" + dec.reason + ")");
  HeisenbergOverA H = heisenberg_over(A, 1);
  const std::size_t l = A.dim(), n = 3 * l;
  H1Cocycle out;
  if (dec.method == "generic-search") {
    NondegeneracySearch s = nondegenerate_cocycle_search(H.algebra);
    out.form = *s.witness;
    out.branch = "generic-search";
  } else {
    SocleReport rep = radical_and_socle(A);
    std::vector<QVector> fs = detail::socle_functionals(rep.socle);
    QVector f1 = fs[0];
    QVector f2 = fs.size() > 1 ? fs[1] : QVector(l, Rational(0));
    QMatrix w(n, n);
    // e-g and f-g blocks: w(a e, b g) = f1(ab), w(a f, b g) = f2(ab).
    for (std::size_t p = 0; p < l; ++p)
      for (std::size_t q = 0; q < l; ++q) {
        const QVector &pq = A.basis_product(p, q);
        w(H.e(0, p), H.g(q)) = detail::apply(f1, pq);
        w(H.f(0, p), H.g(q)) = detail::apply(f2, pq);
      }
    QMatrix top(2 * l, 2 * l);
    if (fs.size() == 1) {
      out.branch = "socle-one";
      for (std::size_t p = 0; p + 1 < l; p += 2) {
        top(l + p, l + p + 1) = 1;
        top(l + p + 1, l + p) = -1;
      }
    } else {
      out.branch = "socle-two";
      // K = vectors of Ae + Af pairing trivially with Ag; E a complement.
      QMatrix pairing(l, 2 * l);
      for (std::size_t p = 0; p < 2 * l; ++p)
        for (std::size_t q = 0; q < l; ++q) pairing(q, p) = w(p, H.g(q));
      Subspace K = kernel(pairing);
      std::vector<QVector> cols = K.standard_complement();
      const std::size_t e_dim = cols.size();
      for (const auto &v : K.basis()) cols.push_back(v);
      QMatrix adapted(2 * l, 2 * l);
      for (std::size_t p = e_dim; p + 1 < 2 * l; p += 2) {
        adapted(p, p + 1) = 1;
        adapted(p + 1, p) = -1;
      }
      QMatrix cinv = inverse(QMatrix::from_columns(cols, 2 * l));
      top = cinv.transpose() * adapted * cinv;
    }
    for (std::size_t p = 0; p < 2 * l; ++p)
      for (std::size_t q = 0; q < 2 * l; ++q) w(p, q) = top(p, q);
    for (std::size_t p = 0; p < 2 * l; ++p)
      for (std::size_t q = 2 * l; q < n; ++q) w(q, p) = -w(p, q);
    out.form = AlternatingForm(w);
  }
  out.symplectic = is_cocycle(H.algebra, out.form) && is_nondegenerate(out.form);
  if (!out.symplectic) throw StructuralError("constructed form failed verification");
  return out;
}

struct DegeneracyReport {
  bool degenerate = false;      // every cocycle of H_k(A) is degenerate
  bool center_in_radical = false;  // A g lies in the radical of every basis cocycle
  Subspace common_kernel;
};

inline DegeneracyReport hk_degeneracy_check(const CommAlgebra &A, std::size_t k) {
  require(k >= 2, "degeneracy check needs k >= 2");
  HeisenbergOverA H = heisenberg_over(A, k);
  const std::size_t n = H.algebra.dim();
  std::vector<AlternatingForm> z = cocycle_space(H.algebra).cocycles;
  DegeneracyReport rep;
  rep.center_in_radical = true;
  for (const auto &c : z)
    for (std::size_t a = 0; a < A.dim(); ++a)
      if (!is_zero(c.contract(unit_vector(n, H.g(a))))) rep.center_in_radical = false;
  std::vector<QVector> rows;
  for (const auto &c : z)
    for (std::size_t j = 0; j < n; ++j) rows.push_back(c.matrix().row(j));
  rep.common_kernel = rows.empty() ? Subspace::whole(n) : kernel(QMatrix::from_rows(rows));
  rep.degenerate = rep.common_kernel.dim() > 0;
  return rep;
}

} // namespace nilat
