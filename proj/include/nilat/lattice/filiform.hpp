#pragma once

#include <functional>
#include <optional>

#include "nilat/core/integer_forms.hpp"
#include "nilat/core/lie_algebra.hpp"
#include "nilat/lattice/abelian.hpp"

namespace nilat {

// Lattice L x_g Z in F_n given by the action g = g(1) on L = Z^n.
struct FiliformLatticeSpec {
  ZMatrix g;

  std::size_t n() const { return g.rows(); }

  // Malformed matrices are input errors; a degenerate action is a precondition error.
  void validate() const {
    require_input(g.rows() >= 2 && is_lower_unitriangular(g), "g must be lower unitriangular of size >= 2");
    ZMatrix N = g - ZMatrix::identity(n());
    require(!power(N, static_cast<unsigned>(n() - 1)).is_zero(), "(g - I)^(n-1) vanishes");
  }

  friend bool operator==(const FiliformLatticeSpec &a, const FiliformLatticeSpec &b) { return a.g == b.g; }
};

inline ZVector theta_invariant(const FiliformLatticeSpec &s) {
  s.validate();
  ZVector out;
  for (std::size_t i = 0; i + 1 < s.n(); ++i) out.push_back(abs(s.g(i + 1, i)));
  return out;
}

struct NormalizedFiliform {
  FiliformLatticeSpec spec;
  ZMatrix witness;  // witness^-1 * g * witness = spec.g
};

// Sign fix by a +-1 diagonal, then Euclidean reduction of the entries below the
// subdiagonal, offset by offset and column by column, as in the reduction proof.
inline NormalizedFiliform filiform_normalize(const FiliformLatticeSpec &s) {
  s.validate();
  const std::size_t n = s.n();
  ZMatrix W = ZMatrix::identity(n);
  Integer eps = 1;
  for (std::size_t i = 1; i < n; ++i) {
    eps *= sgn(s.g(i, i - 1));
    W(i, i) = eps;
  }
  // D^-1 = D for a sign diagonal
  ZMatrix g = W * s.g * W;
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 0; j + k < n; ++j) {
      const std::size_t i = j + k;
      Integer q = floor_div(g(i, j), g(j + 1, j));
      if (q == 0) continue;
      // phi = I + q E_{i,j+1}: column j+1 += q col i, then row i -= q row j+1
      for (std::size_t r = 0; r < n; ++r) g(r, j + 1) += q * g(r, i);
      for (std::size_t c = 0; c < n; ++c) g(i, c) -= q * g(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) W(r, j + 1) += q * W(r, i);
    }
  return {{g}, W};
}

struct FiliformIsomorphism {
  bool isomorphic = false;
  std::optional<ZMatrix> witness;  // phi with phi^-1 g2 phi = g1 (g2 inverted when inverted is set)
  bool inverted = false;
};

namespace detail {
// Unitriangular psi = I + N with g2 psi = psi g1, both inputs normalized.
inline std::optional<ZMatrix> solve_unitriangular_conjugator(const ZMatrix &g1, const ZMatrix &g2) {
  const std::size_t n = g1.rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) idx.push_back({i, j});
  if (idx.empty()) return g1 == g2 ? std::optional<ZMatrix>(ZMatrix::identity(n)) : std::nullopt;
  ZMatrix sys(n * n, idx.size());
  ZVector rhs(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      rhs[row] = g1(r, c) - g2(r, c);
      for (std::size_t u = 0; u < idx.size(); ++u) {
        auto [a, b] = idx[u];
        // (g2 N)_{rc} picks N_{ab} with b = c, coefficient g2_{ra}
        if (b == c) sys(row, u) += g2(r, a);
        // (N g1)_{rc} picks N_{ab} with a = r, coefficient g1_{bc}
        if (a == r) sys(row, u) -= g1(b, c);
      }
    }
  auto x = solve_integer(sys, rhs);
  if (!x) return std::nullopt;
  ZMatrix psi = ZMatrix::identity(n);
  for (std::size_t u = 0; u < idx.size(); ++u) psi(idx[u].first, idx[u].second) = (*x)[u];
  return psi;
}

inline ZMatrix unitriangular_inverse(const ZMatrix &m) { return integer_inverse(m); }

inline std::optional<ZMatrix> conjugator(const FiliformLatticeSpec &s1, const FiliformLatticeSpec &s2) {
  auto n1 = filiform_normalize(s1), n2 = filiform_normalize(s2);
  if (theta_invariant(n1.spec) != theta_invariant(n2.spec)) return std::nullopt;
  auto psi = solve_unitriangular_conjugator(n1.spec.g, n2.spec.g);
  if (!psi) return std::nullopt;
  ZMatrix phi = n2.witness * *psi * unitriangular_inverse(n1.witness);
  require(unitriangular_inverse(phi) * s2.g * phi == s1.g, "conjugator check failed");
  return phi;
}
} // namespace detail

// For n = 3: equal subdiagonals up to sign and c1 = c2 mod gcd(a, b) after
// sign normalization.
inline bool filiform_isomorphic_n3(const FiliformLatticeSpec &s1, const FiliformLatticeSpec &s2) {
  require_input(s1.n() == 3 && s2.n() == 3, "closed form needs n = 3");
  auto a = filiform_normalize(s1).spec.g, b = filiform_normalize(s2).spec.g;
  if (a(1, 0) != b(1, 0) || a(2, 1) != b(2, 1)) return false;
  Integer m = gcd(a(1, 0), a(2, 1));
  return floor_mod(a(2, 0) - b(2, 0), m) == 0;
}

// Conjugacy in the group generated by lower unitriangular integer matrices and
// +-1 diagonals, decided exactly by an integer linear system. With
// allow_inversion, g2^-1 (the lattice with z replaced by z^-1) is tried as well.
inline FiliformIsomorphism filiform_isomorphic(const FiliformLatticeSpec &s1, const FiliformLatticeSpec &s2,
                                               bool allow_inversion = false) {
  require_input(s1.n() == s2.n(), "lattices live in different dimensions");
  s1.validate();
  s2.validate();
  FiliformIsomorphism out;
  if (auto phi = detail::conjugator(s1, s2)) {
    out.isomorphic = true;
    out.witness = phi;
  } else if (allow_inversion) {
    if (auto phi2 = detail::conjugator(s1, {integer_inverse(s2.g)})) {
      out.isomorphic = true;
      out.witness = phi2;
      out.inverted = true;
    }
  }
  if (s1.n() == 3 && !out.inverted)
    require(out.isomorphic == filiform_isomorphic_n3(s1, s2), "closed form disagrees with the linear system");
  return out;
}

// Search over unitriangular conjugators with entries in [-bound, bound] of the
// normalized pair; complete within the bound, entries chosen by offset so each
// equation is checked as soon as its unknowns are fixed.
inline std::optional<ZMatrix> filiform_conjugator_search(const FiliformLatticeSpec &s1, const FiliformLatticeSpec &s2,
                                                         long bound) {
  require_input(s1.n() == s2.n(), "lattices live in different dimensions");
  require_input(bound >= 0, "search bound must be nonnegative");
  auto n1 = filiform_normalize(s1), n2 = filiform_normalize(s2);
  const ZMatrix &g1 = n1.spec.g, &g2 = n2.spec.g;
  const std::size_t n = s1.n();
  if (theta_invariant(n1.spec) != theta_invariant(n2.spec)) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t j = 0; j + k < n; ++j) order.push_back({j + k, j});
  ZMatrix psi = ZMatrix::identity(n);
  // the equation at offset k only involves entries of offset < k
  auto offset_ok = [&](std::size_t k) {
    for (std::size_t c = 0; c + k < n; ++c) {
      std::size_t r = c + k;
      Integer lhs = 0, rhs = 0;
      for (std::size_t t = 0; t < n; ++t) {
        lhs += g2(r, t) * psi(t, c);
        rhs += psi(r, t) * g1(t, c);
      }
      if (lhs != rhs) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    auto [i, j] = order[pos];
    const std::size_t k = i - j;
    if (j == 0 && k >= 2 && !offset_ok(k)) return false;
    for (long v = -bound; v <= bound; ++v) {
      psi(i, j) = v;
      if (rec(pos + 1)) return true;
    }
    psi(i, j) = 0;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  for (std::size_t k = 1; k < n; ++k)
    if (!offset_ok(k)) return std::nullopt;
  ZMatrix phi = n2.witness * psi * integer_inverse(n1.witness);
  require(integer_inverse(phi) * s2.g * phi == s1.g, "conjugator check failed");
  return phi;
}

// C_i Gamma / C^{n-i} Gamma for i = 1..n-1, inside L = Z^n: C_i = ker (g-I)^i and
// C^{n-i} = (g-I)^{n-i} Z^n.
inline std::vector<AbelianInvariants> central_quotients(const FiliformLatticeSpec &s) {
  s.validate();
  const std::size_t n = s.n();
  ZMatrix N = s.g - ZMatrix::identity(n);
  std::vector<AbelianInvariants> out;
  for (std::size_t i = 1; i < n; ++i) {
    auto ker = integer_kernel(power(N, static_cast<unsigned>(i)));
    ZMatrix big = ZMatrix::from_columns(ker, n);
    out.push_back(quotient_invariants(big, power(N, static_cast<unsigned>(n - i))));
  }
  return out;
}

// The abelian ideal of codimension 1 in an algebra of L_n type (n >= 3).
inline Subspace unique_abelian_codim1(const LieAlgebra &L) {
  require_input(validate_lie(L).ok, "structure constants violate the Jacobi identity");
  const std::size_t dim = L.dim();
  if (dim < 4) throw StructuralError("algebra is too small to be of L_n type with n >= 3");
  // filiform: dim C^k = dim - 1 - k for k >= 1
  auto cs = central_series(L);
  bool filiform = is_nilpotent(L) && cs.descending.size() + 1 >= dim - 1;
  for (std::size_t k = 1; filiform && k + 1 < dim; ++k) filiform = cs.descending[k - 1].dim() == dim - 1 - k;
  if (!filiform) throw StructuralError("algebra is not filiform");
  Subspace J = derived_algebra(L);
  if (!is_abelian_subspace(L, J)) throw StructuralError("derived algebra is not abelian");
  auto comp = J.standard_complement();
  // alpha ad_{x0} + beta ad_{x1} vanishing on J
  QMatrix sys(dim * J.dim(), 2);
  for (std::size_t c = 0; c < 2; ++c) {
    std::size_t row = 0;
    for (const auto &j : J.basis()) {
      QVector b = L.bracket(comp[c], j);
      for (std::size_t k = 0; k < dim; ++k) sys(row++, c) = b[k];
    }
  }
  auto ns = nullspace(sys);
  if (ns.size() != 1) throw StructuralError("abelian codimension-1 ideal is not unique");
  QVector x = add(scale(ns[0][0], comp[0]), scale(ns[0][1], comp[1]));
  Subspace I = J.sum(Subspace::span(dim, {x}));
  require(is_ideal(L, I) && is_abelian_subspace(L, I), "constructed ideal check failed");
  return I;
}

} // namespace nilat
