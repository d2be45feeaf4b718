#pragma once

#include "nilat/core/integer_forms.hpp"
#include "nilat/core/linalg.hpp"

namespace nilat {

// Finitely generated abelian group Z/d1 + Z/d2 + ... with d1 | d2 | ...;
// a divisor 0 stands for an infinite cyclic factor.
struct AbelianInvariants {
  ZVector divisors;

  bool is_finite() const {
    for (const auto &d : divisors)
      if (d == 0) return false;
    return true;
  }

  // Group order, or 0 when infinite.
  Integer order() const {
    Integer o = 1;
    for (const auto &d : divisors) o *= d;
    return o;
  }

  bool is_trivial() const { return order() == 1; }

  // Divisors with the trivial factors dropped.
  ZVector invariant_factors() const {
    ZVector out;
    for (const auto &d : divisors)
      if (d != 1) out.push_back(d);
    return out;
  }

  friend bool operator==(const AbelianInvariants &a, const AbelianInvariants &b) {
    return a.invariant_factors() == b.invariant_factors();
  }
};

// Invariants of span_Z(small) inside span_Z(big) as an abstract quotient; both
// are given by columns, big must have independent columns and contain small.
inline AbelianInvariants quotient_invariants(const ZMatrix &big, const ZMatrix &small) {
  require_input(big.rows() == small.rows(), "lattices live in different ambient spaces");
  const std::size_t r = big.cols();
  require_input(rank(to_rational(big)) == r, "lattice basis is not independent");
  ZMatrix coords(r, small.cols());
  QMatrix qb = to_rational(big);
  for (std::size_t j = 0; j < small.cols(); ++j) {
    auto x = solve(qb, to_rational(small.col(j)));
    require_input(x.has_value(), "sublattice is not contained in the lattice");
    for (std::size_t i = 0; i < r; ++i) {
      require_input(is_integer((*x)[i]), "sublattice is not contained in the lattice");
      coords(i, j) = to_integer((*x)[i]);
    }
  }
  AbelianInvariants out;
  if (small.cols() == 0) {
    out.divisors.assign(r, Integer(0));
    return out;
  }
  SnfResult s = smith_normal_form(coords);
  out.divisors = s.divisors;
  out.divisors.resize(r, Integer(0));
  return out;
}

} // namespace nilat
