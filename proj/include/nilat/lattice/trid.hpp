#pragma once

#include "nilat/groups/presentation.hpp"
#include "nilat/lattice/abelian.hpp"

namespace nilat {

// Invariants of the derived sublattice inside the center lattice; columns of
// center form a basis, columns of derived generate the sublattice.
inline AbelianInvariants trid_invariants(const ZMatrix &center, const ZMatrix &derived) {
  require_input(center.cols() == 3 && rank(to_rational(center)) == 3, "center lattice must have rank 3");
  require_input(rank(to_rational(derived)) == 3, "derived lattice must have rank 3");
  return quotient_invariants(center, derived);
}

// Same invariants read off a TriD model through commutators of its standard generators.
inline AbelianInvariants trid_invariants(const GroupModel &m) {
  require_input(std::holds_alternative<TriD>(m.variant()), "trid_invariants needs a TriD model");
  auto gens = trid_standard_generators();
  std::vector<ZVector> cols;
  for (const auto &[n1, a] : gens)
    for (const auto &[n2, b] : gens) {
      QVector c = m.commutator(a.coords, b.coords);
      if (is_zero(c)) continue;
      cols.push_back({to_integer(c[0]), to_integer(c[1]), to_integer(c[2])});
    }
  return trid_invariants(ZMatrix::identity(3), ZMatrix::from_columns(cols, 3));
}

} // namespace nilat
