#pragma once

#include "nilat/groups/presentation.hpp"

namespace nilat {

// g0 = I + (ones on the subdiagonal), the action defining the lattice
// Gamma_0 = Z^n x Z in the filiform group.
inline ZMatrix standard_filiform_action(std::size_t n) {
  require_input(n >= 2, "filiform lattice needs n >= 2");
  ZMatrix g = ZMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g(i + 1, i) = 1;
  return g;
}

enum class FiliformAutFailure {
  None,
  NotInvariant,     // some y_i leaves M = <y_1..y_n>
  NotTriangular,    // restriction to M is not lower triangular with +-1 diagonal
  CenterCoset,      // f(z) is not in z^{+-1} M
  SignPropagation,  // diagonal signs break the propagation rule
  Relation,         // a defining relation is not preserved
};

inline const char *to_string(FiliformAutFailure f) {
  switch (f) {
  case FiliformAutFailure::None: return "ok";
  case FiliformAutFailure::NotInvariant: return "not-invariant";
  case FiliformAutFailure::NotTriangular: return "not-triangular";
  case FiliformAutFailure::CenterCoset: return "z-image";
  case FiliformAutFailure::SignPropagation: return "sign-propagation";
  case FiliformAutFailure::Relation: return "relation";
  }
  return "";
}

struct FiliformAutCheck {
  bool ok = false;
  FiliformAutFailure failure = FiliformAutFailure::None;
  ZMatrix restriction;           // on M in the basis y_1..y_n, when invariant
  std::vector<int> signs;        // diagonal of the restriction
  int z_sign = 0;                // f(z) in z^{z_sign} M
  std::optional<std::size_t> failed_relation;
};

// Images of y_1..y_n, z given in the coordinates (v, t) = y^v z^t of Gamma_0.
// With f(z) = z^s m the relation z y_i = y_i y_{i+1} z forces
// eps_{i+1} = s eps_i; for s = 1 this is the rule that eps_i = 1 implies
// eps_{i+1} = 1 and eps_i = -1 implies eps_{i+1} = -1.
inline FiliformAutCheck filiform_aut_constraints(std::size_t n, const std::vector<QVector> &images) {
  const ZMatrix g0 = standard_filiform_action(n);
  require_input(images.size() == n + 1, "expected images of y_1..y_n and z");
  for (const auto &v : images) {
    require_input(v.size() == n + 1, "image has the wrong number of coordinates");
    for (const auto &c : v) require_input(is_integer(c), "image is not an element of the lattice");
  }
  FiliformAutCheck out;
  auto fail = [&](FiliformAutFailure f) {
    out.failure = f;
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (images[i][n] != 0) return fail(FiliformAutFailure::NotInvariant);
  out.restriction = ZMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) out.restriction(k, i) = to_integer(images[i][k]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k)
      if (out.restriction(k, i) != 0) return fail(FiliformAutFailure::NotTriangular);
    const Integer &d = out.restriction(i, i);
    if (abs(d) != 1) return fail(FiliformAutFailure::NotTriangular);
    out.signs.push_back(d > 0 ? 1 : -1);
  }
  const Rational &t = images[n][n];
  if (abs(t) != 1) return fail(FiliformAutFailure::CenterCoset);
  out.z_sign = t > 0 ? 1 : -1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (out.signs[i + 1] != out.z_sign * out.signs[i]) return fail(FiliformAutFailure::SignPropagation);

  GroupModel model = GroupModel::filiform(g0);
  Presentation pres = filiform_presentation(g0);
  Assignment a;
  for (std::size_t i = 0; i <= n; ++i) a[pres.gens[i]] = {images[i]};
  RelationCheck rc = check_relations(model, a, pres);
  if (!rc.ok) {
    out.failed_relation = rc.first_failure;
    return fail(FiliformAutFailure::Relation);
  }
  out.ok = true;
  return out;
}

// Same check with images given as words in the generators y1..yn, z.
inline FiliformAutCheck filiform_aut_constraints(std::size_t n, const std::vector<Word> &images) {
  const ZMatrix g0 = standard_filiform_action(n);
  require_input(images.size() == n + 1, "expected images of y_1..y_n and z");
  GroupModel model = GroupModel::filiform(g0);
  Assignment gens = filiform_standard_generators(n);
  std::vector<QVector> coords;
  for (const auto &w : images) coords.push_back(evaluate_word(model, gens, w).coords);
  return filiform_aut_constraints(n, coords);
}

} // namespace nilat
