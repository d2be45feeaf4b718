#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilat/groups/models.hpp"

namespace nilat {

// A word is a product of generator powers, evaluated left to right.
using Word = std::vector<std::pair<std::string, long>>;

struct Relation {
  Word lhs;
  Word rhs;  // empty means the identity
};

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Relation> relations;

  void validate() const {
    for (const auto &r : relations)
      for (const Word *w : {&r.lhs, &r.rhs})
        for (const auto &[g, e] : *w) {
          (void)e;
          bool found = false;
          for (const auto &name : gens) found = found || name == g;
          require_input(found, "relation uses undeclared generator " + g);
        }
  }
};

using Assignment = std::map<std::string, GroupElement>;

inline GroupElement evaluate_word(const GroupModel &m, const Assignment &a, const Word &w) {
  QVector acc = m.identity<Rational>();
  for (const auto &[g, e] : w) {
    auto it = a.find(g);
    require_input(it != a.end(), "no element assigned to generator " + g);
    acc = m.multiply(acc, m.power(it->second.coords, e));
  }
  return {acc};
}

struct RelationCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;
};

inline RelationCheck check_relations(const GroupModel &m, const Assignment &a, const Presentation &p) {
  p.validate();
  for (const auto &g : p.gens) require_input(a.count(g) > 0, "no element assigned to generator " + g);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto &r = p.relations[i];
    if (!(evaluate_word(m, a, r.lhs) == evaluate_word(m, a, r.rhs))) return {false, i};
  }
  return {};
}

namespace detail {
inline GroupElement unit_element(std::size_t dim, std::size_t i) {
  QVector v(dim, Rational(0));
  v[i] = 1;
  return {v};
}
} // namespace detail

// Generators z1,z2,z3 (central) and y1,y2,y3 with the commutator relations
// y2 y3 = y3 y2 z1^d1, y3 y1 = y1 y3 z2^d2, y1 y2 = y2 y1 z3^d3.
inline Presentation trid_presentation(long d1, long d2, long d3) {
  Presentation p;
  p.gens = {"z1", "z2", "z3", "y1", "y2", "y3"};
  const long d[3] = {d1, d2, d3};
  for (int j = 0; j < 3; ++j) {
    std::string a = "y" + std::to_string((j + 1) % 3 + 1), b = "y" + std::to_string((j + 2) % 3 + 1);
    p.relations.push_back({{{a, 1}, {b, 1}}, {{b, 1}, {a, 1}, {"z" + std::to_string(j + 1), d[j]}}});
  }
  for (int i = 1; i <= 3; ++i)
    for (const auto &g : p.gens) {
      std::string z = "z" + std::to_string(i);
      if (g != z) p.relations.push_back({{{z, 1}, {g, 1}}, {{g, 1}, {z, 1}}});
    }
  return p;
}

inline Assignment trid_standard_generators() {
  Assignment a;
  for (int i = 0; i < 3; ++i) {
    a["z" + std::to_string(i + 1)] = detail::unit_element(6, i);
    a["y" + std::to_string(i + 1)] = detail::unit_element(6, i + 3);
  }
  return a;
}

// Generators y1..yn (commuting) and z with z y_i = y_i z_i z,
// z_i = y_{i+1}^{a_{i+1,i}} ... y_n^{a_{n,i}}.
inline Presentation filiform_presentation(const ZMatrix &g) {
  const std::size_t n = g.rows();
  Presentation p;
  for (std::size_t i = 1; i <= n; ++i) p.gens.push_back("y" + std::to_string(i));
  p.gens.push_back("z");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string a = p.gens[i], b = p.gens[j];
      p.relations.push_back({{{a, 1}, {b, 1}}, {{b, 1}, {a, 1}}});
    }
  for (std::size_t i = 0; i < n; ++i) {
    Word rhs{{p.gens[i], 1}};
    for (std::size_t k = i + 1; k < n; ++k)
      if (g(k, i) != 0) rhs.push_back({p.gens[k], to_long(g(k, i))});
    rhs.push_back({"z", 1});
    p.relations.push_back({{{"z", 1}, {p.gens[i], 1}}, rhs});
  }
  return p;
}

inline Assignment filiform_standard_generators(std::size_t n) {
  Assignment a;
  for (std::size_t i = 0; i < n; ++i) a["y" + std::to_string(i + 1)] = detail::unit_element(n + 1, i);
  a["z"] = detail::unit_element(n + 1, n);
  return a;
}

} // namespace nilat
