#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "nilat/automorphisms/int_polynomial.hpp"
#include "nilat/core/cocycle.hpp"
#include "nilat/core/polynomial.hpp"
#include "nilat/groups/presentation.hpp"
#include "nilat/lattice/abelian.hpp"
#include "nilat/lattice/filiform.hpp"
#include "nilat/symplectic/comm_algebra.hpp"

// JSON encodings. Numbers are written as exact strings ("p/q"); readers also
// accept JSON integers. Indices in bracket and product tables are 1-based.
namespace nilat::io {

using Json = nlohmann::ordered_json;

inline Rational rational_from(const Json &j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError("expected a rational as a string or integer, got " + j.dump());
}

inline Integer integer_from(const Json &j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump());
  throw InputError("expected an integer as a string or integer, got " + j.dump());
}

inline long small_integer_from(const Json &j) {
  Integer z = integer_from(j);
  require_input(z.fits_slong_p(), "integer out of range: " + z.get_str());
  return z.get_si();
}

inline std::size_t index_from(const Json &j, std::size_t n) {
  long i = small_integer_from(j);
  require_input(i >= 1 && static_cast<std::size_t>(i) <= n, "index out of range: " + j.dump());
  return static_cast<std::size_t>(i - 1);
}

inline const Json &field(const Json &j, const char *key) {
  require_input(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const Json &array_field(const Json &j, const char *key) {
  const Json &a = field(j, key);
  require_input(a.is_array(), std::string("field '") + key + "' must be an array");
  return a;
}

inline Json to_json(const Rational &q) { return to_string(q); }
inline Json to_json(const Integer &z) { return z.get_str(); }

inline Json to_json(const QVector &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(to_string(x));
  return a;
}
inline Json to_json(const ZVector &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(x.get_str());
  return a;
}

inline QVector qvector_from(const Json &j) {
  require_input(j.is_array(), "expected an array of rationals");
  QVector v;
  for (const auto &x : j) v.push_back(rational_from(x));
  return v;
}
inline ZVector zvector_from(const Json &j) {
  require_input(j.is_array(), "expected an array of integers");
  ZVector v;
  for (const auto &x : j) v.push_back(integer_from(x));
  return v;
}

template <class T>
Json to_json(const Matrix<T> &m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline QMatrix qmatrix_from(const Json &j) {
  require_input(j.is_array(), "expected a row-major matrix");
  std::vector<QVector> rows;
  for (const auto &r : j) rows.push_back(qvector_from(r));
  return QMatrix::from_rows(rows);
}
inline ZMatrix zmatrix_from(const Json &j) {
  require_input(j.is_array(), "expected a row-major matrix");
  std::vector<ZVector> rows;
  for (const auto &r : j) rows.push_back(zvector_from(r));
  return ZMatrix::from_rows(rows);
}

// "1,5,2;2,-1,-1;3,2,0"
inline ZMatrix zmatrix_from_text(const std::string &s) {
  std::vector<ZVector> rows(1);
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    require_input(!t.empty(), "empty matrix entry in '" + s + "'");
    rows.back().push_back(parse_integer(t));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c == ';') {
      flush();
      rows.emplace_back();
    } else {
      cur += c;
    }
  }
  flush();
  return ZMatrix::from_rows(rows);
}

// { "dim": n, "brackets": [[i, j, [[k, "c"], ...]], ...] }
inline Json to_json(const LieAlgebra &L) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (L.structure(i, j, k) != 0) terms.push_back(Json::array({k + 1, to_string(L.structure(i, j, k))}));
      if (!terms.empty()) brackets.push_back(Json::array({i + 1, j + 1, terms}));
    }
  return Json{{"dim", L.dim()}, {"brackets", brackets}};
}

inline LieAlgebra lie_from(const Json &j) {
  long n = small_integer_from(field(j, "dim"));
  require_input(n >= 0, "dimension must be nonnegative");
  LieAlgebra L(static_cast<std::size_t>(n));
  for (const auto &b : array_field(j, "brackets")) {
    require_input(b.is_array() && b.size() == 3 && b[2].is_array(), "bracket entries are [i, j, [[k, c], ...]]");
    std::size_t i = index_from(b[0], L.dim()), jj = index_from(b[1], L.dim());
    for (const auto &t : b[2]) {
      require_input(t.is_array() && t.size() == 2, "bracket terms are [k, c]");
      L.add_bracket(i, jj, index_from(t[0], L.dim()), rational_from(t[1]));
    }
  }
  return L;
}

inline Json to_json(const AlternatingForm &w) { return to_json(w.matrix()); }
inline AlternatingForm form_from(const Json &j) { return AlternatingForm(qmatrix_from(j)); }

// A subspace is written by its reduced basis.
inline Json to_json(const Subspace &s) {
  Json b = Json::array();
  for (const auto &v : s.basis()) b.push_back(to_json(v));
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", b}};
}

inline Subspace subspace_from(const Json &j, std::size_t ambient) {
  const Json &vecs = j.is_object() ? array_field(j, "basis") : j;
  require_input(vecs.is_array(), "expected a list of vectors");
  std::vector<QVector> v;
  for (const auto &x : vecs) {
    v.push_back(qvector_from(x));
    require_input(v.back().size() == ambient, "vector of wrong length");
  }
  return Subspace::span(ambient, v);
}

inline Json to_json(const AbelianInvariants &a) {
  return Json{{"divisors", to_json(a.divisors)}, {"invariant_factors", to_json(a.invariant_factors())},
              {"order", a.order().get_str()}, {"finite", a.is_finite()}};
}

inline Json to_json(const IntPolynomial &p) { return to_json(p.coefficients()); }
inline IntPolynomial int_polynomial_from(const Json &j) { return IntPolynomial(zvector_from(j)); }

// Multivariate polynomial as [[exponents], "c"] terms.
inline Json to_json(const Poly &p) {
  Json a = Json::array();
  for (const auto &[m, c] : p.terms()) {
    Json e = Json::array();
    for (auto x : m) e.push_back(x);
    a.push_back(Json::array({e, to_string(c)}));
  }
  return a;
}

inline Poly poly_from(const Json &j) {
  require_input(j.is_array(), "a polynomial is a list of [exponents, c] terms");
  Poly p;
  for (const auto &t : j) {
    require_input(t.is_array() && t.size() == 2 && t[0].is_array(), "polynomial terms are [exponents, c]");
    Poly m(rational_from(t[1]));
    for (std::size_t i = 0; i < t[0].size(); ++i) {
      long e = small_integer_from(t[0][i]);
      require_input(e >= 0, "negative exponent");
      for (long k = 0; k < e; ++k) m = m * Poly::var(i);
    }
    p += m;
  }
  return p;
}

inline Json to_json(const ProductTable &t) {
  Json products = Json::array();
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < t.dim; ++k)
        if (t.products[i][j][k] != 0) terms.push_back(Json::array({k + 1, to_string(t.products[i][j][k])}));
      if (!terms.empty()) products.push_back(Json::array({i + 1, j + 1, terms}));
    }
  return Json{{"dim", t.dim}, {"products", products}};
}

inline ProductTable product_table_from(const Json &j) {
  long n = small_integer_from(field(j, "dim"));
  require_input(n >= 0, "dimension must be nonnegative");
  ProductTable t;
  t.dim = static_cast<std::size_t>(n);
  t.products.assign(t.dim, std::vector<QVector>(t.dim, QVector(t.dim, Rational(0))));
  for (const auto &p : array_field(j, "products")) {
    require_input(p.is_array() && p.size() == 3 && p[2].is_array(), "product entries are [i, j, [[k, c], ...]]");
    std::size_t a = index_from(p[0], t.dim), b = index_from(p[1], t.dim);
    for (const auto &term : p[2]) {
      require_input(term.is_array() && term.size() == 2, "product terms are [k, c]");
      t.products[a][b][index_from(term[0], t.dim)] += rational_from(term[1]);
    }
  }
  return t;
}

// { "dim": n, "unit": [...], "products": [[i, j, [[k, "c"], ...]], ...] }, i <= j.
inline Json to_json(const CommAlgebra &A) {
  Json products = Json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i; j < A.dim(); ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (A.basis_product(i, j)[k] != 0) terms.push_back(Json::array({k + 1, to_string(A.basis_product(i, j)[k])}));
      if (!terms.empty()) products.push_back(Json::array({i + 1, j + 1, terms}));
    }
  return Json{{"dim", A.dim()}, {"unit", to_json(A.unit())}, {"products", products}};
}

inline CommAlgebra comm_algebra_from(const Json &j) {
  long n = small_integer_from(field(j, "dim"));
  require_input(n > 0, "algebra dimension must be positive");
  const std::size_t dim = static_cast<std::size_t>(n);
  CommAlgebra::Table t(dim, std::vector<QVector>(dim, QVector(dim, Rational(0))));
  for (const auto &p : array_field(j, "products")) {
    require_input(p.is_array() && p.size() == 3 && p[2].is_array(), "product entries are [i, j, [[k, c], ...]]");
    std::size_t a = index_from(p[0], dim), b = index_from(p[1], dim);
    require_input(a <= b, "products are listed with i <= j");
    for (const auto &term : p[2]) {
      require_input(term.is_array() && term.size() == 2, "product terms are [k, c]");
      Rational c = rational_from(term[1]);
      std::size_t k = index_from(term[0], dim);
      t[a][b][k] += c;
      if (a != b) t[b][a][k] += c;
    }
  }
  QVector unit = qvector_from(field(j, "unit"));
  return CommAlgebra(std::move(t), std::move(unit));
}

// { "kind": ..., "params": {...} }
inline Json to_json(const GroupModel &m) {
  Json params = Json::object();
  const auto &v = m.variant();
  if (auto h = std::get_if<HeisQuad>(&v)) {
    params["d"] = h->d.get_str();
    params["formula"] = h->formula == HeisFormula::SquareRoot ? "sqrt" : "half";
  } else if (auto t = std::get_if<TriD>(&v)) {
    params["d1"] = t->d[0].value.get_str();
    params["d2"] = t->d[1].value.get_str();
    params["d3"] = t->d[2].value.get_str();
  } else if (auto f = std::get_if<Filiform>(&v)) {
    params["g"] = to_json(f->g);
  }
  return Json{{"kind", m.kind()}, {"params", params}};
}

inline GroupModel group_model_from(const Json &j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (kind == "HeisenbergDual") return GroupModel::heisenberg_dual();
  if (kind == "TStarH1") return GroupModel::tstar_h1();
  if (kind == "Example5G") return GroupModel::example5();
  if (kind == "HeisQuad") {
    Integer d = integer_from(field(params, "d"));
    require_input(d != 0, "HeisQuad needs d != 0");
    if (!params.contains("formula")) return GroupModel::heis_quad(d);
    std::string f = params.at("formula").get<std::string>();
    require_input(f == "sqrt" || f == "half", "formula is 'sqrt' or 'half'");
    return GroupModel::heis_quad(d, f == "sqrt" ? HeisFormula::SquareRoot : HeisFormula::HalfInteger);
  }
  if (kind == "TriD")
    return GroupModel::trid(integer_from(field(params, "d1")), integer_from(field(params, "d2")),
                            integer_from(field(params, "d3")));
  if (kind == "Filiform") return GroupModel::filiform(zmatrix_from(field(params, "g")));
  throw InputError("unknown group model kind '" + kind + "'");
}

inline Json to_json(const GroupElement &e) { return Json{{"coords", to_json(e.coords)}}; }
inline GroupElement group_element_from(const Json &j) {
  return {j.is_object() ? qvector_from(field(j, "coords")) : qvector_from(j)};
}

inline Json to_json(const Word &w) {
  Json a = Json::array();
  for (const auto &[g, e] : w) a.push_back(Json::array({g, e}));
  return a;
}
inline Word word_from(const Json &j) {
  require_input(j.is_array(), "a word is a list of [generator, exponent]");
  Word w;
  for (const auto &x : j) {
    require_input(x.is_array() && x.size() == 2 && x[0].is_string(), "a word letter is [generator, exponent]");
    w.push_back({x[0].get<std::string>(), small_integer_from(x[1])});
  }
  return w;
}

inline Json to_json(const Presentation &p) {
  Json rels = Json::array();
  for (const auto &r : p.relations) rels.push_back(Json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  return Json{{"gens", p.gens}, {"relations", rels}};
}
inline Presentation presentation_from(const Json &j) {
  Presentation p;
  for (const auto &g : array_field(j, "gens")) {
    require_input(g.is_string(), "generator names are strings");
    p.gens.push_back(g.get<std::string>());
  }
  for (const auto &r : array_field(j, "relations"))
    p.relations.push_back({word_from(field(r, "lhs")), r.contains("rhs") ? word_from(r.at("rhs")) : Word{}});
  p.validate();
  return p;
}

inline Json to_json(const Assignment &a) {
  Json o = Json::object();
  for (const auto &[g, e] : a) o[g] = to_json(e);
  return o;
}
inline Assignment assignment_from(const Json &j) {
  require_input(j.is_object(), "an assignment maps generator names to elements");
  Assignment a;
  for (const auto &[g, e] : j.items()) a[g] = group_element_from(e);
  return a;
}

// { "n": 3, "g": [[1,0,0],[6,1,0],[1,9,1]] }
inline Json to_json(const FiliformLatticeSpec &s) { return Json{{"n", s.n()}, {"g", to_json(s.g)}}; }
inline FiliformLatticeSpec filiform_spec_from(const Json &j) {
  FiliformLatticeSpec s{zmatrix_from(field(j, "g"))};
  if (j.contains("n")) require_input(small_integer_from(j.at("n")) == static_cast<long>(s.g.rows()), "n does not match g");
  return s;
}

} // namespace nilat::io
