#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "nilat/automorphisms/gamma111.hpp"
#include "nilat/automorphisms/heisenberg_phi.hpp"
#include "nilat/io/json.hpp"
#include "nilat/lattice/six_dim.hpp"
#include "nilat/lattice/trid.hpp"
#include "nilat/symplectic/affine.hpp"
#include "nilat/symplectic/example5.hpp"
#include "nilat/symplectic/forms.hpp"
#include "nilat/symplectic/heisenberg_over_a.hpp"
#include "nilat/symplectic/moment_map.hpp"
#include "nilat/symplectic/yang_baxter.hpp"

using namespace nilat;
using io::Json;

namespace {

constexpr int kOk = 0, kFalse = 1, kInput = 2, kPrecondition = 3;

struct Outcome {
  Json out;
  int code = kOk;
};

struct Options {
  std::string input, json, a, b, matrix, m, alpha, beta;
  long bound = -1;
  unsigned seed = 0;
  std::size_t k = 2;
  bool allow_inversion = false;
};

// A document given inline (starting with '{' or '[') or as a file path.
Json load(const std::string &text) {
  std::string s = text;
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty JSON document");
  if (s[first] != '{' && s[first] != '[') {
    std::ifstream f(s);
    if (!f) throw InputError("cannot read input file '" + s + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    s = buf.str();
  }
  return Json::parse(s);
}

Json input_doc(const Options &o) {
  require_input(o.input.empty() || o.json.empty(), "give either --input or --json, not both");
  if (!o.json.empty()) return load(o.json);
  if (!o.input.empty()) return load(o.input);
  throw InputError("this command needs --input FILE or --json DOCUMENT");
}

Json operand(const std::string &text, const char *flag) {
  require_input(!text.empty(), std::string("missing ") + flag);
  return load(text);
}

ZMatrix matrix_arg(const Options &o) {
  if (!o.matrix.empty()) {
    require_input(o.input.empty() && o.json.empty(), "give either --matrix or a JSON document, not both");
    return io::zmatrix_from_text(o.matrix);
  }
  return io::zmatrix_from(input_doc(o));
}

std::string str(std::size_t n) { return std::to_string(n); }

Json subspaces(const std::vector<Subspace> &v) {
  Json a = Json::array();
  for (const auto &s : v) a.push_back(io::to_json(s));
  return a;
}

Json forms(const std::vector<AlternatingForm> &v) {
  Json a = Json::array();
  for (const auto &w : v) a.push_back(io::to_json(w));
  return a;
}

Json vectors(const std::vector<ZVector> &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(io::to_json(x));
  return a;
}

QuadInt quad_arg(const std::string &text, const char *flag) {
  require_input(!text.empty(), std::string("missing ") + flag);
  ZMatrix m = io::zmatrix_from_text(text);
  require_input(m.rows() == 1 && m.cols() == 2, std::string(flag) + " takes two integers a,b for a + b w");
  return {m(0, 0), m(0, 1)};
}

// Lie algebra with a form: { "lie": ..., "form": ... }.
std::pair<LieAlgebra, AlternatingForm> lie_with_form(const Json &j) {
  LieAlgebra L = io::lie_from(io::field(j, "lie"));
  AlternatingForm w = io::form_from(io::field(j, "form"));
  require_input(w.dim() == L.dim(), "form and algebra dimensions differ");
  return {L, w};
}

Outcome validate_lie_cmd(const Options &o) {
  LieAlgebra L = io::lie_from(input_doc(o));
  JacobiReport r = validate_lie(L);
  Json v = Json::array();
  for (const auto &x : r.violations)
    v.push_back(Json{{"i", x.i + 1}, {"j", x.j + 1}, {"k", x.k + 1}, {"defect", io::to_json(x.defect)}});
  return {Json{{"ok", r.ok}, {"violations", v}}};
}

Outcome central_series_cmd(const Options &o) {
  LieAlgebra L = io::lie_from(input_doc(o));
  require_input(validate_lie(L).ok, "structure constants violate the Jacobi identity");
  CentralSeries cs = central_series(L);
  bool nil = is_nilpotent(L);
  return {Json{{"ascending", subspaces(cs.ascending)},
               {"descending", subspaces(cs.descending)},
               {"nilpotent", nil},
               {"class", nil ? Json(str(nilpotency_class(L))) : Json(nullptr)}}};
}

Outcome cocycles_cmd(const Options &o) {
  LieAlgebra L = io::lie_from(input_doc(o));
  require_input(validate_lie(L).ok, "structure constants violate the Jacobi identity");
  CocycleSpace z = cocycle_space(L);
  return {Json{{"dim_z2", str(z.cocycles.size())},
               {"dim_b2", str(z.coboundaries.size())},
               {"dim_h2", str(z.cocycles.size() - z.coboundaries.size())},
               {"cocycles", forms(z.cocycles)},
               {"coboundaries", forms(z.coboundaries)}}};
}

Json classification(const SixDimClassification &c) {
  return Json{{"family", to_string(c.family)},
              {"d", c.d ? Json(c.d->get_str()) : Json(nullptr)},
              {"witness", io::to_json(c.witness)},
              {"pfaffian", Json{{"A", io::to_json(c.A)}, {"B", io::to_json(c.B)}, {"C", io::to_json(c.C)}}}};
}

Outcome classify6_cmd(const Options &o) {
  return {classification(classify_six_dim(io::lie_from(input_doc(o)), o.seed))};
}

Outcome commensurable_cmd(const Options &o) {
  auto ca = classify_six_dim(io::lie_from(operand(o.a, "--a")), o.seed);
  auto cb = classify_six_dim(io::lie_from(operand(o.b, "--b")), o.seed);
  bool yes = commensurable(ca, cb);
  return {Json{{"commensurable", yes}, {"a", classification(ca)}, {"b", classification(cb)}}, yes ? kOk : kFalse};
}

Outcome trid_invariants_cmd(const Options &o) {
  Json j = input_doc(o);
  if (j.contains("kind")) return {io::to_json(trid_invariants(io::group_model_from(j)))};
  return {io::to_json(trid_invariants(io::zmatrix_from(io::field(j, "center")), io::zmatrix_from(io::field(j, "derived"))))};
}

Outcome filiform_normalize_cmd(const Options &o) {
  NormalizedFiliform r = filiform_normalize(io::filiform_spec_from(input_doc(o)));
  return {Json{{"normal_form", io::to_json(r.spec)}, {"witness", io::to_json(r.witness)}}};
}

Outcome filiform_isom_cmd(const Options &o) {
  auto s1 = io::filiform_spec_from(operand(o.a, "--a"));
  auto s2 = io::filiform_spec_from(operand(o.b, "--b"));
  FiliformIsomorphism r = filiform_isomorphic(s1, s2, o.allow_inversion);
  Json out{{"isomorphic", r.isomorphic}};
  if (r.witness) out["witness"] = io::to_json(*r.witness);
  if (o.allow_inversion) out["inverted"] = r.inverted;
  if (o.bound >= 0) {
    auto found = filiform_conjugator_search(s1, s2, o.bound);
    out["search"] = Json{{"bound", std::to_string(o.bound)}, {"found", found.has_value()}};
    if (found) out["search"]["witness"] = io::to_json(*found);
  }
  return {out, r.isomorphic ? kOk : kFalse};
}

Outcome filiform_theta_cmd(const Options &o) {
  auto s = io::filiform_spec_from(input_doc(o));
  s.validate();
  return {Json{{"theta", io::to_json(theta_invariant(s))}}};
}

Outcome filiform_quotients_cmd(const Options &o) {
  Json q = Json::array();
  for (const auto &a : central_quotients(io::filiform_spec_from(input_doc(o)))) q.push_back(io::to_json(a));
  return {Json{{"quotients", q}}};
}

Outcome multiply_cmd(const Options &o) {
  Json j = input_doc(o);
  GroupModel m = io::group_model_from(io::field(j, "model"));
  GroupElement a = io::group_element_from(io::field(j, "a"));
  GroupElement b = io::group_element_from(io::field(j, "b"));
  return {Json{{"product", io::to_json(multiply(m, a, b))}, {"inverse_a", io::to_json(inverse(m, a))}}};
}

// Defaults to the standard presentation and generators of TriD and Filiform.
Outcome relations_cmd(const Options &o) {
  Json j = input_doc(o);
  GroupModel m = io::group_model_from(io::field(j, "model"));
  Presentation p;
  Assignment a;
  if (j.contains("presentation")) {
    p = io::presentation_from(j.at("presentation"));
    a = io::assignment_from(io::field(j, "assignment"));
  } else if (auto t = std::get_if<TriD>(&m.variant())) {
    p = trid_presentation(to_long(t->d[0].value), to_long(t->d[1].value), to_long(t->d[2].value));
    a = trid_standard_generators();
  } else if (auto f = std::get_if<Filiform>(&m.variant())) {
    p = filiform_presentation(f->g);
    a = filiform_standard_generators(f->g.rows());
  } else {
    throw InputError("model " + m.kind() + " has no default presentation; give presentation and assignment");
  }
  if (j.contains("assignment") && !j.contains("presentation")) a = io::assignment_from(j.at("assignment"));
  RelationCheck r = check_relations(m, a, p);
  return {Json{{"ok", r.ok},
               {"relations", str(p.relations.size())},
               {"first_failure", r.first_failure ? Json(str(*r.first_failure + 1)) : Json(nullptr)}}};
}

SearchOptions search_options(const Options &o) {
  SearchOptions s;
  s.seed = o.seed;
  if (o.bound >= 0) s.budget = static_cast<std::size_t>(o.bound);
  return s;
}

Outcome symplectic_decide_cmd(const Options &o) {
  H1Decision d = h1_symplectic_decision(io::comm_algebra_from(input_doc(o)), search_options(o));
  return {Json{{"symplectic", d.symplectic},
               {"reason", d.reason},
               {"method", d.method},
               {"determined", d.determined},
               {"socle_dim", str(d.socle_dim)}}};
}

Outcome symplectic_construct_cmd(const Options &o) {
  CommAlgebra A = io::comm_algebra_from(input_doc(o));
  H1Cocycle c = h1_cocycle_construct(A);
  HeisenbergOverA H = heisenberg_over(A, 1);
  return {Json{{"symplectic", c.symplectic},
               {"branch", c.branch},
               {"lie", io::to_json(H.algebra)},
               {"form", io::to_json(c.form)}}};
}

Outcome symplectic_hk_cmd(const Options &o) {
  DegeneracyReport r = hk_degeneracy_check(io::comm_algebra_from(input_doc(o)), o.k);
  return {Json{{"k", str(o.k)},
               {"degenerate", r.degenerate},
               {"center_in_radical", r.center_in_radical},
               {"common_kernel", io::to_json(r.common_kernel)}}};
}

Outcome moment_map_cmd(const Options &o) {
  auto [L, w] = lie_with_form(input_doc(o));
  require_symplectic(L, w);
  MomentMapPoly q = moment_map(L, w);
  MomentIdentityReport r = verify_moment_identity(L, q, o.seed);
  Json comps = Json::array();
  for (const auto &p : q.components) comps.push_back(io::to_json(p));
  return {Json{{"components", comps}, {"identity_holds", r.holds}, {"exact", r.exact}}};
}

// Affine structure from an abelian ideal of codimension 1; the ideal and the
// complementary vector default to the derived-algebra construction.
Outcome theorem6_cmd(const Options &o) {
  Json j = input_doc(o);
  auto [L, w] = lie_with_form(j);
  require_symplectic(L, w);
  Subspace I = j.contains("ideal") ? io::subspace_from(j.at("ideal"), L.dim()) : unique_abelian_codim1(L);
  QVector e = j.contains("e") ? io::qvector_from(j.at("e")) : I.standard_complement().at(0);
  require_input(e.size() == L.dim(), "vector e has the wrong length");
  AffineStructure s = codim1_affine_structure(L, I, e, w);
  return {Json{{"ideal", io::to_json(I)},
               {"e", io::to_json(e)},
               {"product", io::to_json(s.product)},
               {"e_square", io::to_json(s.e_square)},
               {"left_symmetric", is_left_symmetric(s.product)},
               {"torsion_free", is_torsion_free(L, s.product)},
               {"flat", is_flat(L, s.product)},
               {"form_parallel", is_form_parallel(s.product, w)}}};
}

Outcome orthogonal_cmd(const Options &o) {
  Json j = input_doc(o);
  auto [L, w] = lie_with_form(j);
  Subspace H = io::subspace_from(io::field(j, "subspace"), L.dim());
  return {Json{{"orthogonal", io::to_json(orthogonal_subalgebra(L, w, H))}}};
}

Outcome example5_cmd(const Options &o) {
  Json j = input_doc(o);
  const Json &b = io::array_field(j, "b");
  std::vector<QVector> vs;
  for (const auto &x : b) vs.push_back(io::qvector_from(x));
  GammaPrimeReport r = example5_gamma_prime(vs);
  return {Json{{"w_dim", str(r.w_dim)},
               {"gamma_prime_rank", str(r.gamma_prime_rank)},
               {"is_lattice", r.is_lattice},
               {"x_part", vectors(r.x_part)},
               {"form", r.form ? io::to_json(*r.form) : Json(nullptr)}}};
}

std::pair<LieAlgebra, QMatrix> lie_with_bivector(const Json &j) {
  LieAlgebra L = io::lie_from(io::field(j, "lie"));
  QMatrix r = io::qmatrix_from(io::field(j, "r"));
  require_input(r.square() && r.rows() == L.dim(), "bivector of wrong size");
  require_input((r.transpose() + r).is_zero(), "bivector must be antisymmetric");
  return {L, r};
}

Outcome cybe_cmd(const Options &o) {
  auto [L, r] = lie_with_bivector(input_doc(o));
  return {Json{{"cybe", cybe_check(L, r)}}};
}

Outcome double_theta_cmd(const Options &o) {
  auto [L, r] = lie_with_bivector(input_doc(o));
  DoubleThetaReport d = double_theta_check(L, r);
  return {Json{{"isomorphism", d.isomorphism},
               {"cotangent", io::to_json(d.cotangent)},
               {"double", io::to_json(d.double_algebra)},
               {"theta", io::to_json(d.theta)}}};
}

Outcome units_cmd(const Options &o) {
  require_input(!o.m.empty(), "missing -m");
  Integer m = parse_integer(o.m);
  QuadraticRing ring = ring_of_integers(m);
  UnitGroupDesc u = unit_group(m);
  Json out{{"m", m.get_str()},
           {"basis", ring.kind == BasisKind::Half ? "half" : "sqrt"},
           {"torsion", u.torsion_name()},
           {"rank", u.fundamental ? "1" : "0"}};
  if (u.fundamental) {
    out["fundamental"] = to_string(ring, *u.fundamental);
    out["coords"] = Json::array({u.fundamental->a.get_str(), u.fundamental->b.get_str()});
    out["norm"] = ring.norm(*u.fundamental).get_str();
  } else {
    out["fundamental"] = nullptr;
  }
  return {out};
}

Outcome anosov_cmd(const Options &o) {
  ZMatrix b = matrix_arg(o);
  require_input(b.square() && b.rows() > 0, "expected a square integer matrix");
  bool yes = b.rows() == 3 ? is_anosov(b) : is_hyperbolic_unimodular(b);
  Json out{{"charpoly", io::to_json(characteristic_polynomial(b))},
           {"det", determinant(b).get_str()},
           {"anosov", yes}};
  return {out, yes ? kOk : kFalse};
}

Outcome charpoly_cmd(const Options &o) {
  ZMatrix b = matrix_arg(o);
  require_input(b.square() && b.rows() > 0, "expected a square integer matrix");
  IntPolynomial p = characteristic_polynomial(b);
  Json out{{"charpoly", io::to_json(p)}, {"text", p.to_string()}};
  if (b.rows() == 3 && abs(determinant(b)) == 1) {
    CharPolyPair pq = char_poly_pair(b);
    out["center_charpoly"] = io::to_json(pq.q_a);
    out["center_text"] = pq.q_a.to_string();
  }
  return {out};
}

Outcome phi_aut_cmd(const Options &o) {
  require_input(!o.m.empty(), "missing -m");
  QuadraticRing ring = ring_of_integers(parse_integer(o.m));
  PhiAutomorphism phi = phi_automorphism(ring, quad_arg(o.alpha, "--alpha"), quad_arg(o.beta, "--beta"));
  Json ev = Json::array();
  for (const auto &e : phi.eigenvalues) {
    const char *kind = e.modulus_vs_one > 0 ? "expanding" : e.modulus_vs_one < 0 ? "contracting" : "unit";
    ev.push_back(Json{{"value", e.text}, {"modulus", kind}});
  }
  return {Json{{"alpha", to_string(ring, phi.alpha)},
               {"beta", to_string(ring, phi.beta)},
               {"gamma", to_string(ring, phi.gamma)},
               {"matrix", io::to_json(phi.matrix)},
               {"eigenvalues", ev},
               {"expanding", str(phi.expanding)},
               {"contracting", str(phi.contracting)},
               {"anosov", phi.anosov}}};
}

Json error_json(const char *type, const std::string &message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

int emit(const Json &j, int code) {
  std::cout << j.dump(2) << '\n';
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations with nilpotent Lie algebras, group models and lattices", "nilat"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App *, std::function<Outcome(const Options &)>>> commands;

  auto doc_flags = [&](CLI::App *c) {
    c->add_option("--input", o.input, "JSON file");
    c->add_option("--json", o.json, "inline JSON document");
  };
  auto add = [&](CLI::App *parent, const std::string &name, const std::string &help,
                 std::function<Outcome(const Options &)> fn) {
    CLI::App *c = parent->add_subcommand(name, help);
    commands.emplace_back(c, std::move(fn));
    return c;
  };

  doc_flags(add(&app, "validate-lie", "Jacobi identity check", validate_lie_cmd));
  doc_flags(add(&app, "central-series", "ascending and descending central series", central_series_cmd));
  doc_flags(add(&app, "cocycles", "2-cocycles and 2-coboundaries", cocycles_cmd));
  {
    auto c = add(&app, "classify6", "classify a 6-dimensional 2-step algebra", classify6_cmd);
    doc_flags(c);
    c->add_option("--seed", o.seed, "seed for the choice of complement");
  }
  {
    auto c = add(&app, "commensurable", "compare two 6-dimensional algebras", commensurable_cmd);
    c->add_option("--a", o.a, "first algebra (inline JSON or file)");
    c->add_option("--b", o.b, "second algebra (inline JSON or file)");
    c->add_option("--seed", o.seed, "seed for the choice of complement");
  }
  doc_flags(add(&app, "trid-invariants", "center modulo derived subgroup of a TriD lattice", trid_invariants_cmd));

  CLI::App *fil = app.add_subcommand("filiform", "lattices in filiform groups");
  fil->require_subcommand(1);
  doc_flags(add(fil, "normalize", "normal form of the action matrix", filiform_normalize_cmd));
  {
    auto c = add(fil, "isom", "isomorphism test", filiform_isom_cmd);
    c->add_option("--a", o.a, "first lattice (inline JSON or file)");
    c->add_option("--b", o.b, "second lattice (inline JSON or file)");
    c->add_option("--bound", o.bound, "also run a brute conjugator search with this entry bound");
    c->add_flag("--allow-inversion", o.allow_inversion, "also allow replacing g by its inverse");
  }
  doc_flags(add(fil, "theta", "theta invariant", filiform_theta_cmd));
  doc_flags(add(fil, "quotients", "central series quotients", filiform_quotients_cmd));

  doc_flags(add(&app, "multiply", "product in a group model", multiply_cmd));
  doc_flags(add(&app, "relations", "check a presentation on assigned elements", relations_cmd));

  CLI::App *sym = app.add_subcommand("symplectic", "Heisenberg algebras over commutative algebras");
  sym->require_subcommand(1);
  {
    auto c = add(sym, "decide", "does H_1(A) carry a symplectic form", symplectic_decide_cmd);
    doc_flags(c);
    c->add_option("--seed", o.seed, "seed for the generic search");
    c->add_option("--bound", o.bound, "evaluation budget for the generic search");
  }
  doc_flags(add(sym, "construct", "explicit cocycle on H_1(A)", symplectic_construct_cmd));
  {
    auto c = add(sym, "hk-check", "degeneracy of cocycles on H_k(A)", symplectic_hk_cmd);
    doc_flags(c);
    c->add_option("-k", o.k, "Heisenberg rank (>= 2)");
  }
  {
    auto c = add(&app, "moment-map", "moment map of a symplectic nilpotent algebra", moment_map_cmd);
    doc_flags(c);
    c->add_option("--seed", o.seed, "seed for sampled checks");
  }
  doc_flags(add(&app, "theorem6", "affine structure from an abelian ideal of codimension 1", theorem6_cmd));
  doc_flags(add(&app, "orthogonal", "symplectic orthogonal of a subalgebra", orthogonal_cmd));
  doc_flags(add(&app, "example5", "the subgroup Gamma' for coefficient vectors b1, b2, b3", example5_cmd));
  doc_flags(add(&app, "cybe", "classical Yang-Baxter equation", cybe_cmd));
  doc_flags(add(&app, "double-theta", "double algebra and the map to the cotangent algebra", double_theta_cmd));
  add(&app, "units", "unit group of a quadratic ring", units_cmd)->add_option("-m", o.m, "squarefree m");
  {
    auto c = add(&app, "anosov", "hyperbolicity of an integer matrix", anosov_cmd);
    doc_flags(c);
    c->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
  }
  {
    auto c = add(&app, "charpoly", "characteristic polynomials", charpoly_cmd);
    doc_flags(c);
    c->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
  }
  {
    auto c = add(&app, "phi-aut", "automorphism of the lattice in the Heisenberg group over a quadratic ring",
                 phi_aut_cmd);
    c->add_option("-m", o.m, "squarefree m");
    c->add_option("--alpha", o.alpha, "unit a,b meaning a + b w");
    c->add_option("--beta", o.beta, "unit a,b meaning a + b w");
  }

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr)
    return emit(error_json("usage", std::string("unknown subcommand '") + argv[1] + "'"), kInput);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return emit(error_json("usage", e.what()), kInput);
  }

  try {
    for (const auto &[c, fn] : commands)
      if (c->parsed()) {
        Outcome r = fn(o);
        return emit(r.out, r.code);
      }
    return emit(error_json("usage", "no command given"), kInput);
  } catch (const InputError &e) {
    return emit(error_json("input", e.what()), kInput);
  } catch (const Json::exception &e) {
    return emit(error_json("input", e.what()), kInput);
  } catch (const PreconditionError &e) {
    return emit(error_json("precondition", e.what()), kPrecondition);
  } catch (const StructuralError &e) {
    return emit(error_json("structural", e.what()), kPrecondition);
  }
}
