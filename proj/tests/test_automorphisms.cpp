#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <random>

#include "nilat/automorphisms/filiform_aut.hpp"
#include "nilat/automorphisms/gamma111.hpp"
#include "nilat/automorphisms/heisenberg_phi.hpp"

using namespace nilat;

namespace {

const ZMatrix kAnosovB{{1, 5, 2}, {2, -1, -1}, {3, 2, 0}};

// Smallest unit > 1 by scanning the coefficient of sqrt m: for the Sqrt basis
// a + b sqrt m with a^2 - m b^2 = +-1, for the Half basis (x + y sqrt m)/2 with
// x^2 - m y^2 = +-4. Returns radical coordinates.
std::pair<Rational, Rational> brute_fundamental_unit(long m, long bound) {
  const bool half = ((m % 4) + 4) % 4 == 1;
  const long target = half ? 4 : 1;
  for (long y = 1; y <= bound; ++y)
    for (long sgn_n : {-1L, 1L}) {
      Integer x2 = Integer(m) * y * y + sgn_n * target;
      if (x2 <= 0 || !is_square(x2)) continue;
      Integer x = isqrt(x2);
      if (half) {
        Rational r(x, 2), s(y, 2);
        r.canonicalize();
        s.canonicalize();
        return {r, s};
      }
      return {Rational(x), Rational(y)};
    }
  return {0, 0};
}

// Number of roots of unity: solutions of x^2 + |m| y^2 = 4 with x = y mod 2
// (Half basis) or a^2 + |m| b^2 = 1.
unsigned brute_torsion(long m) {
  const bool half = ((m % 4) + 4) % 4 == 1;
  unsigned c = 0;
  if (half) {
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y)
        if ((x - y) % 2 == 0 && x * x - m * y * y == 4) ++c;
  } else {
    for (long a = -1; a <= 1; ++a)
      for (long b = -1; b <= 1; ++b)
        if (a * a - m * b * b == 1) ++c;
  }
  return c;
}

double as_double(long m, const Rational &r, const Rational &s) {
  return r.get_d() + s.get_d() * std::sqrt(static_cast<double>(m));
}

std::vector<std::complex<double>> float_roots(const IntPolynomial &p) {
  const long n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().get_d();
  for (long i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (long i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (long i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Roots closer than 1e-5 are treated as one multiple root and replaced by
// their centroid, which is accurate where the individual roots are not.
bool float_unit_circle(const IntPolynomial &p) {
  if (p.degree() < 1) return false;
  std::vector<std::complex<double>> roots = float_roots(p);
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::complex<double> sum = roots[i];
    int count = 1;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) < 1e-5) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    if (std::abs(std::abs(sum / double(count)) - 1.0) < 1e-9) return true;
  }
  return false;
}

// Polynomial with random coefficients, sometimes multiplied by a factor with
// roots on the unit circle so both answers occur.
IntPolynomial random_polynomial(std::mt19937 &rng, long max_degree) {
  std::uniform_int_distribution<long> coeff(-6, 6), pick(0, 5);
  const IntPolynomial circle[] = {{1, 1}, {-1, 1}, {1, 0, 1}, {1, 1, 1}, {1, -1, 1}, {1, 1, 1, 1, 1}};
  long deg = std::uniform_int_distribution<long>(1, max_degree)(rng);
  bool with_circle = pick(rng) < 3;
  IntPolynomial f;
  if (with_circle) {
    IntPolynomial c = circle[pick(rng)];
    long rest = std::max<long>(deg - c.degree(), 0);
    ZVector v;
    for (long i = 0; i <= rest; ++i) v.push_back(coeff(rng));
    v.back() = v.back() == 0 ? Integer(1) : v.back();
    f = c * IntPolynomial(v);
  } else {
    ZVector v;
    for (long i = 0; i <= deg; ++i) v.push_back(coeff(rng));
    if (v.back() == 0) v.back() = 1;
    if (v.front() == 0) v.front() = -1;
    f = IntPolynomial(v);
  }
  return f;
}

ZMatrix random_unimodular(std::mt19937 &rng, std::size_t n, int steps) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-2, 2);
  ZMatrix u = ZMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      u.negate_row(i);
      continue;
    }
    u.add_row(i, j, Integer(c(rng)));
  }
  return u;
}

// det(x I - m) by cofactor expansion for 3x3 integer matrices.
Integer det_shift(const ZMatrix &m, long x) {
  ZMatrix a = -m;
  for (std::size_t i = 0; i < 3; ++i) a(i, i) += x;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

ZMatrix cofactor_matrix(const ZMatrix &b) {
  ZMatrix c(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      c(i, j) = b(r0, c0) * b(r1, c1) - b(r0, c1) * b(r1, c0);
    }
  return c;
}

ZMatrix companion(const IntPolynomial &p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  ZMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

} // namespace

TEST(QuadraticRing, BasisKinds) {
  EXPECT_EQ(ring_of_integers(5).kind, BasisKind::Half);
  EXPECT_EQ(ring_of_integers(2).kind, BasisKind::Sqrt);
  EXPECT_EQ(ring_of_integers(-1).kind, BasisKind::Sqrt);
  EXPECT_EQ(ring_of_integers(-3).kind, BasisKind::Half);
  EXPECT_EQ(ring_of_integers(3).kind, BasisKind::Sqrt);
  EXPECT_THROW(ring_of_integers(12), InputError);
  EXPECT_THROW(ring_of_integers(-4), InputError);
  EXPECT_THROW(ring_of_integers(0), InputError);
  EXPECT_THROW(ring_of_integers(1), InputError);
}

TEST(QuadraticRing, MultiplicationMatchesRadicalForm) {
  for (long m : {-7L, -3L, -2L, -1L, 2L, 3L, 5L, 13L, 21L}) {
    QuadraticRing ring = ring_of_integers(m);
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            QuadInt x{a, b}, y{c, d};
            auto [r1, s1] = ring.radical_coords(x);
            auto [r2, s2] = ring.radical_coords(y);
            Rational r = r1 * r2 + s1 * s2 * Rational(m), s = r1 * s2 + r2 * s1;
            ASSERT_EQ(ring.mul(x, y), ring.from_radical(r, s));
            ASSERT_EQ(Rational(ring.norm(x)), r1 * r1 - s1 * s1 * Rational(m));
          }
  }
}

TEST(QuadraticRing, PrintedUnits) {
  EXPECT_EQ(fundamental_unit(2), (QuadInt{1, 1}));
  EXPECT_EQ(fundamental_unit(3), (QuadInt{2, 1}));
  EXPECT_EQ(fundamental_unit(5), (QuadInt{0, 1}));
  EXPECT_EQ(to_string(ring_of_integers(2), fundamental_unit(2)), "1+sqrt2");
  EXPECT_EQ(to_string(ring_of_integers(3), fundamental_unit(3)), "2+sqrt3");
  EXPECT_EQ(to_string(ring_of_integers(5), fundamental_unit(5)), "(1+sqrt5)/2");
  EXPECT_THROW(fundamental_unit(1), InputError);
  EXPECT_THROW(fundamental_unit(-2), InputError);
}

TEST(QuadraticRing, FundamentalUnitMinimality) {
  for (long m = 2; m <= 50; ++m) {
    if (!is_squarefree(m)) continue;
    QuadraticRing ring = ring_of_integers(m);
    QuadInt u = fundamental_unit(m);
    EXPECT_TRUE(ring.is_unit(u)) << m;
    auto [r, s] = ring.radical_coords(u);
    EXPECT_GT(real_sign(m, r - 1, s), 0) << m;
    auto expected = brute_fundamental_unit(m, 100000);
    EXPECT_EQ(r, expected.first) << m;
    EXPECT_EQ(s, expected.second) << m;
  }
}

TEST(QuadraticRing, Torsion) {
  EXPECT_EQ(unit_group(-1).torsion_name(), "C4");
  EXPECT_EQ(unit_group(-3).torsion_name(), "C6");
  EXPECT_EQ(unit_group(-2).torsion_name(), "C2");
  EXPECT_EQ(unit_group(5).torsion_name(), "C2");
  EXPECT_FALSE(unit_group(-1).fundamental.has_value());
  EXPECT_TRUE(unit_group(7).fundamental.has_value());
  for (long m = -60; m <= -1; ++m) {
    if (!is_squarefree(m)) continue;
    EXPECT_EQ(unit_torsion(m), brute_torsion(m)) << m;
  }
}

TEST(QuadraticRing, Strings) {
  EXPECT_EQ(radical_string(2, 1, -1), "1-sqrt2");
  EXPECT_EQ(radical_string(5, Rational(1, 2), Rational(-1, 2)), "(1-sqrt5)/2");
  EXPECT_EQ(radical_string(-1, 0, 1), "sqrt(-1)");
  EXPECT_EQ(radical_string(3, 0, -2), "-2sqrt3");
  EXPECT_EQ(radical_string(3, -4, 0), "-4");
  EXPECT_EQ(radical_string(-3, 0, Rational(1, 2)), "sqrt(-3)/2");
}

TEST(Phi, Identity) {
  QuadraticRing ring = ring_of_integers(2);
  PhiAutomorphism phi = phi_automorphism(ring, ring.one(), ring.one());
  EXPECT_EQ(phi.matrix, QMatrix::identity(6));
  EXPECT_FALSE(phi.anosov);
}

TEST(Phi, RealEigenvalues) {
  QuadraticRing ring = ring_of_integers(2);
  QuadInt e{1, 1};
  PhiAutomorphism phi = phi_automorphism(ring, e, e);
  EXPECT_TRUE(phi.anosov);
  EXPECT_EQ(phi.expanding, 3u);
  EXPECT_EQ(phi.contracting, 3u);
  std::vector<std::string> texts;
  for (const auto &ev : phi.eigenvalues) texts.push_back(ev.text);
  std::vector<std::string> expected{"1+sqrt2", "1-sqrt2", "1+sqrt2", "1-sqrt2", "3+2sqrt2", "3-2sqrt2"};
  EXPECT_EQ(texts, expected);

  // Floating check of the reported eigenvalues against the matrix.
  Eigen::MatrixXd a(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = phi.matrix(i, j).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<double> numeric, reported;
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(es.eigenvalues()[i].imag(), 0.0, 1e-9);
    numeric.push_back(es.eigenvalues()[i].real());
  }
  for (const auto &ev : phi.eigenvalues) reported.push_back(as_double(2, ev.r, ev.s));
  std::sort(numeric.begin(), numeric.end());
  std::sort(reported.begin(), reported.end());
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(numeric[i], reported[i], 1e-9);
}

TEST(Phi, ImaginaryUnitsHaveModulusOne) {
  QuadraticRing ring = ring_of_integers(-1);
  PhiAutomorphism phi = phi_automorphism(ring, {0, 1}, ring.one());
  EXPECT_FALSE(phi.anosov);
  for (const auto &ev : phi.eigenvalues) EXPECT_EQ(ev.modulus_vs_one, 0);
  QuadraticRing r3 = ring_of_integers(-3);
  PhiAutomorphism phi3 = phi_automorphism(r3, {0, 1}, {-1, 1});
  for (const auto &ev : phi3.eigenvalues) EXPECT_EQ(ev.modulus_vs_one, 0);
}

TEST(Phi, AnosovIffExponentCondition) {
  for (long m : {2L, 3L, 5L, 13L}) {
    QuadraticRing ring = ring_of_integers(m);
    QuadInt e = fundamental_unit(m);
    for (long n = -3; n <= 3; ++n)
      for (long k = -3; k <= 3; ++k)
        for (long sign : {1L, -1L}) {
          QuadInt alpha = ring.pow(e, n);
          if (sign < 0) alpha = ring.neg(alpha);
          PhiAutomorphism phi = phi_automorphism(ring, alpha, ring.pow(e, k));
          EXPECT_EQ(phi.anosov, n * k * (n + k) != 0) << m << " " << n << " " << k;
          if (phi.anosov) EXPECT_EQ(phi.expanding, 3u);
        }
  }
}

TEST(Phi, Composition) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> ex(-3, 3), sg(0, 1);
  for (long m : {2L, 5L, -1L, -3L, 7L}) {
    QuadraticRing ring = ring_of_integers(m);
    QuadInt gen = m > 0 ? fundamental_unit(m) : (m == -1 ? QuadInt{0, 1} : QuadInt{0, 1});
    auto rand_unit = [&]() {
      QuadInt u = ring.pow(gen, ex(rng));
      return sg(rng) ? ring.neg(u) : u;
    };
    for (int t = 0; t < 10; ++t) {
      QuadInt a1 = rand_unit(), b1 = rand_unit(), a2 = rand_unit(), b2 = rand_unit();
      QMatrix lhs = phi_automorphism(ring, a1, b1).matrix * phi_automorphism(ring, a2, b2).matrix;
      QMatrix rhs = phi_automorphism(ring, ring.mul(a1, a2), ring.mul(b1, b2)).matrix;
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Phi, RejectsNonUnits) {
  QuadraticRing ring = ring_of_integers(2);
  EXPECT_THROW(phi_automorphism(ring, {2, 0}, ring.one()), PreconditionError);
  EXPECT_THROW(phi_automorphism(ring, ring.one(), {1, 2}), PreconditionError);
}

TEST(Gamma111, Identity) {
  std::vector<ZVector> zero(3, ZVector{0, 0, 0});
  Gamma111Automorphism f = gamma111_automorphism(ZMatrix::identity(3), zero);
  EXPECT_TRUE(f.relations_hold);
  EXPECT_EQ(f.a, ZMatrix::identity(3));
  for (const auto &[name, el] : f.images) EXPECT_EQ(el.coords, trid_standard_generators()[name].coords) << name;
}

TEST(Gamma111, CofactorImage) {
  std::vector<ZVector> zp{{1, 0, 0}, {0, -2, 0}, {3, 1, 1}};
  Gamma111Automorphism f = gamma111_automorphism(kAnosovB, zp);
  EXPECT_TRUE(f.relations_hold);
  EXPECT_EQ(determinant(kAnosovB), 1);
  // Center matrix is the cofactor matrix, i.e. the inverse transpose here.
  EXPECT_EQ(f.a, cofactor_matrix(kAnosovB));
  EXPECT_EQ(f.a, integer_inverse(kAnosovB).transpose());
  EXPECT_NE(f.a, integer_inverse(kAnosovB));
}

TEST(Gamma111, SignChange) {
  ZMatrix m{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  Gamma111Automorphism f = gamma111_automorphism(m, std::vector<ZVector>(3, ZVector{0, 0, 0}));
  EXPECT_TRUE(f.relations_hold);
  EXPECT_EQ(f.a, (ZMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
}

TEST(Gamma111, RandomUnimodular) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> zc(-3, 3);
  for (int t = 0; t < 30; ++t) {
    ZMatrix b = random_unimodular(rng, 3, 8);
    std::vector<ZVector> zp(3);
    for (auto &z : zp) z = {zc(rng), zc(rng), zc(rng)};
    Gamma111Automorphism f = gamma111_automorphism(b, zp);
    EXPECT_TRUE(f.relations_hold);
    EXPECT_EQ(f.a, determinant(b) * integer_inverse(b).transpose());
    EXPECT_EQ(f.a, cofactor_matrix(b));
  }
}

TEST(Gamma111, Rejects) {
  std::vector<ZVector> zero(3, ZVector{0, 0, 0});
  EXPECT_THROW(gamma111_automorphism(ZMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, zero), PreconditionError);
  EXPECT_THROW(gamma111_automorphism(ZMatrix::identity(2), zero), InputError);
  EXPECT_THROW(gamma111_automorphism(ZMatrix::identity(3), {{0, 0, 0}}), InputError);
}

TEST(CharPoly, AnosovMatrix) {
  CharPolyPair c = char_poly_pair(kAnosovB);
  EXPECT_EQ(c.p_b, (IntPolynomial{-1, -15, 0, 1}));
  EXPECT_EQ(c.p_b.to_string(), "X^3 - 15*X - 1");
  EXPECT_TRUE(is_anosov(kAnosovB));
}

TEST(CharPoly, Identity) {
  CharPolyPair c = char_poly_pair(ZMatrix::identity(3));
  IntPolynomial cube{-1, 3, -3, 1};
  EXPECT_EQ(c.p_b, cube);
  EXPECT_EQ(c.q_a, cube);
  EXPECT_THROW(char_poly_pair(ZMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), PreconditionError);
}

TEST(CharPoly, RandomAgainstDeterminants) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 40; ++t) {
    ZMatrix b = random_unimodular(rng, 3, 10);
    const Integer d = determinant(b);
    CharPolyPair c = char_poly_pair(b);
    ZMatrix a = d * integer_inverse(b).transpose();
    for (long x = -3; x <= 3; ++x) {
      EXPECT_EQ(c.p_b.eval(Integer(x)), det_shift(b, x));
      EXPECT_EQ(c.q_a.eval(Integer(x)), det_shift(a, x));
    }
    EXPECT_EQ(c.p_b.coeff(0), -d);
    EXPECT_EQ(c.q_a.coeff(0), -1);  // product of the eigenvalues of A is 1
    // q_A(X) = -det X^3 p_B(det / X)
    ZVector rev(4);
    for (std::size_t k = 0; k < 4; ++k) {
      Integer dk = (k % 2 == 1) ? d : Integer(1);
      rev[3 - k] = -d * dk * c.p_b.coeff(k);
    }
    EXPECT_EQ(c.q_a, IntPolynomial(rev));
  }
}

TEST(CharPoly, GeneralMatrices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int t = 0; t < 20; ++t) {
    ZMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = e(rng);
    IntPolynomial p = characteristic_polynomial(m);
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(p.eval(Integer(x)), det_shift(m, x));
  }
}

TEST(UnitCircle, Examples) {
  EXPECT_FALSE(has_unit_circle_root(IntPolynomial{-1, -15, 0, 1}));
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{-1, 1}));
  EXPECT_FALSE(has_unit_circle_root(IntPolynomial{1, -3, 1}));
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{1, 0, 1}));
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{2, 1, 2}));
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{1, -1, -1, -1, 1}));  // two roots on the circle
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{1, 1, 1, 1, 1}));
  EXPECT_FALSE(has_unit_circle_root(IntPolynomial{0, 0, 1}));
  EXPECT_FALSE(has_unit_circle_root(IntPolynomial{3}));
  EXPECT_FALSE(has_unit_circle_root(IntPolynomial{1, -3, 1} * IntPolynomial{1, -4, 1}));
  EXPECT_TRUE(has_unit_circle_root(IntPolynomial{1, -3, 1} * IntPolynomial{1, 1, 1}));
  EXPECT_THROW(has_unit_circle_root(IntPolynomial{}), InputError);
}

TEST(UnitCircle, Pieces) {
  EXPECT_EQ(chebyshev_transform(IntPolynomial{1, 0, 1}), (IntPolynomial{0, 1}));
  // z^4 + 1 = z^2 (x^2 - 2)
  EXPECT_EQ(chebyshev_transform(IntPolynomial{1, 0, 0, 0, 1}), (IntPolynomial{-2, 0, 1}));
  EXPECT_THROW(chebyshev_transform(IntPolynomial{1, 2}), InputError);
  EXPECT_EQ(sturm_count(IntPolynomial{-2, 0, 1}, -2, 2), 2u);
  EXPECT_EQ(sturm_count(IntPolynomial{-5, 0, 1}, -2, 2), 0u);
  EXPECT_EQ(sturm_count(IntPolynomial{1, -2, 1}, 0, 2), 1u);
  EXPECT_EQ(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{2, 2}), (IntPolynomial{1, 1}));
  EXPECT_EQ(reciprocal(IntPolynomial{1, 2, 3}), (IntPolynomial{3, 2, 1}));
  EXPECT_EQ(exact_quotient(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}), (IntPolynomial{-1, 1}));
  EXPECT_THROW(exact_quotient(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), PreconditionError);
}

TEST(UnitCircle, AgreesWithFloatingRoots) {
  std::mt19937 rng(1234);
  int positives = 0;
  for (int t = 0; t < 500; ++t) {
    IntPolynomial p = random_polynomial(rng, 4);
    if (p.degree() < 3) p = p * IntPolynomial{2, 0, 1};
    bool exact = has_unit_circle_root(p);
    positives += exact;
    ASSERT_EQ(exact, float_unit_circle(p)) << p.to_string();
  }
  EXPECT_GT(positives, 100);
  EXPECT_LT(positives, 400);
}

TEST(Anosov, Examples) {
  EXPECT_TRUE(is_anosov(kAnosovB));
  EXPECT_FALSE(is_anosov(ZMatrix::identity(3)));
  EXPECT_FALSE(is_anosov(companion(IntPolynomial{-1, 1, -1, 1})));  // (X-1)(X^2+1)
  EXPECT_FALSE(is_anosov(ZMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(is_anosov(ZMatrix::identity(2)), InputError);
}

TEST(Anosov, ConjugationInvariance) {
  std::mt19937 rng(99);
  std::vector<ZMatrix> samples{kAnosovB, ZMatrix::identity(3), companion(IntPolynomial{-1, 1, -1, 1}),
                               companion(IntPolynomial{-1, -3, 0, 1}), companion(IntPolynomial{1, 1, 0, 1})};
  for (int t = 0; t < 10; ++t) samples.push_back(random_unimodular(rng, 3, 12));
  for (const auto &b : samples) {
    bool base = is_anosov(b);
    for (int k = 0; k < 5; ++k) {
      ZMatrix u = random_unimodular(rng, 3, 10);
      EXPECT_EQ(is_anosov(u * b * integer_inverse(u)), base);
    }
  }
}

TEST(Anosov, MatchesFloatingEigenvalues) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    ZMatrix b = random_unimodular(rng, 3, 12);
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = b(i, j).get_d();
    Eigen::EigenSolver<Eigen::Matrix3d> es(a, false);
    bool on_circle = false;
    for (int i = 0; i < 3; ++i) on_circle = on_circle || std::abs(std::abs(es.eigenvalues()[i]) - 1.0) < 1e-9;
    EXPECT_EQ(is_anosov(b), !on_circle);
  }
}

namespace {

QVector fcoords(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  QVector v(n + 1, Rational(0));
  for (auto [i, c] : entries) v[i] = c;
  return v;
}

std::vector<QVector> identity_images(std::size_t n) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(unit_vector(n + 1, i));
  return out;
}

// Homomorphism test on the standard presentation: f(z) f(y_i) f(z)^-1 = f(y_i) f(y_{i+1}).
bool oracle_hom(std::size_t n, const std::vector<QVector> &img) {
  GroupModel g = GroupModel::filiform(standard_filiform_action(n));
  for (std::size_t i = 0; i < n; ++i) {
    QVector lhs = g.multiply(g.multiply(img[n], img[i]), g.inverse(img[n]));
    QVector rhs = i + 1 < n ? g.multiply(img[i], img[i + 1]) : img[i];
    if (lhs != rhs) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (g.multiply(img[i], img[j]) != g.multiply(img[j], img[i])) return false;
  }
  return true;
}

} // namespace

TEST(FiliformAut, Identity) {
  for (std::size_t n : {2u, 3u, 5u}) EXPECT_TRUE(filiform_aut_constraints(n, identity_images(n)).ok);
}

TEST(FiliformAut, CenterTimesY2) {
  auto img = identity_images(3);
  img[3] = fcoords(3, {{1, 1}, {3, 1}});
  FiliformAutCheck c = filiform_aut_constraints(3, img);
  EXPECT_EQ(c.ok, oracle_hom(3, img));
  EXPECT_TRUE(c.ok);
}

TEST(FiliformAut, SignPropagation) {
  auto img = identity_images(3);
  img[1] = fcoords(3, {{1, -1}});
  FiliformAutCheck c = filiform_aut_constraints(3, img);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.failure, FiliformAutFailure::SignPropagation);
  EXPECT_FALSE(oracle_hom(3, img));

  // All signs -1 with z fixed, and alternating signs with z inverted.
  auto neg = identity_images(4);
  for (std::size_t i = 0; i < 4; ++i) neg[i] = fcoords(4, {{i, -1}});
  EXPECT_TRUE(filiform_aut_constraints(4, neg).ok);
  auto alt = identity_images(4);
  for (std::size_t i = 0; i < 4; ++i) alt[i] = fcoords(4, {{i, i % 2 ? -1 : 1}});
  alt[4] = fcoords(4, {{4, -1}});
  FiliformAutCheck ca = filiform_aut_constraints(4, alt);
  EXPECT_EQ(ca.ok, oracle_hom(4, alt));
}

TEST(FiliformAut, Diagnoses) {
  auto img = identity_images(4);
  img[0] = fcoords(4, {{0, 1}, {2, 1}});  // y1 -> y1 y3
  FiliformAutCheck c = filiform_aut_constraints(4, img);
  EXPECT_EQ(c.failure, FiliformAutFailure::Relation);
  EXPECT_TRUE(c.failed_relation.has_value());

  auto leaves = identity_images(3);
  leaves[0] = fcoords(3, {{3, 1}});
  EXPECT_EQ(filiform_aut_constraints(3, leaves).failure, FiliformAutFailure::NotInvariant);
  auto upper = identity_images(3);
  upper[1] = fcoords(3, {{0, 1}, {1, 1}});
  EXPECT_EQ(filiform_aut_constraints(3, upper).failure, FiliformAutFailure::NotTriangular);
  auto zbad = identity_images(3);
  zbad[3] = fcoords(3, {{3, 2}});
  EXPECT_EQ(filiform_aut_constraints(3, zbad).failure, FiliformAutFailure::CenterCoset);

  auto frac = identity_images(3);
  frac[0][0] = Rational(1, 2);
  EXPECT_THROW(filiform_aut_constraints(3, frac), InputError);
  EXPECT_THROW(filiform_aut_constraints(3, identity_images(2)), InputError);
}

TEST(FiliformAut, Words) {
  std::vector<Word> w{{{"y1", 1}}, {{"y2", 1}}, {{"y3", 1}}, {{"z", 1}, {"y3", 2}}};
  EXPECT_TRUE(filiform_aut_constraints(3, w).ok);
  std::vector<Word> bad{{{"y1", 1}}, {{"y2", -1}}, {{"y3", 1}}, {{"z", 1}}};
  EXPECT_FALSE(filiform_aut_constraints(3, bad).ok);
}

TEST(FiliformAut, ExhaustiveAgainstHomomorphismOracle) {
  const std::size_t n = 3;
  std::size_t accepted = 0;
  for (int mask = 0; mask < 27; ++mask)
    for (int signs = 0; signs < 8; ++signs)
      for (int zm = 0; zm < 27; ++zm)
        for (int zs : {1, -1}) {
          std::vector<QVector> img(n + 1, QVector(n + 1, Rational(0)));
          int lower[3] = {mask % 3 - 1, (mask / 3) % 3 - 1, mask / 9 - 1};
          for (std::size_t i = 0; i < n; ++i) img[i][i] = (signs >> i) & 1 ? -1 : 1;
          img[0][1] = lower[0];
          img[0][2] = lower[1];
          img[1][2] = lower[2];
          img[3][0] = zm % 3 - 1;
          img[3][1] = (zm / 3) % 3 - 1;
          img[3][2] = zm / 9 - 1;
          img[3][3] = zs;
          bool ok = filiform_aut_constraints(n, img).ok;
          ASSERT_EQ(ok, oracle_hom(n, img));
          accepted += ok;
        }
  EXPECT_GT(accepted, 0u);
}
