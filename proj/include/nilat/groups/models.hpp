#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "nilat/core/integer_forms.hpp"
#include "nilat/core/linalg.hpp"
#include "nilat/core/nilpotent.hpp"

namespace nilat {

namespace detail {
template <class T>
T cast_scalar(const Integer &z) {
  if constexpr (std::is_same_v<T, Rational>)
    return Rational(z);
  else if constexpr (std::is_same_v<T, Integer>)
    return z;
  else
    return static_cast<T>(to_long(z));
}

// t(t-1)...(t-k+1)/k!, exact for integer t in integer types.
template <class T>
T binom(const T &t, unsigned k) {
  T b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b = b * (t - T(i));
    b = b / T(i + 1);
  }
  return b;
}
} // namespace detail

// An integer parameter with a cached machine-word copy for the int64 kernels.
struct Param {
  Integer value;
  std::int64_t word = 0;
  Param(const Integer &z = 0) : value(z), word(z.fits_slong_p() ? z.get_si() : 0) {}
  template <class T>
  T as() const {
    if constexpr (std::is_same_v<T, std::int64_t>)
      return word;
    else
      return detail::cast_scalar<T>(value);
  }
};

// Heisenberg group over a rank-2 ring Z[w] with w^2 = p + q w, coordinates
// (x1,x2,y1,y2,z1,z2) for x = x1 + x2 w etc, product (x,y,z)(x',y',z') =
// (x+x', y+y', z+z'+x y').
struct RingHeisenberg {
  Param p, q;

  template <class T>
  void multiply(const T *a, const T *b, T *out) const {
    const T P = p.as<T>(), Q = q.as<T>();
    for (int i = 0; i < 4; ++i) out[i] = a[i] + b[i];
    // (a0 + a1 w)(b2 + b3 w)
    out[4] = a[4] + b[4] + a[0] * b[2] + P * a[1] * b[3];
    out[5] = a[5] + b[5] + a[0] * b[3] + a[1] * b[2] + Q * a[1] * b[3];
  }

  template <class T>
  void inverse(const T *a, T *out) const {
    const T P = p.as<T>(), Q = q.as<T>();
    for (int i = 0; i < 4; ++i) out[i] = -a[i];
    // z' = -z + x y
    out[4] = -a[4] + a[0] * a[2] + P * a[1] * a[3];
    out[5] = -a[5] + a[0] * a[3] + a[1] * a[2] + Q * a[1] * a[3];
  }
};

enum class HeisFormula { SquareRoot, HalfInteger };

struct HeisenbergDual : RingHeisenberg {
  HeisenbergDual() : RingHeisenberg{} {}
};

struct HeisQuad : RingHeisenberg {
  Integer d;
  HeisFormula formula;
  HeisQuad(const Integer &d_, HeisFormula f) : RingHeisenberg{}, d(d_), formula(f) {
    if (f == HeisFormula::SquareRoot) {
      p = Param(d);
      q = Param(0);
    } else {
      require_input(floor_mod(d - 1, 4) == 0, "half-integer formula needs d = 1 mod 4");
      p = Param((d - 1) / 4);
      q = Param(1);
    }
  }
};

// Coordinates (x1,x2,x3,y1,y2,y3), x central.
struct TStarH1 {
  template <class T>
  void multiply(const T *a, const T *b, T *out) const {
    out[0] = a[0] + b[0] + a[4] * b[5];
    out[1] = a[1] + b[1] + a[5] * b[3];
    out[2] = a[2] + b[2] + a[3] * b[4];
    for (int i = 3; i < 6; ++i) out[i] = a[i] + b[i];
  }
  template <class T>
  void inverse(const T *a, T *out) const {
    out[0] = -a[0] + a[4] * a[5];
    out[1] = -a[1] + a[5] * a[3];
    out[2] = -a[2] + a[3] * a[4];
    for (int i = 3; i < 6; ++i) out[i] = -a[i];
  }
};

// Coordinates (a1,a2,a3,b1,b2,b3), a central.
struct TriD {
  std::array<Param, 3> d;
  template <class T>
  void multiply(const T *a, const T *b, T *out) const {
    const T d1 = d[0].as<T>(), d2 = d[1].as<T>(), d3 = d[2].as<T>();
    out[0] = a[0] + b[0] + d1 * a[4] * b[5];
    out[1] = a[1] + b[1] + d2 * a[5] * b[3];
    out[2] = a[2] + b[2] + d3 * a[3] * b[4];
    for (int i = 3; i < 6; ++i) out[i] = a[i] + b[i];
  }
  template <class T>
  void inverse(const T *a, T *out) const {
    const T d1 = d[0].as<T>(), d2 = d[1].as<T>(), d3 = d[2].as<T>();
    out[0] = -a[0] + d1 * a[4] * a[5];
    out[1] = -a[1] + d2 * a[5] * a[3];
    out[2] = -a[2] + d3 * a[3] * a[4];
    for (int i = 3; i < 6; ++i) out[i] = -a[i];
  }
};

// L x Z-like semidirect model (v, t)(v', t') = (v + g^t v', t + t') with
// g^t = sum_k binom(t, k) (g - I)^k; coordinates (v_1..v_n, t).
struct Filiform {
  ZMatrix g;
  std::vector<ZMatrix> npow;  // (g - I)^k for k = 1.. until zero
  // g^t for |t| <= kTableRange as flattened machine words, empty when entries overflow
  static constexpr std::int64_t kTableRange = 32;
  std::vector<std::int64_t> table64;

  explicit Filiform(ZMatrix g_) : g(std::move(g_)) {
    require_input(is_lower_unitriangular(g), "filiform action must be lower unitriangular");
    const std::size_t n = g.rows();
    ZMatrix N = g - ZMatrix::identity(n);
    require_input(n < 2 || !power(N, static_cast<unsigned>(n - 1)).is_zero(),
                  "filiform action must have (g - I)^(n-1) != 0");
    ZMatrix pw = N;
    while (!pw.is_zero()) {
      npow.push_back(pw);
      pw = pw * N;
    }
    for (std::int64_t t = -kTableRange; t <= kTableRange; ++t) {
      ZMatrix gt = ZMatrix::identity(n);
      for (std::size_t k = 0; k < npow.size(); ++k)
        gt = gt + to_integer(binomial(Rational(t), static_cast<unsigned>(k + 1))) * npow[k];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!gt(i, j).fits_slong_p()) {
            table64.clear();
            return;
          }
          table64.push_back(gt(i, j).get_si());
        }
    }
  }
  std::size_t n() const { return g.rows(); }

  // out = g^t v
  template <class T>
  void act(const T &t, const T *v, T *out) const {
    const std::size_t N = n();
    if constexpr (std::is_same_v<T, std::int64_t>) {
      if (!table64.empty() && t >= -kTableRange && t <= kTableRange) {
        const std::int64_t *m = &table64[static_cast<std::size_t>(t + kTableRange) * N * N];
        for (std::size_t i = 0; i < N; ++i) {
          T acc = v[i];
          for (std::size_t j = 0; j < i; ++j) acc += m[i * N + j] * v[j];
          out[i] = acc;
        }
        return;
      }
    }
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
    T c = 1;
    for (std::size_t k = 0; k < npow.size(); ++k) {
      c = c * (t - T(static_cast<long>(k))) / T(static_cast<long>(k + 1));
      if (c == 0) break;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const Integer &e = npow[k](i, j);
          if (e != 0) out[i] += c * detail::cast_scalar<T>(e) * v[j];
        }
    }
  }

  // Buffers must not alias.
  template <class T>
  void multiply(const T *a, const T *b, T *out) const {
    const std::size_t N = n();
    act<T>(a[N], b, out);
    for (std::size_t i = 0; i < N; ++i) out[i] += a[i];
    out[N] = a[N] + b[N];
  }
  template <class T>
  void inverse(const T *a, T *out) const {
    const std::size_t N = n();
    T mt = -a[N];
    act<T>(mt, a, out);
    for (std::size_t i = 0; i < N; ++i) out[i] = -out[i];
    out[N] = mt;
  }
};

// Coordinates (x1,x2,x3,y1,y2,y3), y central, y_j += x_k x'_l for (j,k,l) cyclic.
struct Example5G {
  template <class T>
  void multiply(const T *a, const T *b, T *out) const {
    for (int i = 0; i < 3; ++i) out[i] = a[i] + b[i];
    out[3] = a[3] + b[3] + a[1] * b[2];
    out[4] = a[4] + b[4] + a[2] * b[0];
    out[5] = a[5] + b[5] + a[0] * b[1];
  }
  template <class T>
  void inverse(const T *a, T *out) const {
    for (int i = 0; i < 3; ++i) out[i] = -a[i];
    out[3] = -a[3] + a[1] * a[2];
    out[4] = -a[4] + a[2] * a[0];
    out[5] = -a[5] + a[0] * a[1];
  }
};

class GroupModel {
public:
  using Variant = std::variant<HeisenbergDual, HeisQuad, TStarH1, TriD, Filiform, Example5G>;

  explicit GroupModel(Variant v) : v_(std::move(v)) {}

  static GroupModel heisenberg_dual() { return GroupModel(HeisenbergDual{}); }
  static GroupModel heis_quad(const Integer &d) {
    require_input(d != 0, "HeisQuad needs d != 0");
    HeisFormula f = floor_mod(d, 4) == 1 ? HeisFormula::HalfInteger : HeisFormula::SquareRoot;
    return GroupModel(HeisQuad(d, f));
  }
  static GroupModel heis_quad(const Integer &d, HeisFormula f) { return GroupModel(HeisQuad(d, f)); }
  static GroupModel tstar_h1() { return GroupModel(TStarH1{}); }
  static GroupModel trid(const Integer &d1, const Integer &d2, const Integer &d3) {
    require_input(d1 >= 1 && divides(d1, d2) && divides(d2, d3) && d2 > 0 && d3 > 0,
                  "TriD needs 1 <= d1 | d2 | d3");
    return GroupModel(TriD{{Param(d1), Param(d2), Param(d3)}});
  }
  static GroupModel filiform(const ZMatrix &g) { return GroupModel(Filiform(g)); }
  static GroupModel example5() { return GroupModel(Example5G{}); }

  const Variant &variant() const { return v_; }

  std::string kind() const {
    static const char *names[] = {"HeisenbergDual", "HeisQuad", "TStarH1", "TriD", "Filiform", "Example5G"};
    return names[v_.index()];
  }

  std::size_t dimension() const {
    if (auto f = std::get_if<Filiform>(&v_)) return f->n() + 1;
    return 6;
  }

  template <class T>
  std::vector<T> multiply(const std::vector<T> &a, const std::vector<T> &b) const {
    require_input(a.size() == dimension() && b.size() == dimension(), "element does not belong to this model");
    std::vector<T> out(dimension());
    std::visit([&](const auto &m) { m.template multiply<T>(a.data(), b.data(), out.data()); }, v_);
    return out;
  }

  template <class T>
  std::vector<T> inverse(const std::vector<T> &a) const {
    require_input(a.size() == dimension(), "element does not belong to this model");
    std::vector<T> out(dimension());
    std::visit([&](const auto &m) { m.template inverse<T>(a.data(), out.data()); }, v_);
    return out;
  }

  template <class T>
  std::vector<T> identity() const {
    return std::vector<T>(dimension(), T(0));
  }

  template <class T>
  std::vector<T> power(const std::vector<T> &a, long k) const {
    std::vector<T> base = k < 0 ? inverse(a) : a;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    std::vector<T> r = identity<T>();
    while (e) {
      if (e & 1ul) r = multiply(r, base);
      e >>= 1;
      if (e) base = multiply(base, base);
    }
    return r;
  }

  // <g, h> = g^-1 h^-1 g h
  template <class T>
  std::vector<T> commutator(const std::vector<T> &g, const std::vector<T> &h) const {
    return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
  }

private:
  Variant v_;
};

// model names the GroupModel kind the element was built for; empty means untagged.
struct GroupElement {
  QVector coords;
  std::string model;
  friend bool operator==(const GroupElement &a, const GroupElement &b) { return a.coords == b.coords; }
};

inline void check_membership(const GroupModel &m, const GroupElement &a) {
  require_input(a.model.empty() || a.model == m.kind(), "element of " + a.model + " used with " + m.kind());
  require_input(a.coords.size() == m.dimension(), "element does not belong to this model");
}

inline GroupElement multiply(const GroupModel &m, const GroupElement &a, const GroupElement &b) {
  check_membership(m, a);
  check_membership(m, b);
  return {m.multiply(a.coords, b.coords), m.kind()};
}

inline GroupElement inverse(const GroupModel &m, const GroupElement &a) {
  check_membership(m, a);
  return {m.inverse(a.coords), m.kind()};
}

// g^p for a unitriangular integer matrix, any integer p.
inline ZMatrix filiform_action_power(const ZMatrix &g, long p) {
  require_input(g.square(), "action must be square");
  ZMatrix N = g - ZMatrix::identity(g.rows());
  require(is_nilpotent_matrix(to_rational(N)), "action must be unipotent");
  ZMatrix r = ZMatrix::identity(g.rows());
  ZMatrix pw = N;
  for (unsigned k = 1; !pw.is_zero(); ++k) {
    r = r + detail::binom<Integer>(Integer(p), k) * pw;
    pw = pw * N;
  }
  return r;
}

// Exponential coordinates for Example5G: exp(a, b) = (a, b_j + a_k a_l / 2).
inline GroupElement example5_exp(const QVector &x) {
  require_input(x.size() == 6, "the cyclic algebra has dimension 6");
  QVector g = x;
  g[3] += x[1] * x[2] / 2;
  g[4] += x[2] * x[0] / 2;
  g[5] += x[0] * x[1] / 2;
  return {g, "Example5G"};
}

inline QVector example5_log(const GroupElement &s) {
  require_input(s.coords.size() == 6, "the cyclic group has dimension 6");
  QVector x = s.coords;
  x[3] -= x[1] * x[2] / 2;
  x[4] -= x[2] * x[0] / 2;
  x[5] -= x[0] * x[1] / 2;
  return x;
}

} // namespace nilat
