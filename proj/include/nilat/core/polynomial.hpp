#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilat/core/rational.hpp"

namespace nilat {

// Multivariate polynomial over Q in a fixed number of variables.
class Poly {
public:
  using Monomial = std::vector<unsigned>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT: constant promotion
  Poly(const Rational &c) {           // NOLINT
    if (c != 0) terms_[Monomial{}] = c;
  }

  static Poly var(std::size_t i) {
    Poly p;
    Monomial m(i + 1, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  const std::map<Monomial, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
      unsigned s = 0;
      for (auto e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  Poly &operator+=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly &operator-=(const Poly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator-(const Poly &a) { return Rational(-1) * a; }

  friend Poly operator*(const Rational &c, const Poly &a) {
    Poly r;
    if (c == 0) return r;
    for (const auto &[m, v] : a.terms_) r.terms_[m] = c * v;
    return r;
  }

  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly r;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

  Rational eval(const QVector &x) const {
    Rational s = 0;
    for (const auto &[m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t *= x.at(i);
      s += t;
    }
    return s;
  }

  // Substitute variable i by subs[i].
  Poly compose(const std::vector<Poly> &subs) const {
    Poly r;
    for (const auto &[m, c] : terms_) {
      Poly t(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t = t * subs.at(i);
      r += t;
    }
    return r;
  }

  // Human-readable form using variable names.
  std::string to_string(const std::vector<std::string> &names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &[m, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      Rational a = abs(c);
      std::string coef = nilat::to_string(a);
      std::string term = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
      if (s.empty())
        s = (c < 0 ? "-" : "") + term;
      else
        s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
  }

private:
  void add_term(Monomial m, const Rational &c) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(std::move(m), c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Monomial, Rational> terms_;
};

using PolyVector = std::vector<Poly>;

} // namespace nilat
