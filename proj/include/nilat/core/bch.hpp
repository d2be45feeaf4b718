#pragma once

#include <functional>

#include "nilat/core/lie_algebra.hpp"

namespace nilat {

// log(exp x exp y) via Dynkin's formula, truncated at total degree `order`
// (the nilpotency class suffices for a nilpotent algebra). Works for
// coordinate vectors over any ring S containing Q (Rational or Poly).
template <class S>
std::vector<S> bch(const LieAlgebra &L, const std::vector<S> &x, const std::vector<S> &y, unsigned order) {
  const std::size_t n = L.dim();
  std::vector<S> result(n, S(0));
  auto axpy = [&](std::vector<S> &acc, const Rational &c, const std::vector<S> &v) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += c * v[i];
  };
  // word letters: 0 = x, 1 = y
  std::vector<int> word;
  std::vector<std::pair<unsigned, unsigned>> blocks;
  std::function<void(unsigned)> rec = [&](unsigned used) {
    if (!blocks.empty()) {
      // right-normed bracket [w1,[w2,[...,wm]]]
      const std::size_t m = word.size();
      bool zero = m >= 2 && word[m - 1] == word[m - 2];
      if (!zero) {
        std::vector<S> acc = word[m - 1] == 0 ? x : y;
        for (std::size_t p = m - 1; p-- > 0;) acc = L.bracket(word[p] == 0 ? x : y, acc);
        Rational denom = Rational(static_cast<long>(blocks.size())) * Rational(static_cast<long>(m));
        for (auto [r, s] : blocks) denom *= factorial(r) * factorial(s);
        Rational coef = (blocks.size() % 2 == 1 ? Rational(1) : Rational(-1)) / denom;
        axpy(result, coef, acc);
      }
    }
    for (unsigned r = 0; used + r <= order; ++r)
      for (unsigned s = 0; used + r + s <= order; ++s) {
        if (r + s == 0) continue;
        blocks.emplace_back(r, s);
        for (unsigned k = 0; k < r; ++k) word.push_back(0);
        for (unsigned k = 0; k < s; ++k) word.push_back(1);
        rec(used + r + s);
        word.resize(word.size() - r - s);
        blocks.pop_back();
      }
  };
  rec(0);
  return result;
}

} // namespace nilat
