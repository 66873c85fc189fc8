// Independent reference computations used by the tests.
//
// The Weil-group oracle models a representation by an explicit basis of C^x weight
// vectors together with the action of j as a signed permutation. Tensor, Sym^2 and
// wedge^2 are then computed on bases, never through the phi_k decomposition rules.

#ifndef GLP_TESTS_ORACLES_HPP
#define GLP_TESTS_ORACLES_HPP

#include "glp/arch_l.hpp"
#include "glp/infinity_types.hpp"
#include "glp/rational.hpp"
#include "glp/weil_real.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using glp::Rational;

// Basis vector e_k: z acts by z^p zbar^q, and j e_k = sign * e_{target}.
struct Vec {
  Rational p, q;
  int target;
  int sign;
};

using Model = std::vector<Vec>;

inline Model model_of(const glp::ArchRep& a) {
  Model m;
  for (const auto& c : a.characters()) {
    int k = static_cast<int>(m.size());
    m.push_back({c.twist, c.twist, k, c.sign ? -1 : 1});
  }
  for (const auto& d : a.discretes()) {
    int k = static_cast<int>(m.size());
    Rational h(d.kappa - 1, 2);
    // j e1 = e2, j e2 = j^2 e1 = (-1)^{kappa-1} e1
    m.push_back({d.twist + h, d.twist - h, k + 1, 1});
    m.push_back({d.twist - h, d.twist + h, k, (d.kappa - 1) % 2 ? -1 : 1});
  }
  return m;
}

inline Model tensor(const Model& a, const Model& b) {
  Model m;
  const int nb = static_cast<int>(b.size());
  for (const auto& x : a)
    for (const auto& y : b) m.push_back({x.p + y.p, x.q + y.q, x.target * nb + y.target, x.sign * y.sign});
  return m;
}

// Symmetric (sym = true) or alternating square on basis pairs i <= j (i < j).
inline Model square(const Model& a, bool sym) {
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = sym ? i : i + 1; j < n; ++j) {
      index[{i, j}] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  Model m;
  for (const auto& [i, j] : pairs) {
    int ti = a[i].target, tj = a[j].target;
    int s = a[i].sign * a[j].sign;
    if (ti > tj) {
      std::swap(ti, tj);
      if (!sym) s = -s;
    }
    m.push_back({a[i].p + a[j].p, a[i].q + a[j].q, index.at({ti, tj}), s});
  }
  return m;
}

// Restriction-side data: sorted weight pairs, plus sorted sign bits of the j-action
// on the characters (lines with p == q).
struct Restriction {
  std::vector<std::pair<Rational, Rational>> weights;
  std::vector<std::pair<Rational, int>> characters;  // (twist, sign bit)

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

inline Restriction restrict(const Model& m) {
  Restriction r;
  for (const auto& v : m) r.weights.emplace_back(v.p, v.q);
  std::vector<bool> seen(m.size(), false);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (seen[k] || m[k].p != m[k].q) continue;
    seen[k] = true;
    if (m[k].target == static_cast<int>(k)) {
      r.characters.emplace_back(m[k].p, m[k].sign < 0 ? 1 : 0);
    } else {
      // j swaps two lines of the same weight with j^2 = 1: eigenvalues +1 and -1.
      seen[m[k].target] = true;
      r.characters.emplace_back(m[k].p, 0);
      r.characters.emplace_back(m[k].p, 1);
    }
  }
  std::sort(r.weights.begin(), r.weights.end());
  std::sort(r.characters.begin(), r.characters.end());
  return r;
}

inline Restriction restrict(const glp::ArchRep& a) {
  Restriction r;
  r.weights = glp::restrict_to_C(a);
  for (const auto& c : a.characters()) r.characters.emplace_back(c.twist, c.sign);
  std::sort(r.characters.begin(), r.characters.end());
  return r;
}

// Gamma factors read off the restriction: Gamma_R(s + t + delta) per character,
// Gamma_C(s + max(p, q)) per off-diagonal pair.
inline std::vector<std::pair<char, Rational>> gamma_shifts(const Restriction& r) {
  std::vector<std::pair<char, Rational>> out;
  for (const auto& [t, d] : r.characters) out.emplace_back('R', t + d);
  for (const auto& [p, q] : r.weights)
    if (p > q) out.emplace_back('C', p);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool pole(char kind, const Rational& shift, const Rational& s) {
  Rational x = s + shift;
  if (x.denominator() != 1 || x.numerator() > 0) return false;
  return kind == 'C' || x.numerator() % 2 == 0;
}

inline bool holomorphic(const std::vector<std::pair<char, Rational>>& g, const Rational& s) {
  for (const auto& [k, t] : g)
    if (pole(k, t, s)) return false;
  return true;
}

// Critical points by scanning a wide window of offset + Z.
inline std::vector<Rational> critical_scan(const glp::InfinityType& pi, const glp::InfinityType& sigma,
                                           int radius = 80) {
  const Model m = tensor(model_of(glp::to_arch_rep(pi)), model_of(glp::to_arch_rep(sigma)));
  const auto r = restrict(m);
  Restriction rd;
  for (const auto& [p, q] : r.weights) rd.weights.emplace_back(-p, -q);
  for (const auto& [t, d] : r.characters) rd.characters.emplace_back(-t, d);
  const auto g = gamma_shifts(r), gd = gamma_shifts(rd);
  const Rational offset((pi.n + sigma.n) % 2, 2);
  std::vector<Rational> out;
  for (int k = -radius; k <= radius; ++k) {
    Rational s = offset + k;
    if (holomorphic(g, s) && holomorphic(gd, 1 - s)) out.push_back(s);
  }
  return out;
}

// mu = v(kappa; w) - rho with rho_i = (n+1)/2 - i, computed in rationals.
inline std::vector<Rational> weight_of(const glp::InfinityType& t) {
  const int n = t.n, r = n / 2;
  std::vector<Rational> v(n);
  for (int i = 0; i < r; ++i) {
    v[i] = Rational(t.kappa[i] - 1, 2) - Rational(t.w, 2);
    v[n - 1 - i] = Rational(1 - t.kappa[i], 2) - Rational(t.w, 2);
  }
  if (n % 2) v[r] = Rational(-t.w, 2);
  for (int i = 0; i < n; ++i) v[i] -= Rational(n + 1, 2) - (i + 1);
  return v;
}

}  // namespace oracle

#endif
