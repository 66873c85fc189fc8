#ifndef GLP_ARCH_L_HPP
#define GLP_ARCH_L_HPP

#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/rational.hpp"
#include "glp/weil_real.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <string>
#include <vector>

namespace glp {

struct GammaFactor {
  char kind = 'R';  // 'R' or 'C'
  Rational shift{0};

  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
  friend bool operator<(const GammaFactor& a, const GammaFactor& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.shift < b.shift;
  }
};

// Formal product of Gamma_R(s + a) and Gamma_C(s + b).
struct GammaProduct {
  std::vector<GammaFactor> factors;

  GammaProduct& operator*=(const GammaProduct& o) {
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    std::sort(factors.begin(), factors.end());
    return *this;
  }
  friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;
};

inline GammaProduct l_factor(const ArchRep& a) {
  GammaProduct g;
  for (const auto& c : a.characters()) g.factors.push_back({'R', c.twist + c.sign});
  for (const auto& d : a.discretes()) g.factors.push_back({'C', d.twist + Rational(d.kappa - 1, 2)});
  std::sort(g.factors.begin(), g.factors.end());
  return g;
}

inline bool has_pole_at(const GammaFactor& f, const Rational& s0) {
  Rational x = s0 + f.shift;
  if (!is_integer(x) || x > 0) return false;
  return f.kind == 'C' || mod2(x.numerator()) == 0;
}

inline bool is_holomorphic_at(const GammaProduct& g, const Rational& s0) {
  return std::none_of(g.factors.begin(), g.factors.end(), [&](const GammaFactor& f) { return has_pole_at(f, s0); });
}

// Class of epsilon(0, a, psi) in C^x / Q^x, as the parity of the power of i.
inline int epsilon_class(const ArchRep& a) {
  int p = 0;
  for (const auto& c : a.characters()) p += c.sign;
  for (const auto& d : a.discretes()) p += d.kappa;
  return mod2(p);
}

inline ArchRep pair_parameter(const InfinityType& pi, const InfinityType& sigma) {
  return tensor(to_arch_rep(pi), to_arch_rep(sigma));
}

// Critical points of L(s, param) in offset + Z. Throws when the set is unbounded,
// which happens exactly when no Gamma_C factor sits on the candidate lattice.
inline std::vector<Rational> critical_points(const ArchRep& param, const Rational& offset) {
  const GammaProduct g = l_factor(param);
  const GammaProduct gd = l_factor(dual(param));
  bool bounded = false;
  std::int64_t reach = 0;
  for (const auto* prod : {&g, &gd}) {
    for (const auto& f : prod->factors) {
      if (f.kind == 'C' && is_integer(offset + f.shift)) bounded = true;
      reach = std::max<std::int64_t>(reach, ceil_int(f.shift < 0 ? -f.shift : f.shift));
    }
  }
  if (!bounded) throw DomainError("critical set is unbounded (no Gamma_C factor on the candidate lattice)");
  std::vector<Rational> out;
  for (std::int64_t k = -reach - 2; k <= reach + 2; ++k) {
    Rational s = offset + k;
    if (is_holomorphic_at(g, s) && is_holomorphic_at(gd, 1 - s)) out.push_back(s);
  }
  return out;
}

inline Rational candidate_offset(int n, int nprime) { return Rational(mod2(n + nprime), 2); }

inline std::vector<Rational> critical_points(const InfinityType& pi, const InfinityType& sigma) {
  return critical_points(pair_parameter(pi, sigma), candidate_offset(pi.n, sigma.n));
}

inline Rational central_point(const InfinityType& pi, const InfinityType& sigma) {
  return Rational(1 - pi.w - sigma.w, 2);
}

inline int kappa_distance(const InfinityType& pi, const InfinityType& sigma) {
  int d = INT_MAX;
  for (int k : pi.kappa) {
    for (int l : sigma.kappa) d = std::min(d, std::abs(k - l));
    if (sigma.odd()) d = std::min(d, std::abs(k - 1));
  }
  return d;
}

struct HalfIntegerRange {
  Rational lo{0}, hi{0};
  Rational offset{0};  // points lie in offset + Z

  std::vector<Rational> points() const {
    std::vector<Rational> out;
    for (std::int64_t k = ceil_int(lo - offset); offset + k <= hi; ++k) out.push_back(offset + k);
    return out;
  }
  bool empty() const { return points().empty(); }
};

inline HalfIntegerRange critical_range_closed_form(const InfinityType& pi, const InfinityType& sigma) {
  validate(pi);
  validate(sigma);
  if (pi.odd()) throw DomainError("closed-form critical range needs n even");
  const int d = kappa_distance(pi, sigma);
  const int wu = pi.w + sigma.w;
  return {Rational(2 - wu - d, 2), Rational(-wu + d, 2), Rational(mod2(sigma.n), 2)};
}

inline bool central_point_is_critical(const InfinityType& pi, const InfinityType& sigma) {
  if (pi.odd()) {
    auto pts = critical_points(pi, sigma);
    return std::find(pts.begin(), pts.end(), central_point(pi, sigma)) != pts.end();
  }
  const int d = kappa_distance(pi, sigma);
  return d >= 1 && mod2(pi.w + sigma.w) == mod2(pi.n + sigma.n + 1);
}

inline bool is_critical(const InfinityType& pi, const InfinityType& sigma, const Rational& s) {
  auto pts = critical_points(pi, sigma);
  return std::find(pts.begin(), pts.end(), s) != pts.end();
}

inline std::string to_string(const GammaProduct& g) {
  if (g.factors.empty()) return "1";
  std::string s;
  for (const auto& f : g.factors) {
    if (!s.empty()) s += " * ";
    s += std::string("Gamma_") + f.kind + "(s";
    if (f.shift > 0) s += " + " + to_string(f.shift);
    if (f.shift < 0) s += " - " + to_string(-f.shift);
    s += ")";
  }
  return s;
}

}  // namespace glp

#endif
