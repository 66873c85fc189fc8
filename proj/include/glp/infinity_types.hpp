#ifndef GLP_INFINITY_TYPES_HPP
#define GLP_INFINITY_TYPES_HPP

#include "glp/errors.hpp"
#include "glp/rational.hpp"
#include "glp/weil_real.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <string>
#include <vector>

namespace glp {

using DominantWeight = std::vector<int>;

// (kappa_1 > ... > kappa_r >= 2; w), plus the sgn bit for odd n.
struct InfinityType {
  int n = 1;
  std::vector<int> kappa;
  int w = 0;
  int sign = 0;

  int r() const { return n / 2; }
  bool odd() const { return n % 2 == 1; }
  friend bool operator==(const InfinityType&, const InfinityType&) = default;
};

inline std::string describe(const InfinityType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.kappa.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.kappa[i]);
  }
  s += "; " + std::to_string(t.w) + ")";
  if (t.odd()) s += t.sign ? " x sgn" : "";
  return s;
}

// Throws DomainError naming the first violated condition.
inline void validate(const InfinityType& t) {
  if (t.n < 1) throw DomainError("rank must be >= 1");
  if (static_cast<int>(t.kappa.size()) != t.r())
    throw DomainError("kappa must have floor(n/2) = " + std::to_string(t.r()) + " entries");
  if (t.sign != 0 && t.sign != 1) throw DomainError("sign must be 0 or 1");
  for (std::size_t i = 0; i + 1 < t.kappa.size(); ++i)
    if (t.kappa[i] <= t.kappa[i + 1]) throw DomainError("kappa must be strictly decreasing");
  if (!t.kappa.empty() && t.kappa.back() < 2) throw DomainError("kappa_r must be >= 2");
  if (t.odd()) {
    if (mod2(t.w) != 0) throw DomainError("w must be even for odd n");
    for (int k : t.kappa)
      if (mod2(k) != 1) throw DomainError("kappa_i must be odd for odd n");
  } else {
    for (int k : t.kappa)
      if (mod2(k) != mod2(t.w)) throw DomainError("kappa_i must have the parity of w for even n");
  }
  if (!t.odd() && t.sign != 0) throw DomainError("sign bit is only meaningful for odd n");
}

inline bool is_valid(const InfinityType& t) {
  try {
    validate(t);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

inline bool is_dominant(const DominantWeight& mu) {
  return std::is_sorted(mu.begin(), mu.end(), [](int a, int b) { return a > b; });
}

inline bool is_pure(const DominantWeight& mu) {
  const std::size_t n = mu.size();
  if (n == 0) return true;
  const int c = mu[0] + mu[n - 1];
  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] + mu[n - 1 - i] != c) return false;
  return true;
}

// mu = -rho_n + v(kappa; w), computed with doubled entries to stay integral.
inline DominantWeight infinity_to_weight(const InfinityType& t) {
  validate(t);
  const int n = t.n, r = t.r();
  std::vector<int> v2(n);  // 2 * v
  for (int i = 0; i < r; ++i) {
    v2[i] = t.kappa[i] - 1 - t.w;
    v2[n - 1 - i] = 1 - t.kappa[i] - t.w;
  }
  if (t.odd()) v2[r] = -t.w;
  DominantWeight mu(n);
  for (int i = 0; i < n; ++i) {
    int two_rho = n - 1 - 2 * i;
    mu[i] = (v2[i] - two_rho) / 2;
  }
  return mu;
}

inline InfinityType weight_to_infinity(const DominantWeight& mu, int sign = 0) {
  if (mu.empty()) throw DomainError("empty weight");
  if (!is_dominant(mu)) throw DomainError("weight is not dominant");
  if (!is_pure(mu)) throw DomainError("weight is not pure");
  const int n = static_cast<int>(mu.size());
  InfinityType t;
  t.n = n;
  t.w = -mu.front() - mu.back();
  t.sign = (n % 2 == 1) ? sign : 0;
  for (int i = 0; i < n / 2; ++i) t.kappa.push_back(2 * mu[i] + t.w + n - 2 * i);
  if (!t.kappa.empty() && t.kappa.back() < 2) throw DomainError("kappa_r < 2: weight outside the cohomological range");
  validate(t);
  if (infinity_to_weight(t) != mu) throw DomainError("weight does not match any infinity type");
  return t;
}

// (-1)^{r + w/2 + sign}
inline int signature(const InfinityType& t) {
  validate(t);
  if (!t.odd()) throw DomainError("signature is defined for odd n only");
  return (mod2(t.r() + t.w / 2 + t.sign) == 0) ? 1 : -1;
}

// Sign of a GL(1) character sgn^delta |.|^u, i.e. the signature of its type (; 2u).
inline int character_sign(int delta, int u) { return mod2(delta + u) == 0 ? 1 : -1; }

inline InfinityType character_type(int delta, int u) { return InfinityType{1, {}, 2 * u, mod2(delta)}; }

inline bool is_balanced(const std::vector<int>& kappa, const std::vector<int>& ell, int n) {
  const int r = n / 2;
  const int expect = (n % 2 == 0) ? r - 1 : r;
  if (static_cast<int>(kappa.size()) != r || static_cast<int>(ell.size()) != expect)
    throw DomainError("kappa/ell lengths do not match ranks n and n-1");
  std::vector<int> chain;
  for (int i = 0; i < r; ++i) {
    chain.push_back(kappa[i]);
    if (i < expect) chain.push_back(ell[i]);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] <= chain[i + 1]) return false;
  return true;
}

inline bool is_balanced(const InfinityType& pi, const InfinityType& sigma) {
  if (sigma.n != pi.n - 1) throw DomainError("balanced pairs need ranks n and n-1");
  return is_balanced(pi.kappa, sigma.kappa, pi.n);
}

struct Regularity {
  bool min_kappa_ok = true;
  int min_gap = INT_MAX;  // INT_MAX when fewer than two entries
  int required_gap = 4;
  bool gap_ok = true;

  bool gap_regular(int k) const { return min_gap >= k; }
  bool ok() const { return min_kappa_ok && gap_ok; }
};

inline Regularity regularity(const InfinityType& t) {
  validate(t);
  Regularity reg;
  if (!t.kappa.empty()) {
    int lo = *std::min_element(t.kappa.begin(), t.kappa.end());
    reg.min_kappa_ok = lo >= (t.odd() ? 5 : 3);
  }
  for (std::size_t i = 0; i < t.kappa.size(); ++i)
    for (std::size_t j = i + 1; j < t.kappa.size(); ++j) reg.min_gap = std::min(reg.min_gap, std::abs(t.kappa[i] - t.kappa[j]));
  reg.required_gap = (t.odd() || mod2(t.w) == 1) ? 4 : 6;
  reg.gap_ok = reg.gap_regular(reg.required_gap);
  return reg;
}

inline ArchRep to_arch_rep(const InfinityType& t) {
  validate(t);
  Rational tw(t.w, 2);
  ArchRep out;
  for (int k : t.kappa) out += ArchRep::discrete(k, tw);
  if (t.odd()) out += ArchRep::character(t.sign, tw);
  return out;
}

// Twist by sgn^delta |.|^u.
inline InfinityType twist(const InfinityType& t, int delta, int u) {
  validate(t);
  InfinityType out = t;
  out.w = t.w + 2 * u;
  if (t.odd()) out.sign = mod2(t.sign + delta);
  return out;
}

// Contragredient: the |.|^{-w} twist.
inline InfinityType dual_type(const InfinityType& t) { return twist(t, 0, -t.w); }

inline int bottom_degree(int n) { return (n * n) / 4; }

}  // namespace glp

#endif
