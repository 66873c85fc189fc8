// Seeded random generators for property tests.

#ifndef GLP_TESTS_GENERATORS_HPP
#define GLP_TESTS_GENERATORS_HPP

#include "glp/infinity_types.hpp"
#include "glp/rational.hpp"
#include "glp/weil_real.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace gen {

using glp::InfinityType;
using glp::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  // smallest value >= v with the given parity
  static int lift(int v, int parity) { return glp::mod2(v) == glp::mod2(parity) ? v : v + 1; }

 private:
  std::mt19937_64 eng_;
};

// Random valid infinity type of rank n with |w| <= wmax.
inline InfinityType infinity_type(Rng& rng, int n, int wmax = 6, int kmax = 30) {
  InfinityType t;
  t.n = n;
  t.w = rng.uniform(-wmax, wmax);
  if (n % 2) {
    t.w = Rng::lift(t.w, 0);
    t.sign = rng.uniform(0, 1);
  }
  const int parity = (n % 2) ? 1 : t.w;
  int k = Rng::lift(2, parity);
  std::vector<int> up;
  for (int i = 0; i < n / 2; ++i) {
    if (i) k = Rng::lift(k + 1 + rng.uniform(0, 1) * 2 + rng.uniform(0, kmax / 8), parity);
    up.push_back(k);
  }
  t.kappa.assign(up.rbegin(), up.rend());
  return t;
}

// Random balanced pair on GL(n) x GL(n-1); w(Sigma) always has the parity of n.
inline std::pair<InfinityType, InfinityType> balanced_pair(Rng& rng, int n, int wmax = 6) {
  InfinityType pi{n, {}, rng.uniform(-wmax, wmax), 0};
  InfinityType sigma{n - 1, {}, rng.uniform(-wmax, wmax), 0};
  if (n % 2) {
    pi.w = Rng::lift(pi.w, 0);
    pi.sign = rng.uniform(0, 1);
    sigma.w = Rng::lift(sigma.w, 1);  // delta = w(Sigma) has the parity of n
  } else {
    sigma.w = Rng::lift(sigma.w, 0);
    sigma.sign = rng.uniform(0, 1);
  }
  const int pk = (n % 2) ? 1 : pi.w;
  const int pl = (n % 2) ? sigma.w : 1;
  // Chain from the bottom: for even n, kappa_r < ell_{r-1} < ... < kappa_1; for odd n, ell_r < kappa_r < ...
  const int r = n / 2;
  const int len = (n % 2) ? 2 * r : 2 * r - 1;
  bool is_kappa = (n % 2) == 0;  // type of the bottom entry
  int v = 1;
  std::vector<int> ks, ls;
  for (int i = 0; i < len; ++i) {
    const int parity = is_kappa ? pk : pl;
    v = Rng::lift(i == 0 ? 2 : v + 1 + rng.uniform(0, 3), parity);
    (is_kappa ? ks : ls).push_back(v);
    is_kappa = !is_kappa;
  }
  pi.kappa.assign(ks.rbegin(), ks.rend());
  sigma.kappa.assign(ls.rbegin(), ls.rend());
  return {pi, sigma};
}

inline Rational twist(Rng& rng) { return Rational(rng.uniform(-12, 12), rng.uniform(1, 3)); }

// Canonical ArchRep of dimension <= maxdim.
inline glp::ArchRep arch_rep(Rng& rng, int maxdim = 8) {
  glp::ArchRep a;
  int dim = 0;
  const int target = rng.uniform(1, maxdim);
  while (dim < target) {
    if (dim + 2 <= maxdim && rng.coin()) {
      a += glp::ArchRep::discrete(rng.uniform(2, 9), twist(rng));
      dim += 2;
    } else {
      a += glp::ArchRep::character(rng.uniform(0, 1), twist(rng));
      dim += 1;
    }
  }
  return a;
}

// Random pure dominant weight of length n.
inline std::vector<int> pure_weight(Rng& rng, int n) {
  int c = rng.uniform(-10, 10);
  if (n % 2) c = 2 * (c / 2);
  std::vector<int> mu(n);
  const int r = n / 2;
  // mu_{r-1} >= ceil(c/2) keeps the middle ordered.
  int cur = c >= 0 ? (c + 1) / 2 : -((-c) / 2);
  cur += rng.uniform(0, 4);
  for (int i = r - 1; i >= 0; --i) {
    mu[i] = cur;
    mu[n - 1 - i] = c - cur;
    cur += rng.uniform(0, 4);
  }
  if (n % 2) mu[r] = c / 2;
  return mu;
}

}  // namespace gen

#endif
