#ifndef GLP_YOSHIDA_HPP
#define GLP_YOSHIDA_HPP

#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/period_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace glp {

// {a; (k+, k-)}
struct AdmissibleTypeTag {
  std::vector<int> a;
  int kplus = 0;
  int kminus = 0;

  friend bool operator==(const AdmissibleTypeTag&, const AdmissibleTypeTag&) = default;
};

inline AdmissibleTypeTag zero_type(int n) { return {std::vector<int>(n, 0), 0, 0}; }

inline AdmissibleTypeTag& accumulate(AdmissibleTypeTag& acc, const AdmissibleTypeTag& t, int times) {
  if (acc.a.size() != t.a.size()) throw DomainError("type tags of different rank");
  for (std::size_t j = 0; j < acc.a.size(); ++j) acc.a[j] += times * t.a[j];
  acc.kplus += times * t.kplus;
  acc.kminus += times * t.kminus;
  return acc;
}

inline std::string to_string(const AdmissibleTypeTag& t) {
  std::string s = "{(";
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(t.a[j]);
  }
  return s + ");(" + std::to_string(t.kplus) + "," + std::to_string(t.kminus) + ")}";
}

enum class Generator { Det, FPlus, FMinus, Fi };

inline void check_signature_split(int n, int dplus, int dminus) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (dplus < 0 || dminus < 0 || dplus + dminus != n) throw DomainError("d+ + d- must equal n");
  if (std::abs(dplus - dminus) > 1) throw DomainError("|d+ - d-| must be <= 1");
}

inline AdmissibleTypeTag generator_type(Generator g, int n, int dplus, int dminus, int i = 0) {
  check_signature_split(n, dplus, dminus);
  AdmissibleTypeTag t = zero_type(n);
  switch (g) {
    case Generator::Det:
      std::fill(t.a.begin(), t.a.end(), 1);
      t.kplus = t.kminus = 1;
      break;
    case Generator::FPlus:
      std::fill(t.a.begin(), t.a.begin() + dplus, 1);
      t.kplus = 1;
      break;
    case Generator::FMinus:
      std::fill(t.a.begin(), t.a.begin() + dminus, 1);
      t.kminus = 1;
      break;
    case Generator::Fi:
      if (i < 1 || i > n / 2 - 1)
        throw DomainError("f_i needs 1 <= i <= floor(n/2)-1, got i=" + std::to_string(i) + " for n=" + std::to_string(n));
      std::fill(t.a.begin(), t.a.begin() + i, 2);
      std::fill(t.a.begin() + i, t.a.end() - i, 1);
      t.kplus = t.kminus = 1;
      break;
  }
  return t;
}

// det^m0 * prod f_i^{m_i} * (f+)^{m+} * (f-)^{m-}
struct FundamentalMonomial {
  int n = 1;
  int dplus = 1, dminus = 0;
  int m0 = 0;
  std::vector<int> mi;
  int mplus = 0, mminus = 0;

  friend bool operator==(const FundamentalMonomial&, const FundamentalMonomial&) = default;
};

inline int fi_count(int n) { return std::max(0, n / 2 - 1); }

inline void validate(const FundamentalMonomial& m) {
  check_signature_split(m.n, m.dplus, m.dminus);
  if (static_cast<int>(m.mi.size()) != fi_count(m.n))
    throw DomainError("f_i exponent vector must have floor(n/2)-1 = " + std::to_string(fi_count(m.n)) + " entries");
}

inline FundamentalMonomial unit_monomial(int n, int dplus, int dminus) {
  FundamentalMonomial m{n, dplus, dminus, 0, std::vector<int>(fi_count(n), 0), 0, 0};
  validate(m);
  return m;
}

inline bool is_unit(const FundamentalMonomial& m) {
  return m.m0 == 0 && m.mplus == 0 && m.mminus == 0 &&
         std::all_of(m.mi.begin(), m.mi.end(), [](int e) { return e == 0; });
}

inline FundamentalMonomial operator*(const FundamentalMonomial& x, const FundamentalMonomial& y) {
  validate(x);
  validate(y);
  if (x.n != y.n || x.dplus != y.dplus) throw DomainError("monomials over different signature splits");
  FundamentalMonomial out = x;
  out.m0 += y.m0;
  for (std::size_t j = 0; j < out.mi.size(); ++j) out.mi[j] += y.mi[j];
  out.mplus += y.mplus;
  out.mminus += y.mminus;
  return out;
}

inline AdmissibleTypeTag monomial_type(const FundamentalMonomial& m) {
  validate(m);
  AdmissibleTypeTag t = zero_type(m.n);
  accumulate(t, generator_type(Generator::Det, m.n, m.dplus, m.dminus), m.m0);
  for (int i = 1; i <= fi_count(m.n); ++i)
    accumulate(t, generator_type(Generator::Fi, m.n, m.dplus, m.dminus, i), m.mi[i - 1]);
  accumulate(t, generator_type(Generator::FPlus, m.n, m.dplus, m.dminus), m.mplus);
  accumulate(t, generator_type(Generator::FMinus, m.n, m.dplus, m.dminus), m.mminus);
  return t;
}

inline FundamentalMonomial dual_monomial(const FundamentalMonomial& m) {
  validate(m);
  FundamentalMonomial out = m;
  std::swap(out.mplus, out.mminus);
  return out;
}

// eps = +1/-1 for even n, 0 for odd n. d+/d- default to the even split, or (r+1, r) for odd n.
inline FundamentalMonomial f_bw(int n, int eps, int dplus = -1, int dminus = -1) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (dplus < 0 || dminus < 0) {
    dplus = (n + 1) / 2;
    dminus = n / 2;
  }
  FundamentalMonomial m = unit_monomial(n, dplus, dminus);
  if (n == 1) return m;
  std::fill(m.mi.begin(), m.mi.end(), 1);
  if (n % 2 == 0) {
    if (eps != 1 && eps != -1) throw DomainError("f_BW needs eps = +1 or -1 for even n");
    (eps > 0 ? m.mplus : m.mminus) = 1;
  } else {
    if (eps != 0) throw DomainError("f_BW takes no sign for odd n > 1");
    m.mplus = m.mminus = 1;
  }
  return m;
}

inline std::string to_string(const FundamentalMonomial& m) {
  std::string s;
  auto put = [&](const std::string& g, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += g;
    if (e != 1) s += "^" + std::to_string(e);
  };
  put("det", m.m0);
  for (std::size_t j = 0; j < m.mi.size(); ++j) put("f_" + std::to_string(j + 1), m.mi[j]);
  put("f+", m.mplus);
  put("f-", m.mminus);
  return s.empty() ? "1" : s;
}

struct MotiveShape {
  std::string label = "M";
  int n = 1;
  int weight = 0;
  std::vector<int> kappa;
  int dplus = 1, dminus = 0;

  bool has_middle() const { return n % 2 == 1; }
  friend bool operator==(const MotiveShape&, const MotiveShape&) = default;
};

inline void validate(const MotiveShape& M) {
  if (M.label.empty()) throw DomainError("motive label must be nonempty");
  check_signature_split(M.n, M.dplus, M.dminus);
  if (static_cast<int>(M.kappa.size()) != M.n / 2) throw DomainError("kappa must have floor(n/2) entries");
  for (std::size_t i = 0; i + 1 < M.kappa.size(); ++i)
    if (M.kappa[i] <= M.kappa[i + 1]) throw DomainError("kappa must be strictly decreasing");
  for (int k : M.kappa) {
    if (k < 2) throw DomainError("kappa entries must be >= 2");
    if (mod2(k) != mod2(M.weight + 1)) throw DomainError("kappa_i + weight must be odd");
  }
  if (M.has_middle() && mod2(M.weight) != 0) throw DomainError("odd rank needs even weight");
}

using HodgeType = std::pair<int, int>;

inline std::vector<HodgeType> hodge_types(const MotiveShape& M) {
  validate(M);
  std::vector<HodgeType> out;
  for (int k : M.kappa) {
    int p = (1 - k + M.weight) / 2, q = (k - 1 + M.weight) / 2;
    out.emplace_back(p, q);
    out.emplace_back(q, p);
  }
  if (M.has_middle()) out.emplace_back(M.weight / 2, M.weight / 2);
  std::sort(out.begin(), out.end());
  return out;
}

inline MotiveShape motive_from_infinity(const InfinityType& t, const std::string& label = "M") {
  validate(t);
  MotiveShape M;
  M.label = label;
  M.n = t.n;
  M.weight = -t.w - t.n + 1;
  M.kappa = t.kappa;
  if (t.odd()) {
    const int s = signature(t);
    M.dplus = t.r() + (s > 0 ? 1 : 0);
    M.dminus = t.r() + (s > 0 ? 0 : 1);
  } else {
    M.dplus = M.dminus = t.r();
  }
  validate(M);
  return M;
}

// Labels: tensor factors joined by "(x)", duals marked by a trailing "^v".
inline const std::string kTensorSep = "(x)";

inline std::string tensor_label(const std::string& a, const std::string& b) { return a + kTensorSep + b; }

inline std::string dual_label(const std::string& label) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = label.find(kTensorSep, start);
    std::string tok = label.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.size() >= 2 && tok.compare(tok.size() - 2, 2, "^v") == 0)
      tok.resize(tok.size() - 2);
    else
      tok += "^v";
    out += tok;
    if (pos == std::string::npos) break;
    out += kTensorSep;
    start = pos + kTensorSep.size();
  }
  return out;
}

inline std::string tate_label(const std::string& label, int t) { return label + "(" + std::to_string(t) + ")"; }

inline MotiveShape dual_motive(const MotiveShape& M) {
  validate(M);
  MotiveShape D = M;
  D.label = dual_label(M.label);
  D.weight = -M.weight;
  return D;
}

// Q(1) has Frobenius -1 on its Betti line, so an odd twist swaps d+ and d-.
inline MotiveShape tate_twist(const MotiveShape& M, int t) {
  validate(M);
  MotiveShape T = M;
  T.label = tate_label(M.label, t);
  T.weight = M.weight - 2 * t;
  if (mod2(t)) std::swap(T.dplus, T.dminus);
  return T;
}

inline bool good_position(const MotiveShape& M, const MotiveShape& N) {
  validate(M);
  validate(N);
  if (N.n != M.n - 1) throw DomainError("good position needs ranks n and n-1");
  return is_balanced(M.kappa, N.kappa, M.n);
}

// f(X_M) as a product of fundamental-period atoms of M.
inline FormalPeriod evaluate(const FundamentalMonomial& f, const std::string& label) {
  validate(f);
  FormalPeriod out;
  out.add(PeriodAtom::delta(label), f.m0);
  for (std::size_t j = 0; j < f.mi.size(); ++j) out.add(PeriodAtom::dci(label, static_cast<int>(j + 1)), f.mi[j]);
  out.add(PeriodAtom::dc(label, 1), f.mplus);
  out.add(PeriodAtom::dc(label, -1), f.mminus);
  return out;
}

inline FormalPeriod evaluate(const FundamentalMonomial& f, const MotiveShape& M) {
  if (f.n != M.n) throw DomainError("monomial rank does not match motive rank");
  return evaluate(f, M.label);
}

inline int sign_of(const MotiveShape& M) { return M.dplus - M.dminus; }

// c^sign(M (x) N) = delta(N) f_BW^eps(X_M) f_BW^eps'(X_N)
inline Relation tensor_deligne(const MotiveShape& M, const MotiveShape& N, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (!good_position(M, N)) throw DomainError("M and N are not in good position");
  int eps, epsp;
  if (M.has_middle()) {
    eps = sign_of(M);
    epsp = sign * eps;
  } else {
    epsp = sign_of(N);
    eps = sign * epsp;
  }
  auto fm = f_bw(M.n, M.has_middle() ? 0 : eps, M.dplus, M.dminus);
  auto fn = f_bw(N.n, N.has_middle() ? 0 : epsp, N.dplus, N.dminus);
  Relation rel;
  rel.name = "tensor_deligne";
  rel.citation = "Deligne period of a tensor product in good position";
  rel.lhs = atom(PeriodAtom::dc(tensor_label(M.label, N.label), sign));
  rel.rhs = atom(PeriodAtom::delta(N.label)) * evaluate(fm, M) * evaluate(fn, N);
  return rel;
}

// f^v(X_{M^v}) = delta(M)^{-k+ - k-} f(X_M)
inline Relation dual_relation(const FundamentalMonomial& f, const MotiveShape& M) {
  validate(M);
  const auto t = monomial_type(f);
  Relation rel;
  rel.name = "dual_relation";
  rel.citation = "period of the dual motive";
  rel.lhs = evaluate(dual_monomial(f), dual_label(M.label));
  rel.rhs = atom(PeriodAtom::delta(M.label), -(t.kplus + t.kminus)) * evaluate(f, M);
  return rel;
}

// f(X_{M(t)}) = (2 pi i)^{t(k+ d+ + k- d-)} f(X_M) or f^v(X_M) for odd t
inline Relation tate_twist_relation(const FundamentalMonomial& f, const MotiveShape& M, int t) {
  validate(M);
  if (f.n != M.n) throw DomainError("monomial rank does not match motive rank");
  const auto ty = monomial_type(f);
  Relation rel;
  rel.name = "tate_twist_relation";
  rel.citation = "period of a Tate twist";
  if (t == 0) {
    rel.lhs = evaluate(f, M);
    rel.rhs = evaluate(f, M);
    return rel;
  }
  const std::int64_t e = static_cast<std::int64_t>(t) * (ty.kplus * M.dplus + ty.kminus * M.dminus);
  rel.lhs = evaluate(f, tate_label(M.label, t));
  rel.rhs = atom(PeriodAtom::two_pi_i(), e) * evaluate(mod2(t) ? dual_monomial(f) : f, M);
  return rel;
}

// delta(M (x) N) = delta(M)^{rank N} delta(N)^{rank M}
inline Relation delta_tensor(const MotiveShape& M, const MotiveShape& N) {
  Relation rel;
  rel.name = "delta_tensor";
  rel.citation = "determinant of a tensor product";
  rel.lhs = atom(PeriodAtom::delta(tensor_label(M.label, N.label)));
  rel.rhs = atom(PeriodAtom::delta(M.label), N.n) * atom(PeriodAtom::delta(N.label), M.n);
  return rel;
}

// c^{+-}(X^v) = delta(X)^{-1} c^{-+}(X)
inline Relation deligne_dual(const std::string& label, int sign) {
  Relation rel;
  rel.name = "deligne_dual";
  rel.citation = "Deligne: periods of the dual motive";
  rel.lhs = atom(PeriodAtom::dc(dual_label(label), sign));
  rel.rhs = atom(PeriodAtom::delta(label), -1) * atom(PeriodAtom::dc(label, -sign));
  return rel;
}

inline Relation delta_dual(const std::string& label) {
  Relation rel;
  rel.name = "delta_dual";
  rel.citation = "determinant of the dual motive";
  rel.lhs = atom(PeriodAtom::delta(dual_label(label)));
  rel.rhs = atom(PeriodAtom::delta(label), -1);
  return rel;
}

// Rank-2 N with Hodge gap ell placed between kappa_i and kappa_{i+1} of M.
inline bool rank2_position(const MotiveShape& M, const MotiveShape& N, int i) {
  validate(M);
  validate(N);
  if (N.n != 2) throw DomainError("auxiliary motive must have rank 2");
  if (i < 1 || i > M.n / 2 - 1) throw DomainError("index i must satisfy 1 <= i <= floor(n/2)-1");
  const int ell = N.kappa[0];
  return M.kappa[i - 1] > ell && ell > M.kappa[i];
}

// c^sign(M (x) N) = c_i(M) delta(N)^i (c+(N) c-(N))^{r-i} [c^{sign*eps}(N) if n odd]
inline Relation yoshida_rank2_tensor(const MotiveShape& M, const MotiveShape& N, int i, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (!rank2_position(M, N, i)) throw DomainError("auxiliary rank-2 motive is not between kappa_i and kappa_{i+1}");
  const int r = M.n / 2;
  Relation rel;
  rel.name = "yoshida_rank2_tensor";
  rel.citation = "Yoshida: tensor with a rank-2 motive";
  rel.lhs = atom(PeriodAtom::dc(tensor_label(M.label, N.label), sign));
  rel.rhs = atom(PeriodAtom::dci(M.label, i)) * atom(PeriodAtom::delta(N.label), i) *
            atom(PeriodAtom::dc(N.label, 1), r - i) * atom(PeriodAtom::dc(N.label, -1), r - i);
  if (M.has_middle()) rel.rhs *= atom(PeriodAtom::dc(N.label, sign * sign_of(M)));
  return rel;
}

}  // namespace glp

#endif
