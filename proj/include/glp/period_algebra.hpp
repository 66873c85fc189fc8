#ifndef GLP_PERIOD_ALGEBRA_HPP
#define GLP_PERIOD_ALGEBRA_HPP

#include "glp/arch_l.hpp"
#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/period_group.hpp"
#include "glp/yoshida.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glp {

// A cuspidal representation as the relations see it: a label, its infinity type
// and its central character.
struct RepData {
  std::string label;
  InfinityType type;
  CharMonomial central;
};

inline std::string pair_label(const std::string& a, const std::string& b) { return a + " x " + b; }

inline int neg_one_pow(std::int64_t e) { return mod2(e) ? -1 : 1; }

inline std::int64_t integer_part(const Rational& m, const char* what) {
  if (!is_integer(m)) throw DomainError(std::string(what) + " must be an integer");
  return m.numerator();
}

// (eps_m, eps'_m): eps_m = eps(Pi_inf) for odd n, eps'_m = eps(Sigma_inf) for even n,
// and eps_m eps'_m = (-1)^{m+n}.
inline std::pair<int, int> raghuram_signs(const InfinityType& pi, const InfinityType& sigma, const Rational& m) {
  const int flip = neg_one_pow(integer_part(m, "m") + pi.n);
  if (pi.odd()) {
    int e = signature(pi);
    return {e, flip * e};
  }
  int ep = signature(sigma);
  return {flip * ep, ep};
}

inline Relation rel_raghuram(const Rational& m, const RepData& pi, const RepData& sigma, bool require_critical = true) {
  if (!is_balanced(pi.type, sigma.type)) throw DomainError("pair is not balanced");
  const Rational s = m + Rational(1, 2);
  if (require_critical && !is_critical(pi.type, sigma.type, s))
    throw DomainError("m + 1/2 = " + to_string(s) + " is not critical");
  auto [e, ep] = raghuram_signs(pi.type, sigma.type, m);
  const std::string pl = pair_label(pi.label, sigma.label);
  Relation rel;
  rel.name = "raghuram";
  rel.citation = "critical values of Rankin-Selberg L-functions for GL(n) x GL(n-1)";
  rel.lhs = atom(PeriodAtom::lval(s, pl));
  rel.rhs = atom(PeriodAtom::arch(m, pl)) * gauss(sigma.central) * atom(PeriodAtom::bw(pi.label, e)) *
            atom(PeriodAtom::bw(sigma.label, ep));
  return rel;
}

// L(m0, Pi x Sigma) = eps_inf G(omega_Pi)^{n'} G(omega_Sigma)^n L(1 - m0, Pi^v x Sigma^v)
inline Relation rel_duality_ratio(const Rational& m0, const RepData& pi, const RepData& sigma, const RepData& pi_dual,
                                  const RepData& sigma_dual, bool require_critical = true) {
  if (require_critical && !is_critical(pi.type, sigma.type, m0))
    throw DomainError("m0 = " + to_string(m0) + " is not critical");
  const int eps = epsilon_class(pair_parameter(pi.type, sigma.type));
  Relation rel;
  rel.name = "duality_ratio";
  rel.citation = "ratio of critical values under duality";
  rel.lhs = atom(PeriodAtom::lval(m0, pair_label(pi.label, sigma.label)));
  rel.rhs = i_power(eps) * gauss(pi.central, sigma.type.n) * gauss(sigma.central, pi.type.n) *
            atom(PeriodAtom::lval(1 - m0, pair_label(pi_dual.label, sigma_dual.label)));
  return rel;
}

// m with m + 1/2 at the centre of symmetry
inline Rational central_m(const InfinityType& pi, const InfinityType& sigma) { return central_point(pi, sigma) - Rational(1, 2); }

// p(m1)/p(m2) = i^{(m1-m2) n(n-1)/2}, away from the central point
inline Relation rel_arch_iparity(const Rational& m1, const Rational& m2, const InfinityType& pi,
                                 const InfinityType& sigma, const std::string& pair) {
  const Rational c = central_m(pi, sigma);
  if (m1 == c || m2 == c) throw DomainError("archimedean i-parity needs non-central points");
  const std::int64_t d = integer_part(m1 - m2, "m1 - m2");
  const std::int64_t n = pi.n;
  Relation rel;
  rel.name = "arch_iparity";
  rel.citation = "i-power of a ratio of archimedean periods";
  rel.lhs = atom(PeriodAtom::arch(m1, pair)) / atom(PeriodAtom::arch(m2, pair));
  rel.rhs = i_power(d * n * (n - 1) / 2);
  return rel;
}

// p(m, (Pi |.|^{w1}) x (Sigma |.|^{w2})) = p(m + w1 + w2, Pi x Sigma)
inline Relation rel_twist(const Rational& m, const std::string& twisted_pair, const std::string& base_pair, int w1,
                          int w2) {
  Relation rel;
  rel.name = "twist";
  rel.citation = "archimedean period of a twisted pair";
  rel.lhs = atom(PeriodAtom::arch(m, twisted_pair));
  rel.rhs = atom(PeriodAtom::arch(m + w1 + w2, base_pair));
  return rel;
}

// p(Pi (x) eta, eps) = G(eta)^{k(2k-1)} p(Pi, eps eps(eta_inf)) for Pi on GL(2k)
inline Relation rel_rs_twist(const std::string& pi_label, int rank, const CharMonomial& eta, int eta_sign, int eps,
                             const std::string& twisted_label) {
  if (rank % 2 != 0) throw DomainError("twisting rule is stated for even rank only");
  const std::int64_t k = rank / 2;
  Relation rel;
  rel.name = "rs_twist";
  rel.citation = "Betti-Whittaker period of a twist on GL(2n)";
  rel.lhs = atom(PeriodAtom::bw(twisted_label, eps));
  rel.rhs = gauss(eta, k * (2 * k - 1)) * atom(PeriodAtom::bw(pi_label, eps * eta_sign));
  return rel;
}

// p(Pi, eps) = G(omega_Pi)^{n-1} p(Pi^v, eps)
inline Relation rel_main1(const RepData& pi, const std::string& dual_label, int eps,
                          std::vector<std::string>* warnings = nullptr) {
  if (warnings && pi.type.n >= 2 && is_valid(pi.type) && !regularity(pi.type).ok())
    warnings->push_back(pi.label + ": regularity hypotheses not met");
  Relation rel;
  rel.name = "main1";
  rel.citation = "Betti-Whittaker periods of Pi and its contragredient";
  rel.lhs = atom(PeriodAtom::bw(pi.label, eps));
  rel.rhs = gauss(pi.central, pi.type.n - 1) * atom(PeriodAtom::bw(dual_label, eps));
  return rel;
}

inline const char* kGaussCitation = "standard Gauss-sum identity (admitted)";

// G(chi) G(chi^-1) = chi_inf(-1), an algebraic unit
inline Relation gauss_pairing(const CharMonomial& chi) {
  Relation rel;
  rel.name = "gauss_pairing";
  rel.citation = kGaussCitation;
  rel.lhs = gauss(chi) * gauss(chi.inv());
  return rel;
}

// G(ab) = G(a) G(b) up to algebraic units
inline Relation gauss_product(const CharMonomial& a, const CharMonomial& b) {
  Relation rel;
  rel.name = "gauss_product";
  rel.citation = kGaussCitation;
  rel.lhs = gauss(a * b);
  rel.rhs = gauss(a) * gauss(b);
  return rel;
}

// G(omega)^2 = G(chi)^{2n}, from omega^2 = chi^{2n} when Pi = Pi^v (x) chi on GL(2n)
inline Relation gauss_central(const CharMonomial& omega, const CharMonomial& chi, int n) {
  Relation rel;
  rel.name = "gauss_central";
  rel.citation = "central character of a chi-self-dual representation";
  rel.lhs = gauss(omega, 2);
  rel.rhs = gauss(chi, 2 * n);
  return rel;
}

enum class RelativeConvention { WithIPower, WithoutIPower };

// L(m0)/L(m0+1) = i^n p(Pi, eps)/p(Pi, -eps) for Pi on GL(2n), Sigma of odd rank
inline Relation rel_relative_period(const std::string& pi_label, const std::string& pair, const Rational& m0, int n,
                                    int eps, RelativeConvention conv) {
  Relation rel;
  rel.name = "relative_period";
  rel.citation = conv == RelativeConvention::WithIPower ? "relative periods with the (sqrt -1)^n factor"
                                                        : "relative periods defined without (sqrt -1)^n";
  rel.lhs = atom(PeriodAtom::lval(m0, pair)) / atom(PeriodAtom::lval(m0 + 1, pair));
  rel.rhs = atom(PeriodAtom::bw(pi_label, eps)) / atom(PeriodAtom::bw(pi_label, -eps));
  if (conv == RelativeConvention::WithIPower) rel.rhs *= i_power(n);
  return rel;
}

// ---------------------------------------------------------------------------
// Derivation scripts

struct ScriptStep {
  std::string relation;
  std::map<std::string, std::string> bindings;  // label renames applied to the relation
  std::int64_t exponent = 1;
};

struct Script {
  std::vector<Relation> relations;
  std::vector<ScriptStep> steps;

  const Relation* find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
  Relation* find(const std::string& name) {
    for (auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }

  // Register a relation under a unique name and use it with the given exponent.
  void use(Relation rel, const std::string& name, std::int64_t exponent) {
    rel.name = name;
    if (find(name)) throw DomainError("duplicate relation name '" + name + "'");
    relations.push_back(std::move(rel));
    if (exponent != 0) steps.push_back({name, {}, exponent});
  }
};

inline FormalPeriod relabel(const FormalPeriod& f, const std::map<std::string, std::string>& bindings) {
  if (bindings.empty()) return f;
  FormalPeriod out;
  for (const auto& [key, e] : f.exponents()) {
    PeriodAtom a = key;
    auto it = bindings.find(a.label);
    if (it != bindings.end()) a.label = it->second;
    out.add(a, e);
  }
  return out;
}

struct Residual {
  FormalPeriod value;

  bool trivial() const { return value.is_identity(); }
  std::optional<PeriodAtom> offending() const {
    if (value.is_identity()) return std::nullopt;
    return value.exponents().begin()->first;
  }
};

using RelationDb = std::vector<Relation>;

inline const Relation& lookup(const Script& s, const RelationDb& db, const std::string& name, std::size_t step) {
  if (const Relation* r = s.find(name)) return *r;
  for (const auto& r : db)
    if (r.name == name) return r;
  throw SchemaError("steps[" + std::to_string(step) + "].relation", "unknown relation '" + name + "'");
}

// Product of (lhs/rhs)^exponent over the steps.
inline Residual replay(const Script& s, const RelationDb& db = {}) {
  Residual res;
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto& st = s.steps[k];
    const Relation& r = lookup(s, db, st.relation, k);
    res.value *= relabel(r.quotient(), st.bindings).pow(st.exponent);
  }
  return res;
}

// Add delta to the exponent of `a` on one side of a named relation (negative controls).
inline void corrupt(Script& s, const std::string& relation, const PeriodAtom& a, std::int64_t delta, bool rhs = true) {
  Relation* r = s.find(relation);
  if (!r) throw DomainError("no relation named '" + relation + "' in script");
  (rhs ? r->rhs : r->lhs).add(a, delta);
}

struct CheckResult {
  Script script;
  Residual residual;
  std::vector<std::string> notes;

  bool trivial() const { return residual.trivial(); }
};

inline CheckResult finish(Script s, std::vector<std::string> notes = {}) {
  CheckResult c{std::move(s), {}, std::move(notes)};
  c.residual = replay(c.script);
  return c;
}

// ---------------------------------------------------------------------------
// Replay of the GL(n) x GL(n-1) induction step

// A balanced, regular pair (Pi, Sigma) on GL(n) x GL(n-1) with w(Sigma) = delta.
inline std::pair<InfinityType, InfinityType> main1_pair(int n, int w, int delta) {
  if (n < 2) throw DomainError("the induction step needs n >= 2");
  if (mod2(delta) != mod2(n)) throw DomainError("delta must be congruent to n mod 2");
  InfinityType pi{n, {}, w, 0};
  InfinityType sigma{n - 1, {}, delta, 0};
  const int r = n / 2;
  if (n % 2 == 1) {
    if (mod2(w) != 0) throw DomainError("odd n needs even w");
    for (int i = 0; i < r; ++i) pi.kappa.push_back(5 + 4 * (r - 1 - i));
    for (int k : pi.kappa) sigma.kappa.push_back(k - 2);
  } else {
    const bool w_even = mod2(w) == 0;
    const int bottom = w_even ? 4 : 3, gap = w_even ? 6 : 4;
    for (int i = 0; i < r; ++i) pi.kappa.push_back(bottom + gap * (r - 1 - i));
    for (int i = 0; i + 1 < r; ++i) sigma.kappa.push_back(pi.kappa[i] - (w_even ? 3 : 2));
  }
  validate(pi);
  validate(sigma);
  if (!is_balanced(pi, sigma)) throw DomainError("internal: constructed pair is not balanced");
  return {pi, sigma};
}

struct Main1Options {
  bool strict = false;  // require m + 1/2 critical for both pairs
};

inline CheckResult check_main1_step(int n, int w, int delta, const Rational& m, const Main1Options& opt = {}) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (mod2(delta) != mod2(n)) throw DomainError("delta must be congruent to n mod 2");
  if (n == 1) return finish({}, {"n = 1: nothing to prove"});
  integer_part(m, "m");
  auto [pt, st] = main1_pair(n, w, delta);
  if (m == central_m(pt, st)) throw DomainError("m + 1/2 is the central point");

  const RepData pi{"Pi", pt, CharMonomial::base("omega_Pi")};
  const RepData sigma{"Sigma", st, CharMonomial::base("omega_Sigma")};
  const RepData pi_d{"Pi^v", dual_type(pt), pi.central.inv()};
  const RepData sigma_d{"Sigma^v", dual_type(st), sigma.central.inv()};

  std::vector<std::string> notes;
  const bool crit = is_critical(pt, st, m + Rational(1, 2));
  const bool crit_d = is_critical(pi_d.type, sigma_d.type, -m + Rational(1, 2));
  if (opt.strict && !(crit && crit_d)) throw DomainError("m + 1/2 = " + to_string(m + Rational(1, 2)) + " is not critical");
  notes.push_back(std::string("m + 1/2 ") + (crit ? "is" : "is not") + " critical for (Pi, Sigma)");
  notes.push_back("epsilon class of the pair: " + std::to_string(epsilon_class(pair_parameter(pt, st))));

  auto [e, ep] = raghuram_signs(pt, st, m);
  const std::string pair = pair_label(pi.label, sigma.label);
  const std::string pair_d = pair_label(pi_d.label, sigma_d.label);

  Script s;
  s.use(rel_raghuram(m, pi, sigma, opt.strict), "raghuram(m)", -1);
  s.use(rel_raghuram(-m, pi_d, sigma_d, opt.strict), "raghuram(-m, dual)", 1);
  s.use(rel_duality_ratio(m + Rational(1, 2), pi, sigma, pi_d, sigma_d, opt.strict), "duality_ratio", 1);
  s.use(rel_twist(-m, pair_d, pair, -pt.w, -st.w), "twist", 1);
  s.use(rel_arch_iparity(m, -m - pt.w - st.w, pt, st, pair), "arch_iparity", -1);
  s.use(rel_main1(sigma, sigma_d.label, ep, &notes), "main1(Sigma)", -1);
  s.use(gauss_pairing(sigma.central), "gauss_pairing(omega_Sigma)", 1);
  s.use(rel_main1(pi, pi_d.label, e, &notes), "goal", -1);
  return finish(std::move(s), std::move(notes));
}

// ---------------------------------------------------------------------------
// Pi on GL(2n) with Pi = Pi^v (x) chi

struct SelfDualData {
  int n = 1;  // Pi lives on GL(2n)
  std::string label = "Pi";
  std::string dual_label = "Pi^v";
  CharMonomial chi = CharMonomial::base("chi");
  CharMonomial omega = CharMonomial::base("omega_Pi");
  bool orthogonal = true;  // eps(chi_inf) = -1

  CharMonomial eta0() const { return chi.pow(n) * omega.inv(); }
};

// Steps turning G(chi^n omega^-1)^k into G(chi)^{nk} G(omega)^{-k} within the script.
inline void expand_eta0(Script& s, const SelfDualData& d, std::int64_t k, const std::string& prefix) {
  if (k == 0) return;
  s.use(gauss_product(d.chi.pow(d.n), d.omega.inv()), prefix + "gauss_product(chi^n, omega^-1)", -k);
  for (int j = 1; j < d.n; ++j)
    s.use(gauss_product(d.chi.pow(j), d.chi), prefix + "gauss_product(chi^" + std::to_string(j) + ", chi)", -k);
  s.use(gauss_pairing(d.omega), prefix + "gauss_pairing(omega)", -k);
}

// Steps of the corollary proof; their product is the corollary quotient
// p(Pi,+) / (G(eta0) p(Pi,-)) raised to `sign`.
inline void corollary_steps(Script& s, const SelfDualData& d, int sign, const std::string& prefix) {
  const int rank = 2 * d.n;
  const int eta_sign = d.orthogonal ? -1 : 1;
  const RepData pi{d.label, InfinityType{rank, {}, 0, 0}, d.omega};
  s.use(rel_main1(pi, d.dual_label, 1), prefix + "main1", sign);
  s.use(rel_rs_twist(d.label, rank, d.chi.inv(), eta_sign, 1, d.dual_label), prefix + "rs_twist(chi^-1)", sign);
  expand_eta0(s, d, sign, prefix);
  s.use(gauss_pairing(d.chi), prefix + "gauss_pairing(chi)", sign * std::int64_t(d.n) * (2 * d.n - 1));
  s.use(gauss_central(d.omega, d.chi, d.n), prefix + "gauss_central", sign * std::int64_t(d.n));
}

inline Relation corollary_goal(const SelfDualData& d) {
  Relation rel;
  rel.name = "corollary";
  rel.citation = "p(Pi,+) versus p(Pi,-) for chi-orthogonal Pi";
  rel.lhs = atom(PeriodAtom::bw(d.label, 1));
  rel.rhs = gauss(d.eta0()) * atom(PeriodAtom::bw(d.label, -1));
  return rel;
}

inline CheckResult check_corollary_main(const SelfDualData& d) {
  if (d.n < 1) throw DomainError("half-rank must be >= 1");
  Script s;
  corollary_steps(s, d, 1, "");
  s.use(corollary_goal(d), "goal", -1);
  std::vector<std::string> notes{std::string("eps(chi_inf) = ") + (d.orthogonal ? "-1 (orthogonal)" : "+1 (symplectic)")};
  return finish(std::move(s), std::move(notes));
}

inline CheckResult check_corollary_main(int n, bool orthogonal = true) {
  SelfDualData d;
  d.n = n;
  d.orthogonal = orthogonal;
  return check_corollary_main(d);
}

struct Main2Options {
  RelativeConvention convention = RelativeConvention::WithIPower;
  Rational m0 = Rational(1, 2);  // critical point of L(s, Pi x Sigma)
  int sigma_sign = 1;    // eps(Sigma_inf)
};

inline Relation main2_goal(const SelfDualData& d, int nprime, const std::string& pair, const Rational& m0) {
  Relation rel;
  rel.name = "main2";
  rel.citation = "ratio of successive critical values";
  rel.lhs = atom(PeriodAtom::lval(m0, pair)) / atom(PeriodAtom::lval(m0 + 1, pair));
  rel.rhs = i_power(std::int64_t(d.n) * nprime) * gauss(d.eta0(), nprime);
  return rel;
}

inline CheckResult check_theorem_main2(const SelfDualData& d, int nprime, const Main2Options& opt = {}) {
  if (d.n < 1 || nprime < 1) throw DomainError("ranks must be >= 1");
  if (nprime % 2 == 0) return finish({}, {"n' even: the ratio is algebraic, nothing to replay"});
  if (!is_half_integer(opt.m0) || is_integer(opt.m0)) throw DomainError("m0 must be a half-integer");
  const std::string pair = pair_label(d.label, "Sigma");
  const int eps1 = neg_one_pow((opt.m0 - Rational(1, 2)).numerator() + d.n) * opt.sigma_sign;

  Script s;
  s.use(rel_relative_period(d.label, pair, opt.m0, d.n, eps1, opt.convention), "relative_period", 1);
  s.use(main2_goal(d, nprime, pair, opt.m0), "goal", -1);
  // The relative period leaves p(Pi,-eps1)/p(Pi,eps1); the corollary converts it to G(eta0)^{-+1}.
  corollary_steps(s, d, eps1, "corollary.");
  const std::int64_t k = nprime - eps1;  // remaining power of G(eta0), always even
  expand_eta0(s, d, k, "");
  s.use(gauss_central(d.omega, d.chi, d.n), "gauss_central", k / 2);
  std::vector<std::string> notes{"i-parity of the statement: " + std::to_string(mod2(std::int64_t(d.n) * nprime)),
                                 "relative-period sign: " + sign_str(eps1)};
  return finish(std::move(s), std::move(notes));
}

inline CheckResult check_theorem_main2(int n, int nprime, const Main2Options& opt = {}) {
  SelfDualData d;
  d.n = n;
  return check_theorem_main2(d, nprime, opt);
}

// Data of the Asai transfer As(pi) on GL(4): chi = omega_pi |.|, omega = omega_pi^2 omega_F/Q |.|^2.
inline SelfDualData asai_data() {
  SelfDualData d;
  d.n = 2;
  d.label = "As(pi)";
  d.dual_label = "As(pi)^v";
  d.chi = CharMonomial::base("omega_pi") * CharMonomial::norm(1);
  d.omega = CharMonomial::base("omega_pi").pow(2) * CharMonomial::base("omega_F/Q", true) * CharMonomial::norm(2);
  d.orthogonal = true;
  return d;
}

// ---------------------------------------------------------------------------
// Motivic duality: c_i(M^v) = delta(M)^{-2} c_i(M)

// Rank-n motive with kappa gaps of 2 and an auxiliary rank-2 N sitting between kappa_i and kappa_{i+1}.
inline std::pair<MotiveShape, MotiveShape> motivic_pair(int n, int i) {
  const int r = n / 2;
  MotiveShape M;
  M.label = "M";
  M.n = n;
  M.weight = 0;
  for (int j = 0; j < r; ++j) M.kappa.push_back(3 + 2 * (r - 1 - j));
  M.dplus = (n + 1) / 2;
  M.dminus = n / 2;
  validate(M);
  MotiveShape N;
  N.label = "N";
  N.n = 2;
  N.kappa = {M.kappa[i] + 1};
  N.weight = 1;
  N.dplus = N.dminus = 1;
  validate(N);
  return {M, N};
}

struct MotivicOptions {
  std::int64_t corrupt_delta_tensor = 0;  // added to the delta(N) exponent of delta(M (x) N)
};

inline void motivic_dual_steps(Script& s, int n, int i, int sign, const MotivicOptions& opt) {
  auto [M, N] = motivic_pair(n, i);
  const MotiveShape Md = dual_motive(M), Nd = dual_motive(N);
  const int r = n / 2;
  const std::string p = "i=" + std::to_string(i) + "," + sign_str(sign) + ": ";
  const std::string MN = tensor_label(M.label, N.label);

  Relation dt = delta_tensor(M, N);
  dt.rhs.add(PeriodAtom::delta(N.label), opt.corrupt_delta_tensor);

  s.use(yoshida_rank2_tensor(Md, Nd, i, sign), p + "yoshida(M^v, N^v)", -1);
  s.use(deligne_dual(MN, sign), p + "deligne_dual(M(x)N)", 1);
  s.use(yoshida_rank2_tensor(M, N, i, -sign), p + "yoshida(M, N)", 1);
  s.use(dt, p + "delta_tensor", -1);
  s.use(delta_dual(N.label), p + "delta_dual(N)", -i);
  s.use(deligne_dual(N.label, 1), p + "deligne_dual(N,+)", -(r - i));
  s.use(deligne_dual(N.label, -1), p + "deligne_dual(N,-)", -(r - i));
  if (M.has_middle()) s.use(deligne_dual(N.label, sign * sign_of(M)), p + "deligne_dual(N, middle)", -1);
  FundamentalMonomial fi = unit_monomial(n, M.dplus, M.dminus);
  fi.mi[i - 1] = 1;
  s.use(dual_relation(fi, M), p + "goal", -1);
}

inline CheckResult check_motivic_dual(int n, const MotivicOptions& opt = {}) {
  if (n < 1) throw DomainError("rank must be >= 1");
  Script s;
  for (int i = 1; i <= n / 2 - 1; ++i)
    for (int sign : {1, -1}) motivic_dual_steps(s, n, i, sign, opt);
  std::vector<std::string> notes;
  if (s.steps.empty()) notes.push_back("no f_i for n <= 3: nothing to prove");
  return finish(std::move(s), std::move(notes));
}

// f_BW(X_{M^v(n-1)}) = (2 pi i)^{n(n-1)^2/2} delta(M)^{-n+1} f_BW(X_M)
inline CheckResult check_deligne_compat(int n, int eps = 1) {
  if (n < 1) throw DomainError("rank must be >= 1");
  InfinityType t{n, {}, 0, 0};
  for (int j = 0; j < n / 2; ++j) t.kappa.push_back((n % 2 ? 3 : 2) + 2 * (n / 2 - 1 - j));
  const MotiveShape M = motive_from_infinity(t, "M");
  const MotiveShape Md = dual_motive(M);
  const int e = n % 2 ? 0 : eps;
  const FundamentalMonomial f = f_bw(n, e, M.dplus, M.dminus);

  Relation goal;
  goal.lhs = evaluate(f, tate_label(Md.label, n - 1));
  goal.rhs = atom(PeriodAtom::two_pi_i(), std::int64_t(n) * (n - 1) * (n - 1) / 2) *
             atom(PeriodAtom::delta(M.label), -(n - 1)) * evaluate(f, M);
  goal.citation = "Betti-Whittaker periods of M and M^v(n-1)";

  Script s;
  s.use(tate_twist_relation(f, Md, n - 1), "tate_twist", 1);
  s.use(dual_relation(f, M), "dual", 1);
  s.use(goal, "goal", -1);
  return finish(std::move(s));
}

}  // namespace glp

#endif
