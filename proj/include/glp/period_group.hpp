#ifndef GLP_PERIOD_GROUP_HPP
#define GLP_PERIOD_GROUP_HPP

#include "glp/errors.hpp"
#include "glp/rational.hpp"

#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace glp {

enum class AtomKind { BW, Gauss, ArchZ, LVal, Delta, DC, DCi, TwoPiI, I };

inline const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::BW: return "BW";
    case AtomKind::Gauss: return "Gauss";
    case AtomKind::ArchZ: return "ArchZ";
    case AtomKind::LVal: return "LVal";
    case AtomKind::Delta: return "Delta";
    case AtomKind::DC: return "DC";
    case AtomKind::DCi: return "DCi";
    case AtomKind::TwoPiI: return "TwoPiI";
    case AtomKind::I: return "I";
  }
  return "?";
}

inline AtomKind parse_kind(const std::string& s) {
  for (auto k : {AtomKind::BW, AtomKind::Gauss, AtomKind::ArchZ, AtomKind::LVal, AtomKind::Delta, AtomKind::DC,
                 AtomKind::DCi, AtomKind::TwoPiI, AtomKind::I})
    if (s == kind_name(k)) return k;
  throw SchemaError("", "unknown atom kind '" + s + "'");
}

// One generator of the formal period group. Unused payload fields stay at defaults.
struct PeriodAtom {
  AtomKind kind = AtomKind::I;
  std::string label;  // representation, character, pair or motive label
  int sign = 0;       // +1/-1 for BW and DC
  Rational point{0};  // m for ArchZ, s for LVal
  int index = 0;      // i for DCi

  auto key() const { return std::tie(kind, label, sign, point, index); }
  friend bool operator<(const PeriodAtom& a, const PeriodAtom& b) { return a.key() < b.key(); }
  friend bool operator==(const PeriodAtom& a, const PeriodAtom& b) { return a.key() == b.key(); }

  static PeriodAtom bw(std::string rep, int eps) { return {AtomKind::BW, std::move(rep), eps, Rational(0), 0}; }
  static PeriodAtom gauss(std::string chr) { return {AtomKind::Gauss, std::move(chr), 0, Rational(0), 0}; }
  static PeriodAtom arch(Rational m, std::string pair) { return {AtomKind::ArchZ, std::move(pair), 0, m, 0}; }
  static PeriodAtom lval(Rational s, std::string pair) { return {AtomKind::LVal, std::move(pair), 0, s, 0}; }
  static PeriodAtom delta(std::string motive) { return {AtomKind::Delta, std::move(motive), 0, Rational(0), 0}; }
  static PeriodAtom dc(std::string motive, int eps) { return {AtomKind::DC, std::move(motive), eps, Rational(0), 0}; }
  static PeriodAtom dci(std::string motive, int i) { return {AtomKind::DCi, std::move(motive), 0, Rational(0), i}; }
  static PeriodAtom two_pi_i() { return {AtomKind::TwoPiI, "", 0, Rational(0), 0}; }
  static PeriodAtom i() { return {AtomKind::I, "", 0, Rational(0), 0}; }
};

inline void check_atom(const PeriodAtom& a) {
  switch (a.kind) {
    case AtomKind::BW:
    case AtomKind::DC:
      if (a.sign != 1 && a.sign != -1) throw SchemaError("", std::string(kind_name(a.kind)) + " sign must be +1 or -1");
      [[fallthrough]];
    case AtomKind::Gauss:
    case AtomKind::Delta:
      if (a.label.empty()) throw SchemaError("", std::string(kind_name(a.kind)) + " needs a nonempty label");
      break;
    case AtomKind::ArchZ:
    case AtomKind::LVal:
      if (a.label.empty()) throw SchemaError("", std::string(kind_name(a.kind)) + " needs a pair label");
      if (!is_half_integer(a.point)) throw SchemaError("", "evaluation point must be a half-integer");
      break;
    case AtomKind::DCi:
      if (a.label.empty() || a.index < 1) throw SchemaError("", "DCi needs a label and index >= 1");
      break;
    case AtomKind::TwoPiI:
    case AtomKind::I:
      break;
  }
}

inline std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

inline std::string to_string(const PeriodAtom& a) {
  switch (a.kind) {
    case AtomKind::BW: return "p(" + a.label + "," + sign_str(a.sign) + ")";
    case AtomKind::Gauss: return "G(" + a.label + ")";
    case AtomKind::ArchZ: return "p(" + glp::to_string(a.point) + "," + a.label + ")";
    case AtomKind::LVal: return "L(" + glp::to_string(a.point) + "," + a.label + ")";
    case AtomKind::Delta: return "delta(" + a.label + ")";
    case AtomKind::DC: return "c" + sign_str(a.sign) + "(" + a.label + ")";
    case AtomKind::DCi: return "c_" + std::to_string(a.index) + "(" + a.label + ")";
    case AtomKind::TwoPiI: return "(2 pi i)";
    case AtomKind::I: return "i";
  }
  return "?";
}

// Element of the free abelian group on atoms, modulo i^2 = -1 in Q^x.
class FormalPeriod {
 public:
  FormalPeriod() = default;
  explicit FormalPeriod(const PeriodAtom& a, std::int64_t e = 1) { add(a, e); }

  static FormalPeriod identity() { return {}; }

  const std::map<PeriodAtom, std::int64_t>& exponents() const { return exp_; }

  std::int64_t exponent(const PeriodAtom& a) const {
    auto it = exp_.find(a);
    return it == exp_.end() ? 0 : it->second;
  }
  int i_parity() const { return static_cast<int>(exponent(PeriodAtom::i())); }
  bool is_identity() const { return exp_.empty(); }

  FormalPeriod& add(const PeriodAtom& a, std::int64_t e) {
    if (e == 0) return *this;
    auto& slot = exp_[a];
    slot += e;
    if (a.kind == AtomKind::I) slot = mod2(slot);
    if (slot == 0) exp_.erase(a);
    return *this;
  }

  FormalPeriod& operator*=(const FormalPeriod& o) {
    for (const auto& [a, e] : o.exp_) add(a, e);
    return *this;
  }
  friend FormalPeriod operator*(FormalPeriod a, const FormalPeriod& b) { return a *= b; }

  FormalPeriod inv() const { return pow(-1); }
  FormalPeriod pow(std::int64_t k) const {
    FormalPeriod out;
    for (const auto& [a, e] : exp_) out.add(a, e * k);
    return out;
  }
  friend FormalPeriod operator/(const FormalPeriod& a, const FormalPeriod& b) { return a * b.inv(); }
  friend bool operator==(const FormalPeriod&, const FormalPeriod&) = default;

 private:
  std::map<PeriodAtom, std::int64_t> exp_;
};

inline FormalPeriod atom(const PeriodAtom& a, std::int64_t e = 1) { return FormalPeriod(a, e); }
inline FormalPeriod i_power(std::int64_t e) { return atom(PeriodAtom::i(), e); }

inline std::string to_string(const FormalPeriod& f) {
  if (f.is_identity()) return "1";
  std::string s;
  for (const auto& [a, e] : f.exponents()) {
    if (!s.empty()) s += " * ";
    s += to_string(a);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// lhs = rhs modulo algebraic units
struct Relation {
  std::string name;
  std::string citation;
  FormalPeriod lhs, rhs;

  FormalPeriod quotient() const { return lhs / rhs; }
};

inline std::string to_string(const Relation& r) { return r.name + ": " + to_string(r.lhs) + " = " + to_string(r.rhs); }

// Monomial in named Hecke characters. Bases in `quadratic` square to 1; the norm
// character contributes only rational factors to Gauss sums and is dropped there.
class CharMonomial {
 public:
  static constexpr const char* kNorm = "|.|";

  CharMonomial() = default;
  static CharMonomial base(const std::string& name, bool quadratic = false) {
    CharMonomial c;
    if (quadratic) c.quadratic_.insert(name);
    c.exp_[name] = 1;
    return c;
  }
  static CharMonomial norm(int k = 1) {
    CharMonomial c;
    if (k != 0) c.exp_[kNorm] = k;
    return c;
  }

  CharMonomial& operator*=(const CharMonomial& o) {
    quadratic_.insert(o.quadratic_.begin(), o.quadratic_.end());
    for (const auto& [b, e] : o.exp_) exp_[b] += e;
    reduce();
    return *this;
  }
  friend CharMonomial operator*(CharMonomial a, const CharMonomial& b) { return a *= b; }
  CharMonomial pow(int k) const {
    CharMonomial c = *this;
    for (auto& [b, e] : c.exp_) e *= k;
    c.reduce();
    return c;
  }
  CharMonomial inv() const { return pow(-1); }

  const std::map<std::string, int>& exponents() const { return exp_; }
  bool is_quadratic_base(const std::string& b) const { return quadratic_.count(b) > 0; }

  // Label used for Gauss atoms; empty for characters with trivial Gauss sum.
  std::string gauss_label() const {
    std::string s;
    for (const auto& [b, e] : exp_) {
      if (b == kNorm) continue;
      if (!s.empty()) s += "*";
      s += b;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }
  std::string label() const {
    std::string s;
    for (const auto& [b, e] : exp_) {
      if (!s.empty()) s += "*";
      s += b;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }
  bool trivial() const { return exp_.empty(); }
  friend bool operator==(const CharMonomial& a, const CharMonomial& b) { return a.exp_ == b.exp_; }

 private:
  void reduce() {
    for (auto it = exp_.begin(); it != exp_.end();) {
      if (quadratic_.count(it->first)) it->second = mod2(it->second);
      it = (it->second == 0) ? exp_.erase(it) : std::next(it);
    }
  }

  std::map<std::string, int> exp_;
  std::set<std::string> quadratic_;
};

inline FormalPeriod gauss(const CharMonomial& chi, std::int64_t e = 1) {
  auto lbl = chi.gauss_label();
  if (lbl.empty()) return {};
  return atom(PeriodAtom::gauss(lbl), e);
}

}  // namespace glp

#endif
