#ifndef GLP_WEIL_REAL_HPP
#define GLP_WEIL_REAL_HPP

#include "glp/errors.hpp"
#include "glp/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace glp {

// sgn^sign |.|^twist
struct ArchCharacter {
  int sign = 0;
  Rational twist{0};

  friend bool operator==(const ArchCharacter&, const ArchCharacter&) = default;
  friend bool operator<(const ArchCharacter& a, const ArchCharacter& b) {
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.sign < b.sign;
  }
};

// phi_kappa (x) |.|^twist, kappa >= 2
struct ArchDiscrete {
  int kappa = 2;
  Rational twist{0};

  friend bool operator==(const ArchDiscrete&, const ArchDiscrete&) = default;
  friend bool operator<(const ArchDiscrete& a, const ArchDiscrete& b) {
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.kappa < b.kappa;
  }
};

inline ArchCharacter operator*(const ArchCharacter& a, const ArchCharacter& b) {
  return {(a.sign + b.sign) % 2, a.twist + b.twist};
}

// Semisimple representation of the real Weil group, kept as a sorted multiset.
class ArchRep {
 public:
  ArchRep() = default;

  static ArchRep character(int sign, Rational twist = Rational(0)) {
    ArchRep r;
    r.add_character({mod2(sign), twist});
    return r;
  }
  static ArchRep character(const ArchCharacter& c) { return character(c.sign, c.twist); }

  // kappa == 1 is stored as 1 + sgn
  static ArchRep discrete(int kappa, Rational twist = Rational(0)) {
    ArchRep r;
    r.add_discrete(kappa, twist);
    return r;
  }

  const std::vector<ArchCharacter>& characters() const { return chars_; }
  const std::vector<ArchDiscrete>& discretes() const { return discs_; }

  int dim() const { return static_cast<int>(chars_.size() + 2 * discs_.size()); }
  bool empty() const { return chars_.empty() && discs_.empty(); }

  ArchRep& operator+=(const ArchRep& o) {
    chars_.insert(chars_.end(), o.chars_.begin(), o.chars_.end());
    discs_.insert(discs_.end(), o.discs_.begin(), o.discs_.end());
    normalize();
    return *this;
  }
  friend ArchRep operator+(ArchRep a, const ArchRep& b) { return a += b; }

  friend bool operator==(const ArchRep&, const ArchRep&) = default;

  // Insert one constituent; phi_1 is split into 1 + sgn.
  void add_character(const ArchCharacter& c) {
    chars_.push_back({mod2(c.sign), c.twist});
    normalize();
  }
  void add_discrete(int kappa, const Rational& twist) {
    if (kappa < 1) throw DomainError("phi_kappa needs kappa >= 1, got " + std::to_string(kappa));
    if (kappa == 1) {
      chars_.push_back({0, twist});
      chars_.push_back({1, twist});
    } else {
      discs_.push_back({kappa, twist});
    }
    normalize();
  }

 private:
  void normalize() {
    std::sort(chars_.begin(), chars_.end());
    std::sort(discs_.begin(), discs_.end());
  }

  std::vector<ArchCharacter> chars_;
  std::vector<ArchDiscrete> discs_;
};

namespace detail {

inline void accumulate_tensor(std::vector<ArchCharacter>& cs, std::vector<std::pair<int, Rational>>&,
                              const ArchCharacter& a, const ArchCharacter& b) {
  cs.push_back(a * b);
}

inline void accumulate_tensor(std::vector<ArchCharacter>&, std::vector<std::pair<int, Rational>>& ds,
                              const ArchCharacter& a, const ArchDiscrete& b) {
  ds.emplace_back(b.kappa, a.twist + b.twist);
}

inline void accumulate_tensor(std::vector<ArchCharacter>&, std::vector<std::pair<int, Rational>>& ds,
                              const ArchDiscrete& a, const ArchDiscrete& b) {
  Rational t = a.twist + b.twist;
  ds.emplace_back(a.kappa + b.kappa - 1, t);
  ds.emplace_back(std::abs(a.kappa - b.kappa) + 1, t);
}

inline ArchRep assemble(const std::vector<ArchCharacter>& cs, const std::vector<std::pair<int, Rational>>& ds) {
  ArchRep acc;
  for (const auto& c : cs) acc += ArchRep::character(c);
  for (const auto& [k, t] : ds) acc += ArchRep::discrete(k, t);
  return acc;
}

}  // namespace detail

inline ArchRep tensor(const ArchRep& a, const ArchRep& b) {
  std::vector<ArchCharacter> cs;
  std::vector<std::pair<int, Rational>> ds;
  for (const auto& x : a.characters()) {
    for (const auto& y : b.characters()) detail::accumulate_tensor(cs, ds, x, y);
    for (const auto& y : b.discretes()) detail::accumulate_tensor(cs, ds, x, y);
  }
  for (const auto& x : a.discretes()) {
    for (const auto& y : b.characters()) detail::accumulate_tensor(cs, ds, y, x);
    for (const auto& y : b.discretes()) detail::accumulate_tensor(cs, ds, x, y);
  }
  return detail::assemble(cs, ds);
}

namespace detail {

// Either a character or a discrete entry, used to walk constituents in order.
struct Constituent {
  bool is_char;
  ArchCharacter c;
  ArchDiscrete d;
};

inline std::vector<Constituent> constituents(const ArchRep& a) {
  std::vector<Constituent> out;
  for (const auto& c : a.characters()) out.push_back({true, c, {}});
  for (const auto& d : a.discretes()) out.push_back({false, {}, d});
  return out;
}

inline ArchRep as_rep(const Constituent& x) {
  return x.is_char ? ArchRep::character(x.c) : ArchRep::discrete(x.d.kappa, x.d.twist);
}

template <class Square>
ArchRep square_expansion(const ArchRep& a, Square sq) {
  auto parts = constituents(a);
  ArchRep out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += sq(parts[i]);
    for (std::size_t j = i + 1; j < parts.size(); ++j) out += tensor(as_rep(parts[i]), as_rep(parts[j]));
  }
  return out;
}

}  // namespace detail

inline ArchRep sym2(const ArchRep& a) {
  return detail::square_expansion(a, [](const detail::Constituent& x) {
    if (x.is_char) return ArchRep::character(x.c * x.c);
    Rational t = 2 * x.d.twist;
    return ArchRep::discrete(2 * x.d.kappa - 1, t) + ArchRep::character(x.d.kappa - 1, t);
  });
}

inline ArchRep wedge2(const ArchRep& a) {
  return detail::square_expansion(a, [](const detail::Constituent& x) {
    if (x.is_char) return ArchRep{};
    return ArchRep::character(x.d.kappa, 2 * x.d.twist);
  });
}

inline ArchRep dual(const ArchRep& a) {
  ArchRep out;
  for (const auto& c : a.characters()) out += ArchRep::character(c.sign, -c.twist);
  for (const auto& d : a.discretes()) out += ArchRep::discrete(d.kappa, -d.twist);
  return out;
}

inline ArchRep twist(const ArchRep& a, const ArchCharacter& chi) { return tensor(a, ArchRep::character(chi)); }

inline ArchCharacter determinant(const ArchRep& a) {
  ArchCharacter det{0, Rational(0)};
  for (const auto& c : a.characters()) det = det * c;
  for (const auto& d : a.discretes()) det = det * ArchCharacter{mod2(d.kappa), 2 * d.twist};
  return det;
}

inline int hom_dim(const ArchRep& a, const ArchCharacter& chi) {
  ArchCharacter target{mod2(chi.sign), chi.twist};
  return static_cast<int>(std::count(a.characters().begin(), a.characters().end(), target));
}

using ExponentPair = std::pair<Rational, Rational>;

// Restriction to C^x: z^p zbar^q exponent pairs, sorted.
inline std::vector<ExponentPair> restrict_to_C(const ArchRep& a) {
  std::vector<ExponentPair> out;
  for (const auto& c : a.characters()) out.emplace_back(c.twist, c.twist);
  for (const auto& d : a.discretes()) {
    Rational h(d.kappa - 1, 2);
    out.emplace_back(d.twist + h, d.twist - h);
    out.emplace_back(d.twist - h, d.twist + h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when every twist has denominator dividing 2.
inline bool is_half_integral(const ArchRep& a) {
  for (const auto& c : a.characters())
    if (!is_half_integer(c.twist)) return false;
  for (const auto& d : a.discretes())
    if (!is_half_integer(d.twist)) return false;
  return true;
}

inline std::string to_string(const ArchCharacter& c) {
  std::string s = c.sign ? "sgn" : "1";
  if (c.twist != 0) s += "|.|^" + to_string(c.twist);
  return s;
}

inline std::string to_string(const ArchRep& a) {
  if (a.empty()) return "0";
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += " + ";
  };
  for (const auto& c : a.characters()) {
    sep();
    s += to_string(c);
  }
  for (const auto& d : a.discretes()) {
    sep();
    s += "phi_" + std::to_string(d.kappa);
    if (d.twist != 0) s += "|.|^" + to_string(d.twist);
  }
  return s;
}

}  // namespace glp

#endif
