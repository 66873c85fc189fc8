#ifndef GLP_SELF_DUAL_HPP
#define GLP_SELF_DUAL_HPP

#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/period_algebra.hpp"
#include "glp/weil_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace glp {

enum class SelfDuality { Orthogonal, Symplectic, Neither };

inline const char* to_string(SelfDuality v) {
  switch (v) {
    case SelfDuality::Orthogonal: return "orthogonal";
    case SelfDuality::Symplectic: return "symplectic";
    case SelfDuality::Neither: return "neither";
  }
  return "?";
}

struct Classification {
  SelfDuality verdict = SelfDuality::Neither;
  int hom_sym2 = 0;    // dim Hom(Sym^2 phi, chi)
  int hom_wedge2 = 0;  // dim Hom(wedge^2 phi, chi)
  int chi_sign = 1;    // eps(chi_inf), defined for integral twists
};

inline Classification classify(const ArchRep& phi, const ArchCharacter& chi) {
  Classification c;
  c.hom_sym2 = hom_dim(sym2(phi), chi);
  c.hom_wedge2 = hom_dim(wedge2(phi), chi);
  if (c.hom_sym2 > 0)
    c.verdict = SelfDuality::Orthogonal;
  else if (c.hom_wedge2 > 0)
    c.verdict = SelfDuality::Symplectic;
  if (is_integer(chi.twist)) c.chi_sign = character_sign(chi.sign, static_cast<int>(chi.twist.numerator()));
  return c;
}

inline Classification classify(const InfinityType& pi, const ArchCharacter& chi) {
  return classify(to_arch_rep(pi), chi);
}

// sgn^{w-1} |.|^w for orthogonal, sgn^w |.|^w for symplectic
inline ArchCharacter self_dual_character(const InfinityType& pi, bool orthogonal) {
  validate(pi);
  return {mod2(pi.w - (orthogonal ? 1 : 0)), Rational(pi.w)};
}

struct AsaiResult {
  int kappa_hi = 0, kappa_lo = 0, w = 0;  // (kappa_hi, kappa_lo; w) on GL(4)
  bool valid_type = false;                // kappa_lo >= 2
  bool regular = false;                   // min(kappa1, kappa2) >= 3 or 4
  ArchRep parameter;                      // phi_1 (x) phi_2 (x) |.|^{1/2}
  ArchCharacter chi;                      // chi_inf = sgn^{k1+k2} |.|^{w1+w2+1}
  Classification classification;
  std::string gauss_label;                // character in the Gauss factor of the ratio

  InfinityType type() const { return InfinityType{4, {kappa_hi, kappa_lo}, w, 0}; }
};

inline void validate_gl2(int kappa, int w) {
  InfinityType t{2, {kappa}, w, 0};
  validate(t);
}

inline AsaiResult asai(int k1, int w1, int k2, int w2) {
  validate_gl2(k1, w1);
  validate_gl2(k2, w2);
  AsaiResult a;
  a.kappa_hi = k1 + k2 - 1;
  a.kappa_lo = std::abs(k1 - k2) + 1;
  a.w = w1 + w2 + 1;
  a.valid_type = a.kappa_lo >= 2;
  a.regular = std::min(k1, k2) >= (mod2(k1 + k2) == 0 ? 3 : 4) && a.valid_type;
  a.parameter = tensor(ArchRep::discrete(k1, Rational(w1, 2)), ArchRep::discrete(k2, Rational(w2, 2)));
  a.parameter = twist(a.parameter, ArchCharacter{0, Rational(1, 2)});
  a.chi = {mod2(k1 + k2), Rational(w1 + w2 + 1)};
  a.classification = classify(a.parameter, a.chi);
  a.gauss_label = asai_data().eta0().gauss_label();
  return a;
}

}  // namespace glp

#endif
