// Sweep chi_inf over sgn^d |.|^u and print which twist makes a GL(4) type
// chi-orthogonal or chi-symplectic, next to the sign of the character.

#include "glp/self_dual.hpp"

#include <iostream>

int main() {
  using namespace glp;
  const InfinityType pi{4, {10, 4}, 2, 0};
  std::cout << "Pi_inf = " << to_string(to_arch_rep(pi)) << "\n";
  for (int u = 1; u <= 3; ++u)
    for (int d = 0; d <= 1; ++d) {
      ArchCharacter chi{d, Rational(u)};
      auto c = classify(pi, chi);
      std::cout << "  chi_inf = " << to_string(chi) << "  eps = " << (c.chi_sign > 0 ? "+1" : "-1") << "  -> "
                << to_string(c.verdict) << " (Sym^2: " << c.hom_sym2 << ", wedge^2: " << c.hom_wedge2 << ")\n";
    }
  auto a = asai(6, 0, 3, 1);
  std::cout << "Asai of (6;0) and (3;1): (" << a.kappa_hi << "," << a.kappa_lo << "; " << a.w << "), "
            << to_string(a.classification.verdict) << ", Gauss factor G(" << a.gauss_label << ")\n";
}
