// Critical points of L(s, Pi x Sigma) for a few GL(2) and GL(3) types, with the
// archimedean Gamma factors they come from.

#include "glp/arch_l.hpp"

#include <iostream>

int main() {
  using namespace glp;
  const InfinityType trivial{1, {}, 0, 0};
  for (int kappa : {2, 4, 12}) {
    InfinityType pi{2, {kappa}, 0, 0};
    auto pts = critical_points(pi, trivial);
    std::cout << "GL(2) " << describe(pi) << " x 1: L_inf = " << to_string(l_factor(pair_parameter(pi, trivial)))
              << "\n  " << pts.size() << " critical points:";
    for (const auto& s : pts) std::cout << " " << to_string(s);
    std::cout << "\n";
  }
  InfinityType pi{3, {5}, 0, 0};
  InfinityType sigma{2, {3}, 1, 0};
  auto pts = critical_points(pi, sigma);
  std::cout << "GL(3) " << describe(pi) << " x GL(2) " << describe(sigma) << ": " << pts.size()
            << " critical points:";
  for (const auto& s : pts) std::cout << " " << to_string(s);
  std::cout << "\n  central point " << to_string(central_point(pi, sigma))
            << (central_point_is_critical(pi, sigma) ? " (critical)" : " (not critical)") << "\n";
}
