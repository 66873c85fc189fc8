// Replay of the GL(n) x GL(n-1) induction step, printed relation by relation.

#include "glp/period_algebra.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace glp;
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  const int w = argc > 2 ? std::atoi(argv[2]) : 0;
  const long m = argc > 3 ? std::atol(argv[3]) : 1;
  try {
    auto res = check_main1_step(n, w, n % 2, Rational(m));
    for (const auto& st : res.script.steps) {
      const Relation* r = res.script.find(st.relation);
      std::cout << "[" << st.exponent << "] " << st.relation << "\n    " << to_string(r->lhs) << " = "
                << to_string(r->rhs) << "\n";
    }
    for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
    std::cout << "residual: " << to_string(res.residual.value) << "\n";
    return res.trivial() ? 0 : 1;
  } catch (const DomainError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  }
}
