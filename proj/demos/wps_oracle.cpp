// Checks Riemann-Roch against monomial counts on the toric spaces.
#include <iostream>

#include "qfano/qfano.hpp"

int main() {
  for (const auto& w : qfano::toric_spaces()) {
    auto rep = qfano::oracle_compare(w, 2 * w.q());
    std::cout << "P(" << w.to_string() << ")  q=" << w.q() << "  basket {" << qfano::to_string(rep.basket)
              << "}  A^3=" << qfano::to_string(rep.a_cubed) << "  mismatches=" << rep.mismatches.size() << '\n';
  }
  qfano::WeightedProjectiveSpace p{{3, 4, 5, 7}};
  std::cout << "\nh0(kA) on P(3,4,5,7):";
  for (int k = 0; k <= 19; ++k) std::cout << ' ' << qfano::monomial_count(p, k);
  std::cout << '\n';
}
