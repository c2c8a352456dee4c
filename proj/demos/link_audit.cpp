// Solves every shipped link case and prints the audit trail.
#include <iostream>

#include "qfano/qfano.hpp"

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : QFANO_CASES_DIR;
  qfano::DimThetaOracle oracle;
  qfano::SolveOptions so;
  so.audit = true;
  so.oracle = &oracle;
  for (const auto& name : qfano::list_link_cases(dir)) {
    auto lc = qfano::load_link_case(dir / (name + ".json"));
    std::cout << qfano::link_text(lc, qfano::solve_link_case(lc, so), true) << '\n';
  }
}
