// Prints both preset tables as markdown.
#include <iostream>

#include "qfano/qfano.hpp"

int main() {
  for (const char* name : {"lemma-comput", "prop-comput"}) {
    auto p = *qfano::find_preset(name);
    auto cs = qfano::classify(p.q_min, p.q_max, p.filters);
    std::cout << "## " << name << " (q in [" << p.q_min << ", " << p.q_max << "], " << cs.size() << " rows)\n\n"
              << qfano::candidates_markdown(cs) << '\n';
  }
}
