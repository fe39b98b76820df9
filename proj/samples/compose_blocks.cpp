// Builds a generator for K4 glued to a square from per-block generators.
#include <iostream>

#include "cactusdim/cactusdim.hpp"

using namespace cactusdim;

int main() {
  Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  int status = 0;
  for (auto mode : {DimensionMode::vertex, DimensionMode::edge}) {
    auto cert = compose_generator(g, mode);
    auto exact = exact_dimension(g, mode);
    std::cout << to_string(mode) << ": composed " << cert.achieved << " (bound " << cert.bound << "), exact " << exact.size
              << '\n';
    std::cout << certificate_json(cert).dump() << '\n';
    if (!cert.verified || !cert.within_bound()) status = 1;
  }
  return status;
}
