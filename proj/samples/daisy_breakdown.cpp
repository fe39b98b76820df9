// Prints the structural breakdown of a daisy next to the exact values.
// usage: daisy_breakdown LEN LEN ...   (petal cycle lengths, default 4 4)
#include <cstdlib>
#include <iostream>

#include "cactusdim/cactusdim.hpp"

using namespace cactusdim;

int main(int argc, char** argv) {
  std::vector<int> petals;
  for (int i = 1; i < argc; ++i) petals.push_back(std::atoi(argv[i]));
  if (petals.empty()) petals = {4, 4};
  Graph g = make::daisy(petals);
  auto d = structural_dimensions(g);
  auto dim = exact_dimension(g, DimensionMode::vertex);
  auto edim = exact_dimension(g, DimensionMode::edge);
  std::cout << breakdown_record(g, d, &dim, &edim).dump(2) << '\n';
  return d.dim_formula == dim.size && d.edim_formula == edim.size ? 0 : 1;
}
