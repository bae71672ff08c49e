// Builds the smallest poset with automorphism group Z_n for n = 1..30 and
// checks the group with the automorphism solver.
#include <iostream>

#include "cycposet/cycposet.hpp"

int main() {
  using namespace cycposet;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const Poset p = minimal_poset(n);
    const auto g = automorphism_group(p, {.elements = Materialize::none});
    std::cout << "n=" << n << "  points=" << p.size() << "  beta=" << beta(n) << "  |Aut|=" << g.order
              << (g.cyclic ? "  cyclic" : "  not cyclic");
    if (g.generator_of_full_order) std::cout << "  generator cycle type " << cycle_type(*g.generator_of_full_order).to_string();
    std::cout << '\n';
  }
}
