// Builds the full Lutz twist link for a few Legendrian knots and prints the
// homotopy invariants of the surgered contact structure.

#include "lutz/lutz.hpp"

#include <iostream>

int main() {
  for (const auto& [tb, rot] : {std::pair{-1, 0}, std::pair{-5, 2}, std::pair{4, -3}}) {
    const lutz::ContactSurgeryDiagram d = lutz::full_lutz_link(tb, rot);
    const lutz::HomotopyReport r = lutz::homotopy_report(d);
    std::cout << "L1 = (tb " << tb << ", rot " << rot << "):"
              << " H1 = " << r.h1.to_string()
              << ", signature = " << r.d3.inputs.signature
              << ", c^2 = " << r.d3.inputs.c_squared->str()
              << ", d3 = " << r.d3.value->str() << '\n';
  }

  const auto [book, trace] = lutz::full_lutz_on_binding(lutz::OpenBook(0, 1), {0});
  std::cout << "disk open book: genus " << trace.genus_before << " -> " << trace.genus_after << ", boundaries "
            << trace.boundaries_before << " -> " << trace.boundaries_after << ", monodromy length "
            << book.monodromy().size() << '\n';
}
