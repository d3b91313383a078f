// Builds the minimal faithful (nil)representations of h_m + a_n for a few
// small (m, n), checks them, and prints the (2, 4) nil witness symbolically.

#include "heisrep/heisrep.hpp"

#include <iostream>

int main() {
  using namespace heisrep;
  std::cout << " m  n  mu_nil  dim  faithful  nil  |  mu  dim  faithful\n";
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const Representation nil = minimal_faithful_nilrep(m, n);
      const Representation rep = minimal_faithful_rep(m, n);
      std::cout << ' ' << m << "  " << n << "  " << mu_nil_value(m, n) << "       " << nil.space_dim << "    "
                << is_faithful(nil) << "         " << is_nilrepresentation(nil) << "    |  " << mu_value(m, n)
                << "   " << rep.space_dim << "    " << is_faithful(rep) << '\n';
    }
  std::cout << "\npi_{2,3} on h_2 + a_4:\n" << symbolic_text(minimal_faithful_nilrep(2, 4));
  return 0;
}
