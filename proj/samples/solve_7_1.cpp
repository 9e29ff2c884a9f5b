// Solves {h, tau} = c E4 for n/m = 1/7 and prints the first coefficients of h.

#include <iostream>

#include "modschwarz/modschwarz.hpp"

int main() {
  using namespace modschwarz;
  const SolutionBundle sol = solve(7, 1, 12);
  std::cout << "h = " << to_string(sol.h) << "\n";
  std::cout << "{h}/E4 = " << to_string(sol.schwarz_constant) << "\n";
  std::cout << "y'' + s E4 y = 0 with s = " << to_string(sol.ode_parameter) << "\n";
  for (const auto& level : sol.levels)
    std::cout << "W(F_" << level.level << ") = " << to_string(level.wronskian.constant) << " * Delta^"
              << level.wronskian.exponent.get_num().get_str() << "\n";
}
