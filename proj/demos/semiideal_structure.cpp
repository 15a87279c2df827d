// Period, footing and canonical generators of a few semiideals of ℕ₀.
#include <iostream>

#include <semimod/cli.hpp>

int main() {
  using namespace semimod;
  std::vector<std::vector<std::uint64_t>> const examples = {
      {3, 5}, {4, 6}, {4, 10, 12, 8, 14}, {6, 10, 15}, {9}, {12, 18, 27}};
  for (auto const& g : examples) {
    Semiideal M(g);
    auto r = io::report(M);
    std::cout << "<" << cli::detail::join(g, ", ") << ">\n"
              << "  period " << r.period << ", footing " << r.footing << ", minimal generators "
              << cli::detail::join(r.minimal_generators, ", ") << '\n'
              << "  members below 20:";
    for (std::uint64_t n = 0; n < 20; ++n)
      if (M.contains(n)) std::cout << ' ' << n;
    std::cout << "\n  quotient ℕ₀/M is ℤ/" << bourne_nat_quotient(g).quotient.period << '\n';
  }

  std::cout << "\ntwo generators, footing vs (a-1)(b-1) for coprime pairs\n";
  for (std::uint64_t a = 2; a <= 7; ++a)
    for (std::uint64_t b = a + 1; b <= 9; ++b)
      if (std::gcd(a, b) == 1) {
        auto s = bezout_nonneg(a, b);
        std::cout << "  " << a << ", " << b << ": footing " << footing_two_generators(a, b);
        if (s) std::cout << " = " << s->r << "·" << a << " + " << s->s << "·" << b;
        std::cout << '\n';
      }
}
