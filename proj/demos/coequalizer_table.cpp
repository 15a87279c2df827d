// Coequalizers of multiplication maps a·, b·: ℕ₀ -> ℕ₀ and the naive relation.
#include <iostream>

#include <semimod/cli.hpp>

int main() {
  using namespace semimod;
  std::cout << " a  b   quotient\n";
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = a + 1; b <= 6; ++b) {
      auto q = coequalizer_nat(a, b);
      auto c = q.cyclic();
      std::cout << ' ' << a << "  " << b << "   C(" << c.index << ", " << c.period << ")"
                << (verify_certificates(q) ? "" : "  certificate mismatch") << '\n';
    }

  auto q = coequalizer_nat(4, 6);
  std::cout << "\nC(4, 2):\n";
  cli::render_table(std::cout, q.cyclic().monoid(), cli::LabelStyle::Overline);

  auto naive = naive_nat_classes(4, 6, 12);
  std::cout << "\nnaive relation for (4, 6) on 0..12 has " << naive.classes.size()
            << " classes, the coequalizer has " << q.cyclic().size() << '\n';

  auto several = nat_congruence_quotient({{2, 5}, {3, 7}});
  std::cout << "seeds (2,5), (3,7): C(" << several.cyclic().index << ", "
            << several.cyclic().period << ")\n";
}
