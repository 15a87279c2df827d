// Tensor products of small commutative monoids and their coherence maps.
#include <iostream>

#include <semimod/cli.hpp>

int main() {
  using namespace semimod;
  auto const style = cli::LabelStyle::Overline;
  struct Named {
    char const* name;
    FiniteCommMonoid M;
  };
  std::vector<Named> const ms = {{"Z/2", cyclic_group(2)},
                                 {"Z/3", cyclic_group(3)},
                                 {"Z/4", cyclic_group(4)},
                                 {"max{0,1,2}", saturating_chain(3)},
                                 {"C(1,2)", cyclic_monoid(1, 2)}};
  for (auto const& a : ms)
    for (auto const& b : ms) {
      auto T = tensor_product(a.M, b.M);
      std::cout << a.name << " ⊗ " << b.name << ": " << T.monoid.size() << " element(s)\n";
    }

  auto T = tensor_product(saturating_chain(3), cyclic_monoid(1, 2));
  std::cout << "\nmax{0,1,2} ⊗ C(1,2):\n";
  cli::render_table(std::cout, T.monoid, style);
  std::cout << '\n';
  cli::render_grid(std::cout, "⊗", cli::element_names(T.left, style),
                   cli::element_names(T.right, style), T.bilinear,
                   cli::element_names(T.monoid, style));

  auto A = cyclic_group(2), B = saturating_chain(2);
  std::cout << std::boolalpha << "\nsymmetry inverse: " << symmetry_iso(A, B).tau.verified
            << "\nassociator inverse: " << associativity_iso(A, B, A).alpha.verified
            << "\npentagon: " << pentagon_commutes(A, B, A, B)
            << "\ntriangle: " << triangle_commutes(A, B);
  auto adj = hom_adjunction_check(A, B, A);
  std::cout << "\n|Hom(A⊗B, A)| = " << adj.lhs_count << ", |Hom(A, Hom(B, A))| = " << adj.rhs_count
            << '\n';

  auto F = tensor_with_free(cyclic_group(3), {"x", "y"});
  std::cout << "Z/3 ⊗ ℕ₀^{x,y} has " << F.monoid().size() << " elements\n";
}
