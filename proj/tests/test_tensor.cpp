#include <gtest/gtest.h>

#include <semimod/tensor.hpp>
#include <semimod/verify.hpp>

#include "oracles.hpp"

using namespace semimod;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

std::vector<FiniteCommMonoid> corpus(std::size_t n) {
  std::vector<FiniteCommMonoid> out;
  for (auto const& t : oracle::tables_up_to_iso(n)) out.push_back(validate_monoid(t));
  return out;
}

/// |M ⊗ N| from the universal property alone: the representing object is
/// pinned down by counting, for each candidate A, biadditive maps into A.
bool satisfies_universal_property(TensorProduct const& T, std::vector<oracle::Table> const& targets) {
  for (auto const& A : targets) {
    auto maps = oracle::biadditive_maps(T.left.table(), T.right.table(), A);
    auto hs = oracle::homs(T.monoid.table(), A);
    if (maps.size() != hs.size()) return false;
    // h ↦ h ∘ ⊗ must be a bijection onto the biadditive maps
    std::set<oracle::Table> seen;
    for (auto const& h : hs) {
      oracle::Table f(T.left.size(), std::vector<std::size_t>(T.right.size()));
      for (Element m = 0; m < T.left.size(); ++m)
        for (Element n = 0; n < T.right.size(); ++n) f[m][n] = h[T.tensor(m, n)];
      if (std::find(maps.begin(), maps.end(), f) == maps.end()) return false;
      seen.insert(f);
    }
    if (seen.size() != hs.size()) return false;
  }
  return true;
}

}  // namespace

TEST(TensorProduct, SmallExamples) {
  auto Z2 = cyclic_group(2), Z3 = cyclic_group(3);
  EXPECT_EQ(tensor_product(trivial_monoid(), Z3).monoid.size(), 1u);
  EXPECT_EQ(tensor_product(Z2, Z3).monoid.size(), 1u);
  auto z22 = tensor_product(Z2, Z2);
  EXPECT_TRUE(oracle::is_iso(z22.monoid.table(), Z2.table()));
  EXPECT_EQ(z22.tensor(1, 1), 1u);
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n) {
      if (m * n > 18) continue;  // box volume past the default budget
      auto T = tensor_product(cyclic_group(m), cyclic_group(n));
      EXPECT_TRUE(oracle::is_iso(T.monoid.table(), cyclic_group(std::gcd(m, n)).table()));
    }
}

TEST(TensorProduct, FrozenSizesOnCorpus) {
  // sizes checked against the universal property in the next test
  auto const C = corpus(3);
  std::vector<std::size_t> sizes;
  for (auto const& M : C)
    for (auto const& N : C) sizes.push_back(tensor_product(M, N).monoid.size());
  std::vector<std::size_t> const expected = {
      1, 1, 1, 1, 1, 1, 1, 1,  //
      1, 2, 1, 1, 1, 1, 2, 1,  //
      1, 1, 2, 2, 1, 2, 2, 3,  //
      1, 1, 2, 2, 1, 2, 3, 3,  //
      1, 1, 1, 1, 3, 1, 1, 1,  //
      1, 1, 2, 2, 1, 3, 2, 3,  //
      1, 2, 2, 3, 1, 2, 3, 3,  //
      1, 1, 3, 3, 1, 3, 3, 6};
  EXPECT_EQ(sizes, expected);
}

TEST(TensorProduct, UniversalPropertyOnCorpus) {
  auto const C = corpus(3);
  std::vector<oracle::Table> targets = oracle::all_tables(1);
  for (std::size_t n = 2; n <= 3; ++n)
    for (auto const& t : oracle::all_tables(n)) targets.push_back(t);
  for (auto const& M : C)
    for (auto const& N : C) {
      auto T = tensor_product(M, N);
      EXPECT_TRUE(balanced_check(M, N, T.monoid, T.bilinear).balanced);
      EXPECT_TRUE(satisfies_universal_property(T, targets));
    }
}

TEST(TensorProduct, GeneratorOrderDoesNotMatter) {
  auto M = cyclic_monoid(1, 2), N = saturating_chain(3);
  auto T = tensor_product(M, N);
  TensorOptions opt;
  opt.generator_order = std::vector<std::size_t>{3, 1, 2, 0};
  auto U = tensor_product(M, N, opt);
  EXPECT_TRUE(oracle::is_iso(T.monoid.table(), U.monoid.table()));
  opt.generator_order = std::vector<std::size_t>{0, 1, 1, 2};
  EXPECT_EQ(kind_of([&] { tensor_product(M, N, opt); }), ErrorKind::InvalidInput);
}

TEST(TensorProduct, BudgetExceeded) {
  TensorOptions opt;
  opt.budget = 4;
  EXPECT_EQ(kind_of([&] { tensor_product(cyclic_group(5), cyclic_group(5), opt); }),
            ErrorKind::BudgetExceeded);
}

TEST(TensorProduct, NotInjectiveOnPairs) {
  auto M = cyclic_monoid(2, 1);
  auto T = tensor_product(M, M);
  EXPECT_EQ(T.tensor(1, 0), T.tensor(2, 0));
}

TEST(Balanced, DetectsEachAxiom) {
  auto Z2 = cyclic_group(2);
  auto T = tensor_product(Z2, Z2);
  BilinearTable zero(2, std::vector<Element>(2, 0));
  EXPECT_TRUE(balanced_check(Z2, Z2, Z2, zero).balanced);
  auto bad = T.bilinear;
  bad[1][1] = 0;
  bad[1][0] = 1;
  auto v = balanced_check(Z2, Z2, T.monoid, bad);
  EXPECT_FALSE(v.balanced);
  EXPECT_FALSE(v.witness.empty());

  auto N = saturating_chain(2);
  BilinearTable f{{0, 0}, {0, 1}};
  EXPECT_TRUE(balanced_check(N, N, N, f).balanced);
  BilinearTable g{{0, 1}, {0, 1}};  // f(0, 1) ≠ 0
  auto w = balanced_check(N, N, N, g);
  EXPECT_FALSE(w.balanced);
  EXPECT_EQ(kind_of([&] { balanced_check(N, N, N, {{0, 0}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { balanced_check(N, N, N, {{0, 0}, {0, 5}}); }), ErrorKind::OutOfRange);
}

TEST(UniversalFactorization, IdentityZeroAndRejection) {
  auto M = cyclic_group(3), N = cyclic_group(3);
  auto T = tensor_product(M, N);
  EXPECT_EQ(universal_factorization(T, T.monoid, T.bilinear), identity_hom(T.monoid));
  BilinearTable zero(3, std::vector<Element>(3, 0));
  EXPECT_EQ(universal_factorization(T, M, zero), zero_hom(T.monoid, M));
  auto bad = T.bilinear;
  bad[1][1] = 0;
  EXPECT_EQ(kind_of([&] { universal_factorization(T, T.monoid, bad); }), ErrorKind::NotBalanced);
}

TEST(InducedMap, Functoriality) {
  auto const C = corpus(3);
  for (auto const& M : C)
    for (auto const& N : C) {
      auto T = tensor_product(M, N);
      EXPECT_EQ(induced_map(identity_hom(M), identity_hom(N), T, T), identity_hom(T.monoid));
      for (auto const& Mp : C) {
        auto Tp = tensor_product(Mp, N);
        auto fs = enumerate_homs(M, Mp);
        for (auto const& f : fs) {
          auto fz = induced_map(f, identity_hom(N), T, Tp);
          for (Element m = 0; m < M.size(); ++m)
            for (Element n = 0; n < N.size(); ++n) EXPECT_EQ(fz(T.tensor(m, n)), Tp.tensor(f(m), n));
        }
        auto z = induced_map(zero_hom(M, Mp), identity_hom(N), T, Tp);
        EXPECT_EQ(z, zero_hom(T.monoid, Tp.monoid));
      }
    }
}

TEST(InducedMap, CompositionOfInducedMaps) {
  auto A = cyclic_monoid(1, 2), B = cyclic_group(2), D = saturating_chain(2);
  auto f = enumerate_homs(A, B), g = enumerate_homs(B, D);
  auto TA = tensor_product(A, A), TB = tensor_product(B, A), TD = tensor_product(D, A);
  auto id = identity_hom(A);
  for (auto const& x : f)
    for (auto const& y : g)
      EXPECT_EQ(induced_map(compose(y, x), id, TA, TD),
                compose(induced_map(y, id, TB, TD), induced_map(x, id, TA, TB)));
}

TEST(FreeTensor, RightUnitAndBiproduct) {
  auto M = cyclic_monoid(2, 2);
  auto one = tensor_with_free(M, {"x"});
  EXPECT_TRUE(oracle::is_iso(one.monoid().table(), M.table()));
  EXPECT_TRUE(one.unique_representation);
  EXPECT_EQ(tensor_with_free(M, {}).monoid().size(), 1u);
  auto two = tensor_with_free(cyclic_group(2), {"x", "y"});
  EXPECT_EQ(two.monoid().size(), 4u);
  EXPECT_TRUE(two.unique_representation);
  EXPECT_NE(two.represent(1, 0), two.represent(1, 1));
}

TEST(Coherence, AssociatorSymmetryAndNaturality) {
  auto Z2 = cyclic_group(2), Z3 = cyclic_group(3);
  auto a = associativity_iso(Z2, Z2, Z2);
  EXPECT_TRUE(a.alpha.verified);
  EXPECT_EQ(a.mn_p.monoid.size(), 2u);
  auto t = associativity_iso(trivial_monoid(), Z3, Z2);
  EXPECT_TRUE(t.alpha.verified);
  EXPECT_EQ(t.m_np.monoid.size(), 1u);

  auto s = symmetry_iso(Z2, Z2);
  EXPECT_EQ(s.tau.forward, identity_hom(s.mn.monoid));
  EXPECT_EQ(compose(s.tau.backward, s.tau.forward), identity_hom(s.mn.monoid));
  EXPECT_TRUE(symmetry_iso(Z2, Z3).tau.verified);

  auto const C = corpus(3);
  for (auto const& M : C)
    for (auto const& N : C) {
      auto mn = tensor_product(M, N), nm = tensor_product(N, M);
      for (auto const& Mp : C) {
        auto fs = enumerate_homs(M, Mp);
        auto mn2 = tensor_product(Mp, N), nm2 = tensor_product(N, Mp);
        for (auto const& f : fs)
          EXPECT_TRUE(symmetry_natural(f, identity_hom(N), mn, nm, mn2, nm2));
      }
    }
}

TEST(Coherence, PentagonAndTriangle) {
  auto const C = corpus(2);
  auto const D = corpus(3);
  for (auto const& A : C)
    for (auto const& B : D)
      for (auto const& E : C)
        for (auto const& F : D) EXPECT_TRUE(pentagon_commutes(A, B, E, F));
  for (auto const& A : D)
    for (auto const& B : D) EXPECT_TRUE(triangle_commutes(A, B));
}

TEST(Adjunction, CountsAndRoundTrips) {
  auto Z2 = cyclic_group(2);
  auto r = hom_adjunction_check(Z2, Z2, Z2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lhs_count, 2u);
  auto t = hom_adjunction_check(trivial_monoid(), Z2, cyclic_group(3));
  EXPECT_EQ(t.lhs_count, 1u);
  EXPECT_EQ(t.rhs_count, 1u);
  for (auto const& P : corpus(3))
    for (auto const& M : corpus(3))
      for (auto const& N : corpus(3)) {
        auto x = hom_adjunction_check(P, M, N);
        EXPECT_TRUE(x.ok());
        EXPECT_EQ(x.rhs_count, oracle::homs(P.table(), oracle::hom_table(M.table(), N.table())).size());
      }
}
