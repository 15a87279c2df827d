#include <gtest/gtest.h>

#include <random>

#include <semimod/semiideal.hpp>

#include "oracles.hpp"

using namespace semimod;
using oracle::u64;

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

}  // namespace

TEST(Semiideal, Membership) {
  Semiideal M({4, 6});
  EXPECT_TRUE(M.contains(0));
  EXPECT_FALSE(M.contains(2));
  EXPECT_TRUE(M.contains(10));
  Semiideal P({4, 10});  // {0, 4} ∪ {8 + 2n}
  EXPECT_FALSE(P.contains(6));
  EXPECT_TRUE(P.contains(8));
  EXPECT_TRUE(P.contains(4));
  Semiideal Z;
  EXPECT_TRUE(Z.contains(0));
  EXPECT_FALSE(Z.contains(5));
}

TEST(Semiideal, MembershipMatchesSieve) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<u64> g(1 + rng() % 4);
    for (auto& x : g) x = 1 + rng() % 30;
    Semiideal M(g);
    auto in = oracle::members(g, 500);
    // query out of order to exercise table growth
    for (u64 n = 500; n-- > 0;) ASSERT_EQ(M.contains(n), in[n]) << n;
  }
}

TEST(Semiideal, PeriodAndFooting) {
  EXPECT_EQ(period(Semiideal({4, 6})), 2u);
  EXPECT_EQ(period(Semiideal({3, 5})), 1u);
  EXPECT_EQ(footing(Semiideal({3, 5})), 8u);
  EXPECT_EQ(footing(Semiideal({4, 6})), 4u);
  EXPECT_EQ(footing(Semiideal({4, 10})), 8u);
  for (u64 d = 1; d <= 12; ++d) EXPECT_EQ(footing(Semiideal({d})), d);
  EXPECT_EQ(kind_of([] { Semiideal().period(); }), ErrorKind::EmptyIdeal);
  EXPECT_EQ(kind_of([] { Semiideal({0}).footing(); }), ErrorKind::EmptyIdeal);
}

TEST(Semiideal, FootingMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<u64> g(1 + rng() % 5);
    u64 d = 1 + rng() % 5;
    for (auto& x : g) x = d * (1 + rng() % 25);
    EXPECT_EQ(Semiideal(g).footing(), oracle::footing(g));
  }
}

TEST(PeriodicCore, Values) {
  EXPECT_EQ(perc(Semiideal({4, 6})), (PeriodicCore{4, 2}));
  EXPECT_EQ(perc(Semiideal({3, 5})), (PeriodicCore{8, 1}));
  EXPECT_EQ(perc(Semiideal({9})), (PeriodicCore{9, 9}));
  auto p = perc(Semiideal({4, 10}));
  EXPECT_TRUE(p.contains(0));
  EXPECT_FALSE(p.contains(4));
  EXPECT_TRUE(p.contains(8));
  EXPECT_FALSE(p.contains(9));
}

TEST(FootingTwoGenerators, ClosedFormAndDegenerateCases) {
  EXPECT_EQ(footing_two_generators(3, 5), 8u);
  EXPECT_EQ(footing_two_generators(4, 6), 4u);
  EXPECT_EQ(footing_two_generators(7, 7), 7u);
  EXPECT_EQ(footing_two_generators(2, 4), 2u);
  EXPECT_EQ(footing_two_generators(1, 9), 1u);
  EXPECT_EQ(kind_of([] { footing_two_generators(0, 3); }), ErrorKind::PreconditionFailed);
  for (u64 a = 1; a <= 30; ++a)
    for (u64 b = 1; b <= 30; ++b) EXPECT_EQ(footing_two_generators(a, b), oracle::footing({a, b}));
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(minimal_generators(Semiideal({4, 6})), (std::vector<u64>{4, 6}));
  EXPECT_EQ(minimal_generators(Semiideal({4, 10, 12, 8, 14})), (std::vector<u64>{4, 10}));
  EXPECT_EQ(minimal_generators(Semiideal({6, 10, 15})), (std::vector<u64>{6, 10, 15}));
  EXPECT_EQ(minimal_generators(Semiideal({5, 10, 15})), (std::vector<u64>{5}));
  EXPECT_TRUE(is_cyclic(Semiideal({6})));
  EXPECT_FALSE(is_cyclic(Semiideal({4, 6})));
  EXPECT_FALSE(is_cyclic(Semiideal({4, 10})));
  EXPECT_EQ(kind_of([] { minimal_generators(Semiideal()); }), ErrorKind::EmptyIdeal);
}

TEST(MinimalGenerators, AreTheIrreducibleMembers) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<u64> g(1 + rng() % 6);
    for (auto& x : g) x = 1 + rng() % 50;
    Semiideal M(g);
    auto X = minimal_generators(M);
    EXPECT_EQ(X, oracle::irreducibles(g, *std::max_element(g.begin(), g.end())));
    EXPECT_LE(X.size(), X.front() / M.period());
  }
}

TEST(DifferenceWitness, Construction) {
  EXPECT_EQ(difference_witness_core(Semiideal({4, 6}), 4, 2), 48u);
  EXPECT_EQ(difference_witness_core(Semiideal({3, 5}), 3, 2), 30u);
  EXPECT_EQ(difference_witness_core(Semiideal({5}), 5, 5), 250u);
  EXPECT_EQ(kind_of([] { difference_witness_core(Semiideal({4, 6}), 2, 2); }),
            ErrorKind::PreconditionFailed);
}

TEST(Bezout, NonnegativeSolutions) {
  auto s = bezout_nonneg(3, 5);
  ASSERT_TRUE(s);
  EXPECT_EQ(3 * s->r + 5 * s->s, 8u);
  EXPECT_FALSE(bezout_nonneg(4, 6));
  EXPECT_EQ(bezout_nonneg(1, 9), (BezoutPair{0, 0}));
  EXPECT_EQ(kind_of([] { bezout_nonneg(0, 4); }), ErrorKind::PreconditionFailed);
  for (u64 a = 1; a <= 60; ++a)
    for (u64 b = 1; b <= 60; ++b) {
      auto r = bezout_nonneg(a, b);
      EXPECT_EQ(r.has_value(), oracle::bezout_exists(a, b)) << a << " " << b;
      if (r) {
        EXPECT_EQ(r->r * a + r->s * b, (a - 1) * (b - 1));
      }
    }
  auto big = bezout_nonneg(1'000'003, 999'983);
  ASSERT_TRUE(big);
  EXPECT_EQ(big->r * 1'000'003 + big->s * 999'983, 1'000'002ull * 999'982ull);
}

TEST(Bezout, Scaled) {
  EXPECT_EQ(bezout_nonneg_scaled(4, 6, 2), (BezoutPair{1, 0}));
  EXPECT_EQ(bezout_nonneg_scaled(6, 9, 3), (BezoutPair{1, 0}));
  EXPECT_FALSE(bezout_nonneg_scaled(4, 8, 2));
  EXPECT_EQ(kind_of([] { bezout_nonneg_scaled(4, 6, 4); }), ErrorKind::NotDivisible);
}
