#include <gtest/gtest.h>

#include <semimod/congruence.hpp>
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

std::vector<oracle::Table> tables_up_to(std::size_t n) {
  std::vector<oracle::Table> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto const& t : oracle::all_tables(k)) out.push_back(t);
  return out;
}

std::vector<std::vector<std::size_t>> class_lists(Congruence const& C) {
  auto cl = C.classes();
  return {cl.begin(), cl.end()};
}

}  // namespace

TEST(Closure, EmptySeedsGiveIdentity) {
  auto C = congruence_closure(cyclic_monoid(4, 2), {});
  EXPECT_TRUE(C.is_identity());
  EXPECT_EQ(C.class_count(), 6u);
}

TEST(Closure, MergingTheTailOfC42) {
  auto M = cyclic_monoid(4, 2);
  auto C = congruence_closure(M, {{4, 5}});
  EXPECT_EQ(C.class_count(), 5u);
  EXPECT_EQ(class_lists(C), (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}, {4, 5}}));
  EXPECT_EQ(quotient(C).monoid.size(), 5u);
}

TEST(Closure, MatchesOracleOnAllSmallTables) {
  for (auto const& t : tables_up_to(4)) {
    auto M = validate_monoid(t);
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        auto C = congruence_closure(M, {{a, b}});
        auto rel = oracle::smallest_congruence(t, {{a, b}});
        for (std::size_t x = 0; x < t.size(); ++x)
          for (std::size_t y = 0; y < t.size(); ++y) ASSERT_EQ(C.related(x, y), rel[x][y]);
      }
  }
}

TEST(Closure, RejectsOutOfRangeSeeds) {
  EXPECT_EQ(kind_of([] { congruence_closure(cyclic_group(2), {{0, 2}}); }), ErrorKind::OutOfRange);
}

TEST(Congruence, FromLabelsRejectsNonCongruence) {
  // {0} {1, 2} in ℤ/3 is not translation invariant
  EXPECT_EQ(kind_of([] { Congruence::from_labels(cyclic_group(3), {0, 1, 1}); }),
            ErrorKind::NotACongruence);
}

TEST(Quotient, ClassOfZeroFirstAndNuIsSurjectiveHom) {
  for (auto const& t : tables_up_to(3)) {
    auto M = validate_monoid(t);
    for (auto const& C : enumerate_congruences(M)) {
      auto Q = quotient(C);
      EXPECT_EQ(Q.nu(0), 0u);
      EXPECT_TRUE(Q.nu.is_surjective());
      EXPECT_EQ(Q.monoid.size(), C.class_count());
      for (Element a = 0; a < M.size(); ++a)
        for (Element b = 0; b < M.size(); ++b) {
          EXPECT_EQ(Q.nu(M.add(a, b)), Q.monoid.add(Q.nu(a), Q.nu(b)));
          EXPECT_EQ(C.related(a, b), Q.nu(a) == Q.nu(b));
        }
    }
  }
}

TEST(Quotient, IdentityAndTotal) {
  auto M = direct_sum_counterexample();
  auto Q = quotient(Congruence::identity(M));
  EXPECT_EQ(Q.nu, hom_check(M, Q.monoid, {0, 1, 2, 3}));
  EXPECT_EQ(quotient(Congruence::all(M)).monoid.size(), 1u);
}

TEST(Kernel, InjectiveZeroAndParity) {
  auto M = cyclic_monoid(4, 2);
  EXPECT_TRUE(kernel_congruence(identity_hom(M)).is_identity());
  EXPECT_EQ(kernel_congruence(zero_hom(M, cyclic_group(2))).class_count(), 1u);
  auto parity = hom_check(M, cyclic_group(2), {0, 1, 0, 1, 0, 1});
  EXPECT_EQ(class_lists(kernel_congruence(parity)),
            (std::vector<std::vector<std::size_t>>{{0, 2, 4}, {1, 3, 5}}));
}

TEST(FactorThrough, HomomorphismTheorem) {
  auto M = cyclic_monoid(4, 2);
  auto parity = hom_check(M, cyclic_group(2), {0, 1, 0, 1, 0, 1});
  auto id = factor_through(parity, Congruence::identity(M));
  EXPECT_EQ(id.image(), parity.image());
  auto ker = factor_through(parity, kernel_congruence(parity));
  EXPECT_TRUE(ker.is_injective());
  EXPECT_EQ(kind_of([&] { factor_through(parity, Congruence::all(M)); }),
            ErrorKind::HypothesisFails);
}

TEST(Coequalizer, ChainCongruenceBasics) {
  auto Z2 = cyclic_group(2);
  EXPECT_TRUE(chain_congruence(identity_hom(Z2), identity_hom(Z2)).is_identity());
  auto q = coequalizer_finite(identity_hom(Z2), zero_hom(Z2, Z2));
  EXPECT_EQ(q.monoid.size(), 1u);
}

TEST(Coequalizer, UniversalPropertyAgainstBruteForce) {
  auto const tables = oracle::tables_up_to_iso(3);
  std::size_t checked = 0;
  for (auto const& ts : tables)
    for (auto const& tm : tables) {
      auto S = validate_monoid(ts), M = validate_monoid(tm);
      auto hs = enumerate_homs(S, M);
      for (auto const& f : hs)
        for (auto const& g : hs) {
          auto q = coequalizer_finite(f, g);
          for (Element s = 0; s < S.size(); ++s) ASSERT_EQ(q.nu(f(s)), q.nu(g(s)));
          for (auto const& tp : tables) {
            for (auto const& h : oracle::homs(tm, tp)) {
              bool coequalizes = true;
              for (Element s = 0; s < S.size(); ++s) coequalizes &= h[f(s)] == h[g(s)];
              if (!coequalizes) continue;
              std::size_t factorizations = 0;
              for (auto const& k : oracle::homs(q.monoid.table(), tp)) {
                bool ok = true;
                for (Element m = 0; m < M.size(); ++m) ok &= k[q.nu(m)] == h[m];
                factorizations += ok;
              }
              ASSERT_EQ(factorizations, 1u);
              ++checked;
            }
          }
        }
    }
  EXPECT_GT(checked, 1000u);
}

TEST(Coequalizer, ProbePasses) {
  auto M = cyclic_monoid(2, 2);
  auto f = hom_check(cyclic_monoid(1, 1), M, {0, 2});
  auto g = zero_hom(cyclic_monoid(1, 1), M);
  auto r = probe_coequalizer(f, g, 3);
  EXPECT_TRUE(r.passed) << r.failure;
  EXPECT_GT(r.admissible, 0u);
}

TEST(Naive, MatchesDefinition) {
  for (auto const& ts : oracle::tables_up_to_iso(3))
    for (auto const& tm : oracle::tables_up_to_iso(3)) {
      auto S = validate_monoid(ts), M = validate_monoid(tm);
      for (auto const& f : enumerate_homs(S, M))
        for (auto const& g : enumerate_homs(S, M)) {
          auto C = naive_congruence(f, g);
          // m ~ m' iff m + f(n) + g(n') = m' + f(n') + g(n), then transitive closure
          std::vector<std::pair<std::size_t, std::size_t>> related;
          for (Element m = 0; m < M.size(); ++m)
            for (Element mp = 0; mp < M.size(); ++mp)
              for (Element n = 0; n < S.size(); ++n)
                for (Element np = 0; np < S.size(); ++np)
                  if (tm[tm[m][f(n)]][g(np)] == tm[tm[mp][f(np)]][g(n)]) related.emplace_back(m, mp);
          auto want = oracle::smallest_congruence(tm, related);
          for (Element a = 0; a < M.size(); ++a)
            for (Element b = 0; b < M.size(); ++b) {
              bool direct = std::find(related.begin(), related.end(), std::pair{a, b}) != related.end();
              if (direct) {
                EXPECT_TRUE(C.related(a, b));
              }
              if (C.related(a, b)) {
                EXPECT_TRUE(want[a][b]);
              }
            }
        }
    }
}

TEST(Naive, SaturatingChainWithIdentityMapsIsOneClass) {
  auto N = summand_counterexample();
  auto C = naive_congruence(identity_hom(N), identity_hom(N));
  EXPECT_TRUE(C.related(1, 2));
  EXPECT_EQ(C.class_count(), 1u);
}

TEST(Bourne, DefinitionAndEdgeCases) {
  auto M = cyclic_monoid(2, 3);
  EXPECT_TRUE(bourne_congruence(M, {0}).is_identity());
  Subset all(M.size());
  std::iota(all.begin(), all.end(), Element{0});
  EXPECT_EQ(bourne_congruence(M, all).class_count(), 1u);
  EXPECT_EQ(kind_of([&] { bourne_congruence(M, {0, 1}); }), ErrorKind::NotASubmonoid);
  for (auto const& t : oracle::tables_up_to_iso(4)) {
    auto A = validate_monoid(t);
    Budget budget(Budget::kDefault);
    for (auto const& K : enumerate_submonoids(A, budget)) {
      auto C = bourne_congruence(A, K);
      for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
          bool direct = false;
          for (auto k : K)
            for (auto kp : K) direct |= t[a][k] == t[b][kp];
          EXPECT_EQ(C.related(a, b), direct);
        }
      auto z = zero_class(C);
      EXPECT_TRUE(std::includes(z.begin(), z.end(), K.begin(), K.end()));
    }
  }
}

TEST(Bourne, ChainCongruenceOfInclusionAndZero) {
  auto M = cyclic_monoid(3, 2);
  auto K = restrict_to(M, submonoid_generated(M, {2}));
  auto C = chain_congruence(K.inclusion, zero_hom(K.monoid, M));
  EXPECT_EQ(C, bourne_congruence(M, K.members));
}

TEST(ZeroClass, Extremes) {
  auto M = cyclic_group(4);
  EXPECT_EQ(zero_class(Congruence::identity(M)), (Subset{0}));
  EXPECT_EQ(zero_class(Congruence::all(M)), (Subset{0, 1, 2, 3}));
}

TEST(KernelPair, DiagonalFullAndUniversal) {
  auto M = cyclic_group(3);
  EXPECT_EQ(kernel_pair(identity_hom(M)).rel.monoid.size(), 3u);
  EXPECT_EQ(kernel_pair(zero_hom(M, cyclic_group(2))).rel.monoid.size(), 9u);

  auto C = cyclic_monoid(4, 2);
  auto parity = hom_check(C, cyclic_group(2), {0, 1, 0, 1, 0, 1});
  auto kp = kernel_pair(parity);
  EXPECT_EQ(compose(parity, kp.p1), compose(parity, kp.p2));
  // any u, v with f∘u = f∘v factor through Rel
  for (auto const& u : enumerate_homs(cyclic_monoid(1, 2), C))
    for (auto const& v : enumerate_homs(cyclic_monoid(1, 2), C)) {
      if (!(compose(parity, u) == compose(parity, v))) continue;
      auto w = pairing_hom(u, v, kp);
      EXPECT_EQ(compose(kp.p1, w), u);
      EXPECT_EQ(compose(kp.p2, w), v);
    }
}

TEST(EnumerateCongruences, CountsAndCap) {
  EXPECT_EQ(enumerate_congruences(trivial_monoid()).size(), 1u);
  EXPECT_EQ(enumerate_congruences(cyclic_group(2)).size(), 2u);
  EXPECT_EQ(enumerate_congruences(cyclic_group(4)).size(), 3u);
  for (auto const& t : tables_up_to(4)) {
    std::size_t want = 0;
    for (auto const& lab : oracle::partitions(t.size())) want += oracle::is_congruence(t, lab);
    EXPECT_EQ(enumerate_congruences(validate_monoid(t)).size(), want);
  }
  EXPECT_EQ(kind_of([] { enumerate_congruences(cyclic_group(7)); }), ErrorKind::BudgetExceeded);
}

TEST(Meet, IsIntersection) {
  auto M = cyclic_group(6);
  auto a = congruence_closure(M, {{0, 2}}), b = congruence_closure(M, {{0, 3}});
  EXPECT_TRUE(meet(a, b).is_identity());
  EXPECT_TRUE(meet(a, b).is_finer_than(a));
}
