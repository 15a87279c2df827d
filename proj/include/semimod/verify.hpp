#pragma once

// Self-check suites run by `semimod verify <suite>`: the printed tables,
// closed forms against brute force, and tensor coherence on small monoids.

#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "monoid.hpp"
#include "nat_coeq.hpp"
#include "semiideal.hpp"
#include "tensor.hpp"

namespace semimod {

/// {0, 1_A, 1_B, 2_B} (indices 0..3): satisfies (a) and (b) for
/// M_A = {0, 1_A}, M_B = {0, 1_B, 2_B} but not (c), as 1_A + 1_B = 0 + 2_B.
inline FiniteCommMonoid direct_sum_counterexample() {
  return validate_monoid({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
                         {"0", "1_A", "1_B", "2_B"});
}

/// {0, 1, 2} under max: {0, 1} has a retraction and an idempotent but no
/// complement.
inline FiniteCommMonoid summand_counterexample() { return saturating_chain(3); }

/// Every monoid of size 1..max_size, one per isomorphism class.
inline std::vector<FiniteCommMonoid> small_monoid_corpus(std::size_t max_size) {
  std::vector<FiniteCommMonoid> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (auto& M : enumerate_monoids(n, true)) out.push_back(std::move(M));
  return out;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (auto const& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

namespace detail {

template <typename F>
CheckResult run_check(std::string name, F&& body) {
  CheckResult r{std::move(name), false, {}};
  auto const t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (Error const& e) {
    r.detail = e.what();
  }
  auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (r.passed) r.detail = std::to_string(ms) + " ms";
  return r;
}

inline std::string fmt(std::vector<Element> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Members ≠ 0 that are not a sum of two non-zero members.
inline std::vector<std::uint64_t> irreducibles(Semiideal const& M, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (!M.contains(n)) continue;
    bool split = false;
    for (std::uint64_t k = 1; k < n && !split; ++k) split = M.contains(k) && M.contains(n - k);
    if (!split) out.push_back(n);
  }
  return out;
}

}  // namespace detail

inline SuiteReport verify_reference_tables() {
  SuiteReport rep{"paper-tables", {}};
  rep.checks.push_back(detail::run_check("coequalizer of 4·, 6· is C(4,2) with the printed table", [] {
    Table const expected = {{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 4}, {2, 3, 4, 5, 4, 5},
                            {3, 4, 5, 4, 5, 4}, {4, 5, 4, 5, 4, 5}, {5, 4, 5, 4, 5, 4}};
    auto q = coequalizer_nat(4, 6);
    if (q.is_natural() || !(q.cyclic() == CyclicMonoid{4, 2})) return std::string("not C(4,2)");
    if (q.cyclic().monoid().table() != expected) return std::string("table differs");
    if (!verify_certificates(q)) return std::string("certificates do not replay");
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("naive relation of 4·, 6· has two classes", [] {
    auto c = naive_nat_classes(4, 6, 30);
    return c.classes.size() == 2 ? std::string()
                                 : std::to_string(c.classes.size()) + " classes";
  }));
  rep.checks.push_back(detail::run_check("{0,1_A,1_B,2_B}: (a), (b) hold, (c) fails", [] {
    auto M = direct_sum_counterexample();
    auto v = internal_direct_sum_check(M, {{0, 1}, {0, 2, 3}});
    if (!v.covers || !v.criterion_b() || v.unique_decomposition || !v.collision)
      return std::string("verdict differs");
    auto [x, y] = *v.collision;
    if (M.add(x[0], x[1]) != M.add(y[0], y[1])) return std::string("collision sums differ");
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("{0,1,2} under max: retraction, idempotent, no complement", [] {
    auto N = summand_counterexample();
    auto a = direct_summand_analysis(N, {0, 1});
    if (a.complement) return std::string("unexpected complement");
    if (!a.retraction || !a.idempotent) return std::string("missing retraction or idempotent");
    auto const& p = *a.retraction;
    if (p(1) != 1 || p(2) != 1)  // {0, 1} keeps its indices
      return std::string("retraction is not p(1) = p(2) = 1");
    return std::string();
  }));
  return rep;
}

inline SuiteReport verify_oracles() {
  SuiteReport rep{"oracles", {}};
  rep.checks.push_back(detail::run_check("footing closed form vs dynamic programming, 2..60", [] {
    for (std::uint64_t a = 2; a <= 60; ++a)
      for (std::uint64_t b = 2; b <= 60; ++b)
        if (a != b && footing_two_generators(a, b) != Semiideal({a, b}).footing())
          return "a=" + std::to_string(a) + " b=" + std::to_string(b);
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("non-negative Bézout solutions iff coprime, 2..40", [] {
    for (std::uint64_t a = 2; a <= 40; ++a)
      for (std::uint64_t b = 2; b <= 40; ++b) {
        auto s = bezout_nonneg(a, b);
        bool ok = s ? (a - 1) * (b - 1) == s->r * a + s->s * b : std::gcd(a, b) != 1;
        if (!ok || s.has_value() != (std::gcd(a, b) == 1))
          return "a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("minimal generators are the irreducible members", [] {
    std::mt19937_64 rng(20240917);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::uint64_t> g(1 + rng() % 5);
      for (auto& x : g) x = 1 + rng() % 40;
      Semiideal M(g);
      auto X = minimal_generators(M);
      if (X != detail::irreducibles(M, M.generators().back()))
        return "generators " + detail::fmt(std::vector<Element>(g.begin(), g.end()));
    }
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("closure = meet of enumerated congruences, size ≤ 4", [] {
    for (auto const& M : small_monoid_corpus(4)) {
      auto const all = enumerate_congruences(M);
      std::vector<ElementPair> pairs;
      for (Element a = 0; a < M.size(); ++a)
        for (Element b = a + 1; b < M.size(); ++b) pairs.emplace_back(a, b);
      for (std::size_t i = 0; i <= pairs.size(); ++i)
        for (std::size_t j = i; j <= pairs.size(); ++j) {
          std::vector<ElementPair> seeds;
          if (i < pairs.size()) seeds.push_back(pairs[i]);
          if (j < pairs.size() && j != i) seeds.push_back(pairs[j]);
          auto expect = Congruence::all(M);
          for (auto const& C : all) {
            bool holds = true;
            for (auto [a, b] : seeds) holds = holds && C.related(a, b);
            if (holds) expect = meet(expect, C);
          }
          if (!(congruence_closure(M, seeds) == expect))
            return "table " + std::to_string(M.size()) + " seeds " + std::to_string(seeds.size());
        }
    }
    return std::string();
  }));
  return rep;
}

inline SuiteReport verify_coherence() {
  SuiteReport rep{"coherence", {}};
  auto const corpus = small_monoid_corpus(3);
  rep.checks.push_back(detail::run_check("symmetry M⊗N ≅ N⊗M on size ≤ 3", [&] {
    for (auto const& M : corpus)
      for (auto const& N : corpus)
        if (!symmetry_iso(M, N).tau.verified) return std::string("braiding not inverse");
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("associativity (M⊗N)⊗P ≅ M⊗(N⊗P) on size ≤ 3", [&] {
    for (auto const& M : corpus)
      for (auto const& N : corpus)
        for (auto const& P : corpus)
          if (!associativity_iso(M, N, P).alpha.verified) return std::string("associator failed");
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("Hom(P⊗M, N) ≅ Hom(P, Hom(M, N)) on size ≤ 3", [&] {
    for (auto const& P : corpus)
      for (auto const& M : corpus)
        for (auto const& N : corpus) {
          auto r = hom_adjunction_check(P, M, N);
          if (!r.ok())
            return "|lhs|=" + std::to_string(r.lhs_count) + " |rhs|=" + std::to_string(r.rhs_count);
        }
    return std::string();
  }));
  rep.checks.push_back(detail::run_check("triangle with the rank-one free monoid on size ≤ 3", [&] {
    for (auto const& A : corpus)
      for (auto const& B : corpus)
        if (!triangle_commutes(A, B)) return std::string("triangle failed");
    return std::string();
  }));
  return rep;
}

inline SuiteReport verify_suite(std::string const& name) {
  if (name == "paper-tables") return verify_reference_tables();
  if (name == "oracles") return verify_oracles();
  if (name == "coherence") return verify_coherence();
  fail(ErrorKind::InvalidInput, {}, "unknown suite " + name);
}

}  // namespace semimod
