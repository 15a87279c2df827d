#pragma once

// Congruences on ℕ₀ generated by finitely many pairs, and coequalizers of
// multiplication maps a·, b·: ℕ₀ -> ℕ₀. Every non-trivial quotient is a
// cyclic monoid C(i, p); answers are returned with two certificates that
// can be replayed without the search that found them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"
#include "semiideal.hpp"
#include "union_find.hpp"

namespace semimod {

/// C(i, p) = ℕ₀ / (i ~ i+p), elements {0, ..., i+p-1}.
struct CyclicMonoid {
  std::uint64_t index = 0;
  std::uint64_t period = 1;

  std::uint64_t size() const noexcept { return index + period; }

  /// Class of n ∈ ℕ₀.
  std::uint64_t reduce(std::uint64_t n) const noexcept {
    return n < index ? n : index + (n - index) % period;
  }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept { return reduce(x + y); }

  FiniteCommMonoid monoid() const { return cyclic_monoid(index, period); }

  friend bool operator==(CyclicMonoid const&, CyclicMonoid const&) = default;
};

/// Marker: the quotient is ℕ₀ itself.
struct SymbolicNat {
  friend bool operator==(SymbolicNat const&, SymbolicNat const&) = default;
};

struct NatPair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(NatPair const&, NatPair const&) = default;
};

/// One link of a merge chain: from ~ to because {from, to} is the seed pair
/// `seed` translated by `shift`.
struct ChainStep {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::size_t seed = 0;
  std::uint64_t shift = 0;
  friend bool operator==(ChainStep const&, ChainStep const&) = default;
};

struct NatQuotient {
  std::variant<SymbolicNat, CyclicMonoid> result;
  std::vector<NatPair> seeds;  // non-trivial seeds with a < b
  bool certificate_a = false;  // n ↦ class(n) identifies every seed pair
  std::vector<ChainStep> certificate_b;  // index ~ index + period
  std::uint64_t bound_used = 0;

  bool is_natural() const { return std::holds_alternative<SymbolicNat>(result); }
  CyclicMonoid const& cyclic() const { return std::get<CyclicMonoid>(result); }
};

struct NatCoeqOptions {
  std::uint64_t bound_cap = 1'000'000;
  /// Starting saturation bound; 0 selects 2·(max b + i + p).
  std::uint64_t initial_bound = 0;
};

/// (A): the projection ℕ₀ -> C(i, p) sends each seed pair to one element.
inline bool check_certificate_a(std::vector<NatPair> const& seeds, CyclicMonoid const& c) {
  return std::all_of(seeds.begin(), seeds.end(),
                     [&](NatPair const& s) { return c.reduce(s.a) == c.reduce(s.b); });
}

/// (B): the chain starts at i, ends at i+p, and each step is a translated
/// seed instance (in either direction).
inline bool check_certificate_b(std::vector<NatPair> const& seeds, CyclicMonoid const& c,
                                std::vector<ChainStep> const& chain) {
  if (chain.empty()) return false;
  std::uint64_t at = c.index;
  for (auto const& st : chain) {
    if (st.from != at || st.seed >= seeds.size()) return false;
    auto const lo = seeds[st.seed].a + st.shift, hi = seeds[st.seed].b + st.shift;
    if (!((st.from == lo && st.to == hi) || (st.from == hi && st.to == lo))) return false;
    at = st.to;
  }
  return at == c.index + c.period;
}

inline bool verify_certificates(NatQuotient const& q) {
  if (q.is_natural()) return q.seeds.empty();
  return check_certificate_a(q.seeds, q.cyclic()) &&
         check_certificate_b(q.seeds, q.cyclic(), q.certificate_b);
}

/// Union-find over {0, ..., bound} saturated with every translate
/// (a+k, b+k) that fits. Returns each element's smallest class member.
inline std::vector<std::size_t> nat_saturation(std::vector<NatPair> const& seeds,
                                               std::uint64_t bound) {
  UnionFind uf(bound + 1);
  for (auto const& s : seeds)
    for (std::uint64_t k = 0; s.b + k <= bound; ++k) uf.unite(s.a + k, s.b + k);
  return uf.min_labels();
}

namespace detail {

/// Searches a merge chain i ~ i+p inside {0, ..., bound}.
inline std::optional<std::vector<ChainStep>> find_chain(std::vector<NatPair> const& seeds,
                                                        std::uint64_t bound,
                                                        std::uint64_t from, std::uint64_t to) {
  if (to > bound) return std::nullopt;
  struct Edge {
    std::uint64_t other;
    std::size_t seed;
    std::uint64_t shift;
  };
  UnionFind uf(bound + 1);
  std::vector<std::vector<Edge>> adj(bound + 1);
  for (std::size_t j = 0; j < seeds.size(); ++j)
    for (std::uint64_t k = 0; seeds[j].b + k <= bound; ++k) {
      auto x = seeds[j].a + k, y = seeds[j].b + k;
      if (uf.unite(x, y)) {
        adj[x].push_back({y, j, k});
        adj[y].push_back({x, j, k});
      }
    }
  if (!uf.same(from, to)) return std::nullopt;

  // The recorded unions form a spanning forest; walk it from `to` back to `from`.
  std::vector<std::optional<ChainStep>> prev(bound + 1);
  std::vector<bool> seen(bound + 1, false);
  std::queue<std::uint64_t> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty() && !seen[to]) {
    auto x = q.front();
    q.pop();
    for (auto const& e : adj[x])
      if (!seen[e.other]) {
        seen[e.other] = true;
        prev[e.other] = ChainStep{x, e.other, e.seed, e.shift};
        q.push(e.other);
      }
  }
  std::vector<ChainStep> chain;
  for (auto at = to; at != from; at = prev[at]->from) chain.push_back(*prev[at]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace detail

/// Quotient of ℕ₀ by the congruence generated by `pairs`.
///
/// The candidate C(i, p) has i = the least seed member and p = the gcd of
/// the seed differences. It is accepted only with both certificates: (A) shows
/// the quotient maps onto C(i, p), (B) shows i ~ i+p is derivable, and since
/// every relation instance lies in [i, ∞) with difference divisible by p,
/// the two together pin the quotient to C(i, p).
inline NatQuotient nat_congruence_quotient(std::vector<NatPair> pairs,
                                           NatCoeqOptions const& opt = {}) {
  NatQuotient q;
  for (auto& s : pairs) {
    if (s.a == s.b) continue;
    if (s.a > s.b) std::swap(s.a, s.b);
    q.seeds.push_back(s);
  }
  if (q.seeds.empty()) {
    q.result = SymbolicNat{};
    return q;
  }
  CyclicMonoid c{q.seeds.front().a, 0};
  std::uint64_t max_b = 0;
  for (auto const& s : q.seeds) {
    c.index = std::min(c.index, s.a);
    c.period = std::gcd(c.period, s.b - s.a);
    max_b = std::max(max_b, s.b);
  }
  q.result = c;
  q.certificate_a = check_certificate_a(q.seeds, c);

  auto bound = opt.initial_bound ? opt.initial_bound : 2 * (max_b + c.index + c.period);
  bound = std::min(bound, opt.bound_cap);
  for (;;) {
    if (auto chain = detail::find_chain(q.seeds, bound, c.index, c.index + c.period)) {
      q.certificate_b = std::move(*chain);
      q.bound_used = bound;
      break;
    }
    if (bound >= opt.bound_cap)
      fail(ErrorKind::BoundCapExceeded, {c.index, c.period},
           "candidate C(i,p) not certified within the bound cap");
    bound = std::min(bound * 2, opt.bound_cap);
  }
  if (!q.certificate_a)
    fail(ErrorKind::WellDefinednessFailure, {c.index, c.period}, "certificate A failed");
  return q;
}

/// Coequalizer of the multiplication maps a·, b·: ℕ₀ -> ℕ₀. The single seed
/// (f(1), g(1)) generates every (an, bn); certificate (A) is additionally
/// checked on (an, bn) for n ≤ 10.
inline NatQuotient coequalizer_nat(std::uint64_t a, std::uint64_t b,
                                   NatCoeqOptions const& opt = {}) {
  auto q = nat_congruence_quotient({NatPair{a, b}}, opt);
  if (!q.is_natural()) {
    for (std::uint64_t n = 0; n <= 10; ++n)
      if (q.cyclic().reduce(a * n) != q.cyclic().reduce(b * n))
        fail(ErrorKind::WellDefinednessFailure, {a * n, b * n}, "certificate A failed");
  }
  return q;
}

/// Classes of the naive relation ~_[a·, b·] on {0, ..., probe_limit}.
struct NaiveCensus {
  std::uint64_t probe_limit = 0;
  std::vector<std::vector<std::uint64_t>> classes;  // ordered by least member
};

/// m ~ m' iff m + an + bn' = m' + an' + bn, with witnesses n, n' searched in
/// [0, probe_limit].
inline NaiveCensus naive_nat_classes(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t probe_limit) {
  if (a == b) fail(ErrorKind::PreconditionFailed, {a, b}, "a and b must differ");
  UnionFind uf(probe_limit + 1);
  for (std::uint64_t m = 0; m <= probe_limit; ++m)
    for (std::uint64_t mp = m + 1; mp <= probe_limit; ++mp) {
      if (uf.same(m, mp)) continue;
      bool found = false;
      for (std::uint64_t n = 0; n <= probe_limit && !found; ++n)
        for (std::uint64_t np = 0; np <= probe_limit && !found; ++np)
          found = m + a * n + b * np == mp + a * np + b * n;
      if (found) uf.unite(m, mp);
    }
  NaiveCensus c;
  c.probe_limit = probe_limit;
  auto const labels = uf.min_labels();
  std::vector<std::size_t> slot(labels.size(), labels.size());
  for (std::uint64_t m = 0; m <= probe_limit; ++m) {
    if (labels[m] == m) {
      slot[m] = c.classes.size();
      c.classes.push_back({});
    }
    c.classes[slot[labels[m]]].push_back(m);
  }
  return c;
}

/// ℕ₀/M ≅ ℤ/(d) for a semiideal M of period d, with the witness that d ~_M 0:
/// d + c = 0 + (c + d) where c is the footing, so c, c+d ∈ M.
struct BourneNatQuotient {
  CyclicMonoid quotient;  // C(0, d)
  std::vector<std::uint64_t> generators;
  std::uint64_t period = 1;
  std::uint64_t footing = 0;
  std::uint64_t witness_a = 0;  // c
  std::uint64_t witness_b = 0;  // c + d

  bool trivial() const { return period == 1; }

  /// Replays the isomorphism argument: n ~_M n' ⇒ n ≡ n' (mod d) because d
  /// divides every generator, and d ~_M 0 via the witness.
  bool verify() const {
    Semiideal M(generators);
    if (M.is_zero() || quotient != CyclicMonoid{0, period}) return false;
    for (auto g : generators)
      if (g % period != 0) return false;
    return M.contains(witness_a) && M.contains(witness_b) && period + witness_a == witness_b;
  }
};

inline BourneNatQuotient bourne_nat_quotient(std::vector<std::uint64_t> generators) {
  Semiideal M(generators);
  if (M.is_zero()) fail(ErrorKind::EmptyIdeal, {}, "need a non-zero generator");
  BourneNatQuotient r;
  r.generators = M.generators();
  r.period = M.period();
  r.footing = M.footing();
  r.quotient = CyclicMonoid{0, r.period};
  r.witness_a = r.footing;
  r.witness_b = r.footing + r.period;
  if (!r.verify()) fail(ErrorKind::WellDefinednessFailure, {r.period}, "isomorphism witness");
  return r;
}

}  // namespace semimod
