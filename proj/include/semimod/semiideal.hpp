#pragma once

// Finitely generated semiideals of ℕ₀ (submonoids of (ℕ₀, +)): membership,
// period, footing, periodic core and the canonical generating system.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semimod {

/// ⟨g_1, ..., g_k⟩ ⊆ ℕ₀. Zero generators are dropped; an ideal without
/// generators is {0} and rejects period/footing queries.
///
/// Membership is decided by a dynamic-programming table over multiples of
/// the period, grown on demand. contains() may grow the table, so sharing
/// an instance across threads requires ensure_computed_up_to() first and
/// queries inside that range only.
class Semiideal {
 public:
  Semiideal() = default;

  explicit Semiideal(std::vector<std::uint64_t> generators) : gens_(std::move(generators)) {
    std::erase(gens_, std::uint64_t{0});
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (auto g : gens_) d_ = std::gcd(d_, g);
    for (auto g : gens_) scaled_.push_back(g / d_);
    member_.push_back(1);
  }

  std::vector<std::uint64_t> const& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// gcd of the generators.
  std::uint64_t period() const {
    require_nonzero();
    return d_;
  }

  bool contains(std::uint64_t n) const {
    if (n == 0) return true;
    if (is_zero() || n % d_ != 0) return false;
    auto k = n / d_;
    extend(k);
    return member_[k] != 0;
  }

  /// Materializes membership for every n ≤ bound.
  void ensure_computed_up_to(std::uint64_t bound) const {
    if (!is_zero()) extend(bound / d_);
  }

  /// Least non-zero c such that the members ≥ c are exactly c, c+d, c+2d, ...
  ///
  /// Works on M' = M/d (gcd 1): once e' consecutive integers are members,
  /// with e' the smallest generator of M', every later integer is a member,
  /// so the scan stops at the first such run.
  std::uint64_t footing() const {
    require_nonzero();
    if (footing_) return *footing_;
    std::uint64_t const e = scaled_.front();
    std::uint64_t run_start = 0, run = 0;
    for (std::uint64_t k = 0;; ++k) {
      extend(k);
      if (member_[k]) {
        if (run == 0) run_start = k;
        if (++run == e) break;
      } else {
        run = 0;
      }
    }
    footing_ = std::max<std::uint64_t>(run_start, 1) * d_;
    return *footing_;
  }

 private:
  void require_nonzero() const {
    if (is_zero()) fail(ErrorKind::EmptyIdeal, {}, "the zero semiideal has no period or footing");
  }

  void extend(std::uint64_t k) const {
    if (k < member_.size()) return;
    auto const block = scaled_.empty() ? 1 : scaled_.back();
    auto const target = std::max<std::uint64_t>(k + 1, member_.size() + block);
    for (auto i = member_.size(); i < target; ++i) {
      char in = 0;
      for (auto g : scaled_) {
        if (g > i) break;
        if (member_[i - g]) {
          in = 1;
          break;
        }
      }
      member_.push_back(in);
    }
  }

  std::vector<std::uint64_t> gens_;
  std::vector<std::uint64_t> scaled_;
  std::uint64_t d_ = 0;
  mutable std::vector<char> member_;
  mutable std::optional<std::uint64_t> footing_;
};

inline bool contains(Semiideal const& M, std::uint64_t n) { return M.contains(n); }
inline std::uint64_t period(Semiideal const& M) { return M.period(); }
inline std::uint64_t footing(Semiideal const& M) { return M.footing(); }

/// perc(M) = {c + nd | n ∈ ℕ₀} ∪ {0}.
struct PeriodicCore {
  std::uint64_t footing = 0;
  std::uint64_t period = 1;

  bool contains(std::uint64_t n) const {
    return n == 0 || (n >= footing && (n - footing) % period == 0);
  }
  friend bool operator==(PeriodicCore const&, PeriodicCore const&) = default;
};

inline PeriodicCore perc(Semiideal const& M) { return PeriodicCore{M.footing(), M.period()}; }

/// Footing of ⟨a, b⟩ in closed form, d(a/d − 1)(b/d − 1) with d = gcd(a, b).
/// When one generator divides the other the ideal is cyclic, ⟨d⟩, the
/// formula degenerates to 0, and the footing d is returned instead.
inline std::uint64_t footing_two_generators(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) fail(ErrorKind::PreconditionFailed, {a, b}, "generators must be positive");
  auto const d = std::gcd(a, b);
  auto const x = a / d, y = b / d;
  if (x == 1 || y == 1) return d;
  return d * (x - 1) * (y - 1);
}

/// Canonical generating system: e_0 is the smallest non-zero member and
/// e_n the smallest member outside ⟨e_0, ..., e_{n-1}⟩; stops once every
/// input generator is generated.
inline std::vector<std::uint64_t> minimal_generators(Semiideal const& M) {
  auto const d = M.period();
  auto const& gens = M.generators();
  std::vector<std::uint64_t> X;
  Semiideal span;
  auto done = [&] {
    return std::all_of(gens.begin(), gens.end(), [&](auto g) { return span.contains(g); });
  };
  for (std::uint64_t n = d; !done(); n += d) {
    if (M.contains(n) && !span.contains(n)) {
      X.push_back(n);
      span = Semiideal(X);
    }
  }
  if (X.size() > X.front() / d)
    fail(ErrorKind::WellDefinednessFailure, {X.size(), X.front(), d}, "|X| > e/d");
  return X;
}

inline bool is_cyclic(Semiideal const& M) { return minimal_generators(M).size() == 1; }

/// Given a, a+d ∈ M with a ≠ 0, returns c = d·a·(a+d), for which c + nd ∈ M
/// for every n. The claim is re-verified for n ≤ window.
inline std::uint64_t difference_witness_core(Semiideal const& M, std::uint64_t a,
                                             std::uint64_t d, std::uint64_t window = 50) {
  if (a == 0 || d == 0 || !M.contains(a) || !M.contains(a + d))
    fail(ErrorKind::PreconditionFailed, {a, d}, "need a ≠ 0 with a, a+d ∈ M");
  auto const c = d * a * (a + d);
  for (std::uint64_t n = 0; n <= window; ++n)
    if (!M.contains(c + n * d))
      fail(ErrorKind::WellDefinednessFailure, {c, n}, "c + nd ∉ M");
  return c;
}

struct BezoutPair {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  friend bool operator==(BezoutPair const&, BezoutPair const&) = default;
};

namespace detail {
/// x, y with x·a + y·b = gcd(a, b).
inline std::pair<__int128, __int128> ext_gcd(__int128 a, __int128 b) {
  __int128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    auto q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  return {x0, y0};
}
}  // namespace detail

/// Non-negative r, s with (a−1)(b−1) = ra + sb; these exist iff gcd(a, b) = 1.
/// Writes 1 = ua − vb with 0 ≤ v < a and takes r = u − 1, s = a − v − 1.
inline std::optional<BezoutPair> bezout_nonneg(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) fail(ErrorKind::PreconditionFailed, {a, b}, "a, b must be positive");
  if (std::gcd(a, b) != 1) return std::nullopt;
  auto const y = detail::ext_gcd(a, b).second;  // x·a + y·b = 1
  __int128 const A = a, B = b;
  __int128 v = (-y) % A;
  if (v < 0) v += A;
  __int128 const u = (1 + v * B) / A;
  return BezoutPair{static_cast<std::uint64_t>(u - 1), static_cast<std::uint64_t>(A - v - 1)};
}

/// Non-negative r, s with d(a/d − 1)(b/d − 1) = ra + sb; these exist iff
/// gcd(a, b) = d.
inline std::optional<BezoutPair> bezout_nonneg_scaled(std::uint64_t a, std::uint64_t b,
                                                      std::uint64_t d) {
  if (d == 0 || a % d != 0 || b % d != 0) fail(ErrorKind::NotDivisible, {a, b, d});
  return bezout_nonneg(a / d, b / d);
}

}  // namespace semimod
