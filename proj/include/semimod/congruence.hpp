#pragma once

// Congruence relations on finite commutative monoids, quotients, and the
// relations attached to a pair of parallel homomorphisms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"
#include "union_find.hpp"

namespace semimod {

using ElementPair = std::pair<Element, Element>;

/// Partition of a finite monoid's elements closed under translation.
/// Every element is labelled by the smallest member of its class.
class Congruence {
 public:
  Congruence() = default;

  FiniteCommMonoid const& carrier() const noexcept { return carrier_; }
  std::vector<Element> const& representatives() const noexcept { return rep_; }
  std::vector<ElementPair> const& generators() const noexcept { return seeds_; }

  Element representative(Element m) const { return rep_[m]; }
  bool related(Element a, Element b) const { return rep_[a] == rep_[b]; }

  /// Classes ordered by their smallest element; the class of 0 comes first.
  std::vector<Subset> classes() const {
    std::vector<Subset> out;
    std::vector<std::size_t> slot(rep_.size(), rep_.size());
    for (Element m = 0; m < rep_.size(); ++m) {
      if (rep_[m] == m) {
        slot[m] = out.size();
        out.push_back({});
      }
      out[slot[rep_[m]]].push_back(m);
    }
    return out;
  }

  std::size_t class_count() const {
    std::size_t c = 0;
    for (Element m = 0; m < rep_.size(); ++m) c += rep_[m] == m;
    return c;
  }

  /// Position of m's class in classes().
  Element class_index(Element m) const {
    Element idx = 0;
    for (Element x = 0; x < rep_[m]; ++x) idx += rep_[x] == x;
    return idx;
  }

  /// this ⊆ other as relations.
  bool is_finer_than(Congruence const& other) const {
    for (Element m = 0; m < rep_.size(); ++m)
      if (!other.related(m, rep_[m])) return false;
    return true;
  }

  bool is_identity() const { return class_count() == rep_.size(); }

  friend bool operator==(Congruence const& a, Congruence const& b) {
    return a.carrier_ == b.carrier_ && a.rep_ == b.rep_;
  }

  /// Builds from any per-element class labelling and verifies translation
  /// closure; throws NotACongruence(m, m', n) for m ~ m' but m+n ≁ m'+n.
  static Congruence from_labels(FiniteCommMonoid M, std::vector<std::size_t> const& labels,
                                std::vector<ElementPair> seeds = {}) {
    if (labels.size() != M.size())
      fail(ErrorKind::InvalidInput, {labels.size()}, "label count differs from size");
    std::vector<Element> rep(M.size());
    for (Element m = 0; m < M.size(); ++m) {
      rep[m] = m;
      for (Element x = 0; x < m; ++x)
        if (labels[x] == labels[m]) {
          rep[m] = x;
          break;
        }
    }
    Congruence c(std::move(M), std::move(rep), std::move(seeds));
    if (auto w = c.translation_witness()) fail(ErrorKind::NotACongruence, *w);
    return c;
  }

  static Congruence from_classes(FiniteCommMonoid M, std::vector<Subset> const& classes) {
    std::vector<std::size_t> labels(M.size(), M.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (auto m : classes[i]) {
        if (m >= M.size() || labels[m] != M.size())
          fail(ErrorKind::InvalidInput, {m}, "classes do not partition the carrier");
        labels[m] = i;
      }
    for (Element m = 0; m < M.size(); ++m)
      if (labels[m] == M.size())
        fail(ErrorKind::InvalidInput, {m}, "classes do not cover the carrier");
    return from_labels(std::move(M), labels);
  }

  static Congruence identity(FiniteCommMonoid M) {
    std::vector<std::size_t> labels(M.size());
    for (Element m = 0; m < labels.size(); ++m) labels[m] = m;
    return from_labels(std::move(M), labels);
  }

  static Congruence all(FiniteCommMonoid M) {
    return from_labels(M, std::vector<std::size_t>(M.size(), 0));
  }

  /// (m, m', n) with m ~ m' but m+n ≁ m'+n, if any.
  std::optional<std::vector<std::size_t>> translation_witness() const {
    for (Element m = 0; m < rep_.size(); ++m) {
      auto r = rep_[m];
      if (r == m) continue;
      for (Element n = 0; n < rep_.size(); ++n)
        if (!related(carrier_.add(m, n), carrier_.add(r, n)))
          return std::vector<std::size_t>{r, m, n};
    }
    return std::nullopt;
  }

 private:
  Congruence(FiniteCommMonoid M, std::vector<Element> rep, std::vector<ElementPair> seeds)
      : carrier_(std::move(M)), rep_(std::move(rep)), seeds_(std::move(seeds)) {}

  FiniteCommMonoid carrier_;
  std::vector<Element> rep_;
  std::vector<ElementPair> seeds_;
};

/// Intersection of two congruences on the same carrier.
inline Congruence meet(Congruence const& a, Congruence const& b) {
  std::size_t const n = a.carrier().size();
  std::vector<std::size_t> labels(n);
  for (Element m = 0; m < n; ++m) labels[m] = a.representative(m) * n + b.representative(m);
  return Congruence::from_labels(a.carrier(), labels);
}

/// Smallest congruence containing `pairs`. Each union (u, v) enqueues the
/// translates (u+w, v+w) for every element w.
inline Congruence congruence_closure(FiniteCommMonoid const& M,
                                     std::vector<ElementPair> const& pairs) {
  std::size_t const n = M.size();
  for (auto [a, b] : pairs)
    if (a >= n || b >= n) fail(ErrorKind::OutOfRange, {a, b});
  UnionFind uf(n);
  std::vector<ElementPair> work(pairs.rbegin(), pairs.rend());
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    for (Element w = 0; w < n; ++w) work.emplace_back(M.add(u, w), M.add(v, w));
  }
  auto labels = uf.min_labels();
  auto c = Congruence::from_labels(M, labels, pairs);
  return c;
}

struct Quotient {
  FiniteCommMonoid monoid;
  MonoidHom nu;  // M -> M/~, surjective
};

/// M/~ with classes indexed as in Congruence::classes().
inline Quotient quotient(Congruence const& C) {
  auto const& M = C.carrier();
  auto const cls = C.classes();
  std::vector<Element> nu(M.size());
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (auto m : cls[i]) nu[m] = i;
  Table t(cls.size(), std::vector<Element>(cls.size()));
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) t[i][j] = nu[M.add(cls[i][0], cls[j][0])];
  std::vector<std::string> labels;
  if (M.has_labels())
    for (auto const& c : cls) labels.push_back(M.label(c[0]));
  auto Q = validate_monoid(t, std::move(labels));
  auto h = hom_check(M, Q, std::move(nu));
  return Quotient{std::move(Q), std::move(h)};
}

/// m ~_f m' iff f(m) = f(m').
inline Congruence kernel_congruence(MonoidHom const& f) {
  return Congruence::from_labels(f.source(), f.image());
}

/// The unique f' with f' ∘ ν = f; requires ~ ⊆ ker f.
inline MonoidHom factor_through(MonoidHom const& f, Congruence const& C) {
  if (!(f.source() == C.carrier()))
    fail(ErrorKind::InvalidInput, {}, "congruence lives on a different monoid");
  for (Element m = 0; m < f.source().size(); ++m)
    if (f(m) != f(C.representative(m)))
      fail(ErrorKind::HypothesisFails, {C.representative(m), m});
  auto q = quotient(C);
  auto const cls = C.classes();
  std::vector<Element> img(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) img[i] = f(cls[i][0]);
  return hom_check(q.monoid, f.target(), std::move(img));
}

namespace detail {
inline void require_parallel(MonoidHom const& f, MonoidHom const& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    fail(ErrorKind::InvalidInput, {}, "homomorphisms are not parallel");
}
}  // namespace detail

/// The zig-zag relation ~_(f,g): the congruence generated by f(n) ~ g(n).
inline Congruence chain_congruence(MonoidHom const& f, MonoidHom const& g) {
  detail::require_parallel(f, g);
  std::vector<ElementPair> seeds;
  for (Element n = 0; n < f.source().size(); ++n)
    if (f(n) != g(n)) seeds.emplace_back(f(n), g(n));
  return congruence_closure(f.target(), seeds);
}

inline Quotient coequalizer_finite(MonoidHom const& f, MonoidHom const& g) {
  return quotient(chain_congruence(f, g));
}

/// Outcome of a budgeted universal-property probe. This samples targets of
/// bounded size and is evidence, not proof.
struct ProbeReport {
  std::size_t targets = 0;     // probe monoids visited
  std::size_t candidates = 0;  // homs h examined
  std::size_t admissible = 0;  // homs satisfying the hypothesis
  bool passed = true;
  std::string failure;
};

/// For every P of size ≤ max_target (up to isomorphism) and every
/// h: M -> P with h∘f = h∘g, checks that exactly one h': M/~ -> P has
/// h'∘ν = h.
inline ProbeReport probe_coequalizer(MonoidHom const& f, MonoidHom const& g,
                                     std::size_t max_target,
                                     std::size_t budget = Budget::kDefault) {
  detail::require_parallel(f, g);
  Budget b(budget);
  auto const q = coequalizer_finite(f, g);
  ProbeReport r;
  for (std::size_t k = 1; k <= max_target; ++k) {
    for (auto const& P : enumerate_monoids(k, true, b)) {
      ++r.targets;
      auto const factors = enumerate_homs(q.monoid, P, b);
      for (auto const& h : enumerate_homs(f.target(), P, b)) {
        ++r.candidates;
        if (!(compose(h, f) == compose(h, g))) continue;
        ++r.admissible;
        std::size_t hits = 0;
        for (auto const& hp : factors) hits += compose(hp, q.nu) == h;
        if (hits != 1) {
          r.passed = false;
          r.failure = "factorization count " + std::to_string(hits) + " into a monoid of size " +
                      std::to_string(k);
          return r;
        }
      }
    }
  }
  return r;
}

/// ~_[f,g]: m ~ m' iff m + f(n) + g(n') = m' + f(n') + g(n) for some n, n'.
/// Enumerates all (n, n') and verifies the result is a congruence.
inline Congruence naive_congruence(MonoidHom const& f, MonoidHom const& g) {
  detail::require_parallel(f, g);
  auto const& M = f.target();
  std::size_t const n = M.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Element x = 0; x < f.source().size(); ++x)
    for (Element y = 0; y < f.source().size(); ++y) {
      auto lhs = M.add(f(x), g(y));
      auto rhs = M.add(f(y), g(x));
      for (Element m = 0; m < n; ++m)
        for (Element mp = 0; mp < n; ++mp)
          if (M.add(m, lhs) == M.add(mp, rhs)) rel[m][mp] = true;
    }
  std::vector<std::size_t> labels(n);
  for (Element m = 0; m < n; ++m) {
    labels[m] = m;
    for (Element x = 0; x < m; ++x)
      if (rel[x][m]) {
        labels[m] = labels[x];
        break;
      }
  }
  // Equivalence check: every related pair must land in one block and vice versa.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (rel[a][b] != (labels[a] == labels[b]))
        fail(ErrorKind::WellDefinednessFailure, {a, b}, "naive relation is not an equivalence");
  return Congruence::from_labels(M, labels);
}

/// Bourne relation: m ~_K m' iff m + a = m' + b for some a, b ∈ K.
inline Congruence bourne_congruence(FiniteCommMonoid const& M, Subset K) {
  K = normalize_subset(std::move(K));
  if (!is_submonoid(M, K)) fail(ErrorKind::NotASubmonoid, {}, "K is not a submodule");
  std::size_t const n = M.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Element m = 0; m < n; ++m)
    for (Element mp = 0; mp < n; ++mp)
      for (auto a : K)
        for (auto b : K)
          if (M.add(m, a) == M.add(mp, b)) rel[m][mp] = true;
  std::vector<std::size_t> labels(n);
  for (Element m = 0; m < n; ++m) {
    labels[m] = m;
    for (Element x = 0; x < m; ++x)
      if (rel[x][m]) {
        labels[m] = labels[x];
        break;
      }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (rel[a][b] != (labels[a] == labels[b]))
        fail(ErrorKind::WellDefinednessFailure, {a, b}, "Bourne relation is not an equivalence");
  return Congruence::from_labels(M, labels);
}

/// The class of 0; always a submonoid.
inline Subset zero_class(Congruence const& C) { return C.classes().front(); }

/// Rel_~ ⊆ M × M with its projections.
struct KernelPair {
  Biproduct square;  // M ⊕ M
  Restriction rel;   // Rel_~ inside the square
  MonoidHom p1, p2;  // Rel_~ -> M

  /// The pair (m, m') for an element of rel.monoid.
  ElementPair pair(Element x) const {
    auto t = square.decode(rel.members[x]);
    return {t[0], t[1]};
  }
};

inline KernelPair relation_monoid(Congruence const& C) {
  auto const& M = C.carrier();
  auto sq = biproduct(M, M);
  Subset members;
  for (Element a = 0; a < M.size(); ++a)
    for (Element b = 0; b < M.size(); ++b)
      if (C.related(a, b)) members.push_back(sq.encode(std::vector<Element>{a, b}));
  auto rel = restrict_to(sq.sum, members);
  auto p1 = compose(sq.projections[0], rel.inclusion);
  auto p2 = compose(sq.projections[1], rel.inclusion);
  return KernelPair{std::move(sq), std::move(rel), std::move(p1), std::move(p2)};
}

inline KernelPair kernel_pair(MonoidHom const& f) {
  return relation_monoid(kernel_congruence(f));
}

/// The unique h: N -> Rel_~ with p1∘h = f and p2∘h = g, h(n) = (f(n), g(n)).
inline MonoidHom pairing_hom(MonoidHom const& f, MonoidHom const& g, KernelPair const& kp) {
  detail::require_parallel(f, g);
  std::vector<Element> img(f.source().size());
  for (Element n = 0; n < img.size(); ++n) {
    auto code = kp.square.encode(std::vector<Element>{f(n), g(n)});
    auto it = std::lower_bound(kp.rel.members.begin(), kp.rel.members.end(), code);
    if (it == kp.rel.members.end() || *it != code)
      fail(ErrorKind::HypothesisFails, {f(n), g(n)}, "f(n) and g(n) are not related");
    img[n] = static_cast<Element>(it - kp.rel.members.begin());
  }
  return hom_check(f.source(), kp.rel.monoid, std::move(img));
}

/// Every congruence on M, via restricted-growth strings over the elements.
inline std::vector<Congruence> enumerate_congruences(FiniteCommMonoid const& M,
                                                     std::size_t budget = Budget::kDefault) {
  constexpr std::size_t kMaxSize = 6;
  if (M.size() > kMaxSize)
    fail(ErrorKind::BudgetExceeded, {M.size()}, "enumerate_congruences is capped at size 6");
  Budget b(budget);
  std::size_t const n = M.size();
  std::vector<std::size_t> labels(n, 0);
  std::vector<Congruence> out;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      b.spend(n * n, "enumerate_congruences");
      std::vector<Element> rep(n);
      bool closed = true;
      for (Element a = 0; a < n && closed; ++a)
        for (Element c = a + 1; c < n && closed; ++c)
          if (labels[a] == labels[c])
            for (Element w = 0; w < n && closed; ++w)
              closed = labels[M.add(a, w)] == labels[M.add(c, w)];
      if (closed) out.push_back(Congruence::from_labels(M, labels));
      return;
    }
    for (std::size_t v = 0; v <= blocks; ++v) {
      labels[i] = v;
      rec(i + 1, std::max(blocks, v + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace semimod
