#pragma once

// Finite commutative monoids given by addition tables, viewed as
// ℕ₀-semimodules through repeated addition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace semimod {

using Element = std::size_t;
/// Sorted set of element indices.
using Subset = std::vector<Element>;
using Table = std::vector<std::vector<Element>>;

/// The sequence m, 2m, 3m, ... first repeats with (index + period)·m =
/// index·m. The sequence starts at 1·m, so the identity has (1, 1).
struct Orbit {
  std::size_t index = 1;
  std::size_t period = 1;

  friend bool operator==(Orbit const&, Orbit const&) = default;
};

/// Immutable finite commutative monoid with identity at index 0. Copies
/// share the underlying table.
class FiniteCommMonoid {
 public:
  FiniteCommMonoid() : FiniteCommMonoid(trivial_data()) {}

  std::size_t size() const noexcept { return d_->n; }

  Element add(Element a, Element b) const { return d_->add[a * d_->n + b]; }

  Element sum(std::span<Element const> xs) const {
    Element acc = 0;
    for (auto x : xs) acc = add(acc, x);
    return acc;
  }

  /// k·m, read off the cached orbit of m.
  Element scalar(std::uint64_t k, Element m) const {
    if (k == 0) return 0;
    auto const& o = d_->orbits[m];
    auto const& pw = d_->powers[m];
    if (k < o.index + o.period) return pw[k - 1];
    auto const j = o.index + (k - o.index) % o.period;
    return pw[j - 1];
  }

  Orbit const& orbit(Element m) const { return d_->orbits[m]; }

  bool has_labels() const noexcept { return !d_->labels.empty(); }
  std::vector<std::string> const& labels() const noexcept { return d_->labels; }
  std::string label(Element m) const {
    return has_labels() ? d_->labels[m] : std::to_string(m);
  }

  Table table() const {
    Table t(size(), std::vector<Element>(size()));
    for (Element a = 0; a < size(); ++a)
      for (Element b = 0; b < size(); ++b) t[a][b] = add(a, b);
    return t;
  }

  /// Same addition table (labels are display-only).
  friend bool operator==(FiniteCommMonoid const& x, FiniteCommMonoid const& y) {
    return x.d_ == y.d_ || (x.d_->n == y.d_->n && x.d_->add == y.d_->add);
  }

  friend FiniteCommMonoid validate_monoid(Table const& table,
                                          std::vector<std::string> labels);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<Element> add{0};
    std::vector<std::string> labels;
    std::vector<Orbit> orbits{Orbit{}};
    std::vector<std::vector<Element>> powers{{0}};
  };

  explicit FiniteCommMonoid(std::shared_ptr<Data const> d) : d_(std::move(d)) {}

  static std::shared_ptr<Data const> trivial_data() {
    static auto const d = std::make_shared<Data const>();
    return d;
  }

  std::shared_ptr<Data const> d_;
};

/// Checks range, identity, commutativity and associativity (in that order)
/// and throws on the first violation with a witnessing tuple.
inline FiniteCommMonoid validate_monoid(Table const& table,
                                        std::vector<std::string> labels = {}) {
  std::size_t const n = table.size();
  if (n == 0) fail(ErrorKind::InvalidInput, {}, "monoid table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail(ErrorKind::InvalidInput, {a}, "table row has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n) fail(ErrorKind::OutOfRange, {a, b}, "table entry out of range");
  }
  if (!labels.empty() && labels.size() != n)
    fail(ErrorKind::InvalidInput, {labels.size()}, "label count differs from size");
  for (Element m = 0; m < n; ++m)
    if (table[0][m] != m) fail(ErrorKind::NotIdentity, {m}, "0 + m != m");
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) fail(ErrorKind::NotCommutative, {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorKind::NotAssociative, {a, b, c});

  auto d = std::make_shared<FiniteCommMonoid::Data>();
  d->n = n;
  d->add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d->add[a * n + b] = table[a][b];
  d->labels = std::move(labels);
  d->orbits.assign(n, Orbit{});
  d->powers.assign(n, {});
  for (Element m = 0; m < n; ++m) {
    // first_seen[x] = k with k·m = x, or 0 if not yet seen.
    std::vector<std::size_t> first_seen(n, 0);
    auto& pw = d->powers[m];
    Element x = m;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[x] != 0) {
        d->orbits[m] = Orbit{first_seen[x], k - first_seen[x]};
        break;
      }
      first_seen[x] = k;
      pw.push_back(x);
      x = table[x][m];
    }
  }
  return FiniteCommMonoid(std::move(d));
}

/// k·m by repeated table lookup.
inline Element scalar_action(FiniteCommMonoid const& M, std::uint64_t k, Element m) {
  if (m >= M.size()) fail(ErrorKind::OutOfRange, {m});
  return M.scalar(k, m);
}

inline Orbit orbit(FiniteCommMonoid const& M, Element m) {
  if (m >= M.size()) fail(ErrorKind::OutOfRange, {m});
  return M.orbit(m);
}

// ---------------------------------------------------------------------------
// Standard monoids

inline FiniteCommMonoid trivial_monoid() { return validate_monoid({{0}}); }

/// ℤ/n.
inline FiniteCommMonoid cyclic_group(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate_monoid(t);
}

/// {0, 1, ..., n-1} with a + b = max(a, b).
inline FiniteCommMonoid saturating_chain(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = std::max(a, b);
  return validate_monoid(t);
}

/// Addition on {0, ..., index+period-1}: sums past the top wrap back into
/// the cycle starting at `index`.
inline Element cyclic_monoid_add(std::size_t index, std::size_t period, std::uint64_t x) {
  if (x < index + period) return static_cast<Element>(x);
  return static_cast<Element>(index + (x - index) % period);
}

/// ℕ₀ modulo index ~ index + period.
inline FiniteCommMonoid cyclic_monoid(std::size_t index, std::size_t period) {
  if (period == 0) fail(ErrorKind::InvalidInput, {}, "period must be positive");
  std::size_t const n = index + period;
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = cyclic_monoid_add(index, period, a + b);
  return validate_monoid(t);
}

// ---------------------------------------------------------------------------
// Homomorphisms

class MonoidHom {
 public:
  MonoidHom() = default;

  FiniteCommMonoid const& source() const noexcept { return source_; }
  FiniteCommMonoid const& target() const noexcept { return target_; }
  std::vector<Element> const& image() const noexcept { return image_; }

  Element operator()(Element m) const { return image_[m]; }

  bool is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (auto y : image_) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

  bool is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    for (auto y : image_) hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  Subset image_set() const {
    Subset s(image_.begin(), image_.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  friend bool operator==(MonoidHom const& f, MonoidHom const& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ && f.image_ == g.image_;
  }

  friend MonoidHom hom_check(FiniteCommMonoid const&, FiniteCommMonoid const&,
                             std::vector<Element>);

 private:
  MonoidHom(FiniteCommMonoid s, FiniteCommMonoid t, std::vector<Element> img)
      : source_(std::move(s)), target_(std::move(t)), image_(std::move(img)) {}

  FiniteCommMonoid source_;
  FiniteCommMonoid target_;
  std::vector<Element> image_;
};

/// Validates that `image` is a homomorphism source -> target.
inline MonoidHom hom_check(FiniteCommMonoid const& source, FiniteCommMonoid const& target,
                           std::vector<Element> image) {
  if (image.size() != source.size())
    fail(ErrorKind::InvalidInput, {image.size()}, "image length differs from source size");
  for (Element m = 0; m < image.size(); ++m)
    if (image[m] >= target.size()) fail(ErrorKind::OutOfRange, {m});
  if (image[0] != 0) fail(ErrorKind::IdentityNotPreserved, {image[0]});
  for (Element a = 0; a < source.size(); ++a)
    for (Element b = a; b < source.size(); ++b)
      if (image[source.add(a, b)] != target.add(image[a], image[b]))
        fail(ErrorKind::NotAdditive, {a, b});
  return MonoidHom(source, target, std::move(image));
}

inline MonoidHom identity_hom(FiniteCommMonoid const& M) {
  std::vector<Element> img(M.size());
  std::iota(img.begin(), img.end(), Element{0});
  return hom_check(M, M, std::move(img));
}

inline MonoidHom zero_hom(FiniteCommMonoid const& M, FiniteCommMonoid const& N) {
  return hom_check(M, N, std::vector<Element>(M.size(), 0));
}

/// g ∘ f.
inline MonoidHom compose(MonoidHom const& g, MonoidHom const& f) {
  if (!(f.target() == g.source()))
    fail(ErrorKind::InvalidInput, {}, "compose: codomain/domain mismatch");
  std::vector<Element> img(f.source().size());
  for (Element m = 0; m < img.size(); ++m) img[m] = g(f(m));
  return hom_check(f.source(), g.target(), std::move(img));
}

/// Pointwise sum f + g in Hom(M, N).
inline MonoidHom pointwise_sum(MonoidHom const& f, MonoidHom const& g) {
  std::vector<Element> img(f.source().size());
  for (Element m = 0; m < img.size(); ++m) img[m] = f.target().add(f(m), g(m));
  return hom_check(f.source(), f.target(), std::move(img));
}

// ---------------------------------------------------------------------------
// Submonoids

/// Closure of subset ∪ {0} under addition.
inline Subset submonoid_generated(FiniteCommMonoid const& M, Subset const& subset) {
  std::vector<bool> in(M.size(), false);
  std::vector<Element> members{0};
  in[0] = true;
  std::vector<Element> work;
  for (auto x : subset) {
    if (x >= M.size()) fail(ErrorKind::OutOfRange, {x});
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
  }
  while (!work.empty()) {
    auto x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto y = M.add(x, members[i]);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        work.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_submonoid(FiniteCommMonoid const& M, Subset const& S) {
  if (S.empty() || !std::is_sorted(S.begin(), S.end())) return false;
  if (S.back() >= M.size() || S.front() != 0) return false;
  for (auto a : S)
    for (auto b : S)
      if (!std::binary_search(S.begin(), S.end(), M.add(a, b))) return false;
  return true;
}

inline Subset normalize_subset(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// A submonoid materialized as a monoid of its own, with the inclusion.
struct Restriction {
  FiniteCommMonoid monoid;
  MonoidHom inclusion;
  Subset members;

  /// Index of an ambient element inside the restricted monoid.
  Element local(Element ambient) const {
    auto it = std::lower_bound(members.begin(), members.end(), ambient);
    if (it == members.end() || *it != ambient) fail(ErrorKind::OutOfRange, {ambient});
    return static_cast<Element>(it - members.begin());
  }
};

inline Restriction restrict_to(FiniteCommMonoid const& M, Subset S) {
  S = normalize_subset(std::move(S));
  if (!is_submonoid(M, S)) fail(ErrorKind::NotASubmonoid, {}, "subset is not a submonoid");
  Table t(S.size(), std::vector<Element>(S.size()));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      t[i][j] = static_cast<Element>(
          std::lower_bound(S.begin(), S.end(), M.add(S[i], S[j])) - S.begin());
  std::vector<std::string> labels;
  if (M.has_labels())
    for (auto x : S) labels.push_back(M.label(x));
  auto sub = validate_monoid(t, std::move(labels));
  auto inc = hom_check(sub, M, S);
  return Restriction{std::move(sub), std::move(inc), std::move(S)};
}

/// All submonoids, by subset enumeration over the non-zero elements.
inline std::vector<Subset> enumerate_submonoids(FiniteCommMonoid const& M,
                                                Budget& budget) {
  std::size_t const rest = M.size() - 1;
  if (rest >= 8 * sizeof(std::size_t) - 1)
    fail(ErrorKind::BudgetExceeded, {M.size()}, "too many subsets");
  std::size_t const count = std::size_t{1} << rest;
  budget.spend(count, "enumerate_submonoids");
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Subset s{0};
    for (std::size_t i = 0; i < rest; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    if (is_submonoid(M, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hom enumeration

namespace detail {

/// Greedy generating set together with a spanning tree: every non-zero
/// element x is reached as parent[x] + generator[via[x]].
struct Derivation {
  std::vector<Element> generators;
  std::vector<Element> order;   // BFS order starting at 0
  std::vector<Element> parent;
  std::vector<std::size_t> via;
};

inline Derivation derive(FiniteCommMonoid const& M) {
  Derivation d;
  Subset reached{0};
  for (Element m = 1; m < M.size(); ++m) {
    if (!std::binary_search(reached.begin(), reached.end(), m)) {
      d.generators.push_back(m);
      reached = submonoid_generated(M, d.generators);
    }
  }
  std::size_t const n = M.size();
  d.parent.assign(n, 0);
  d.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  d.order.push_back(0);
  for (std::size_t head = 0; head < d.order.size(); ++head) {
    auto x = d.order[head];
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
      auto y = M.add(x, d.generators[g]);
      if (!seen[y]) {
        seen[y] = true;
        d.parent[y] = x;
        d.via[y] = g;
        d.order.push_back(y);
      }
    }
  }
  return d;
}

inline bool is_additive(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                        std::vector<Element> const& img) {
  for (Element a = 0; a < M.size(); ++a)
    for (Element b = a; b < M.size(); ++b)
      if (img[M.add(a, b)] != N.add(img[a], img[b])) return false;
  return true;
}

inline std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace detail

/// All homomorphisms M -> N in lexicographic order of their image tables.
/// Candidates are assignments of images to a generating set of M.
inline std::vector<MonoidHom> enumerate_homs(FiniteCommMonoid const& M,
                                             FiniteCommMonoid const& N, Budget& budget) {
  auto const d = detail::derive(M);
  std::size_t const k = d.generators.size();
  auto const candidates = detail::checked_pow(N.size(), k, budget.limit());
  budget.spend(candidates, "enumerate_homs");

  std::vector<std::vector<Element>> images;
  std::vector<Element> choice(k, 0);
  std::vector<Element> img(M.size());
  for (;;) {
    img[0] = 0;
    for (std::size_t i = 1; i < d.order.size(); ++i) {
      auto x = d.order[i];
      img[x] = N.add(img[d.parent[x]], choice[d.via[x]]);
    }
    if (detail::is_additive(M, N, img)) images.push_back(img);
    std::size_t pos = 0;
    while (pos < k && ++choice[pos] == N.size()) choice[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(images.begin(), images.end());
  std::vector<MonoidHom> out;
  out.reserve(images.size());
  for (auto& im : images) out.push_back(hom_check(M, N, std::move(im)));
  return out;
}

inline std::vector<MonoidHom> enumerate_homs(FiniteCommMonoid const& M,
                                             FiniteCommMonoid const& N,
                                             std::size_t budget = Budget::kDefault) {
  Budget b(budget);
  return enumerate_homs(M, N, b);
}

/// Hom(M, N) as a commutative monoid under pointwise addition. Element i of
/// `monoid` is homs[i]; the zero map is element 0.
struct HomMonoid {
  FiniteCommMonoid monoid;
  std::vector<MonoidHom> homs;

  std::optional<Element> index_of(std::vector<Element> const& image) const {
    auto it = std::lower_bound(homs.begin(), homs.end(), image,
                               [](MonoidHom const& h, std::vector<Element> const& im) {
                                 return h.image() < im;
                               });
    if (it == homs.end() || it->image() != image) return std::nullopt;
    return static_cast<Element>(it - homs.begin());
  }
};

inline HomMonoid hom_monoid(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                            Budget& budget) {
  HomMonoid h;
  h.homs = enumerate_homs(M, N, budget);
  std::size_t const n = h.homs.size();
  Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto idx = h.index_of(pointwise_sum(h.homs[i], h.homs[j]).image());
      if (!idx) fail(ErrorKind::WellDefinednessFailure, {i, j}, "Hom set not closed under +");
      t[i][j] = *idx;
    }
  h.monoid = validate_monoid(t);
  return h;
}

// ---------------------------------------------------------------------------
// Biproducts

/// Finite biproduct ⊕ M_j with componentwise addition. Tuples are encoded
/// in mixed radix with the first factor most significant.
struct Biproduct {
  FiniteCommMonoid sum;
  std::vector<FiniteCommMonoid> factors;
  std::vector<MonoidHom> injections;
  std::vector<MonoidHom> projections;

  std::vector<Element> decode(Element x) const {
    std::vector<Element> t(factors.size());
    for (std::size_t j = factors.size(); j-- > 0;) {
      t[j] = x % factors[j].size();
      x /= factors[j].size();
    }
    return t;
  }

  Element encode(std::span<Element const> t) const {
    Element x = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) x = x * factors[j].size() + t[j];
    return x;
  }
};

inline Biproduct biproduct(std::vector<FiniteCommMonoid> factors) {
  Biproduct B;
  B.factors = std::move(factors);
  std::size_t n = 1;
  for (auto const& F : B.factors) n *= F.size();
  bool labelled = std::any_of(B.factors.begin(), B.factors.end(),
                              [](auto const& F) { return F.has_labels(); });

  Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> tuples(n);
  for (Element x = 0; x < n; ++x) tuples[x] = B.decode(x);
  std::vector<Element> s(B.factors.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (std::size_t j = 0; j < s.size(); ++j)
        s[j] = B.factors[j].add(tuples[x][j], tuples[y][j]);
      t[x][y] = B.encode(s);
    }
    if (labelled) {
      std::string l = "(";
      for (std::size_t j = 0; j < s.size(); ++j)
        l += (j ? "," : "") + B.factors[j].label(tuples[x][j]);
      labels.push_back(l + ")");
    }
  }
  B.sum = validate_monoid(t, std::move(labels));
  for (std::size_t j = 0; j < B.factors.size(); ++j) {
    std::vector<Element> inj(B.factors[j].size());
    std::vector<Element> tuple(B.factors.size(), 0);
    for (Element m = 0; m < inj.size(); ++m) {
      tuple[j] = m;
      inj[m] = B.encode(tuple);
    }
    std::vector<Element> proj(n);
    for (Element x = 0; x < n; ++x) proj[x] = tuples[x][j];
    B.injections.push_back(hom_check(B.factors[j], B.sum, std::move(inj)));
    B.projections.push_back(hom_check(B.sum, B.factors[j], std::move(proj)));
  }
  return B;
}

inline Biproduct biproduct(FiniteCommMonoid const& M, FiniteCommMonoid const& N) {
  return biproduct(std::vector<FiniteCommMonoid>{M, N});
}

// ---------------------------------------------------------------------------
// Internal direct sums and direct summands

struct DirectSumVerdict {
  bool covers = false;                 // (a) Σ S_i = M
  bool intersections_trivial = false;  // S_i ∩ Σ_{j≠i} S_j = {0}
  bool zero_sum_trivial = false;       // Σ s_i = 0 ⇒ all s_i = 0
  bool unique_decomposition = false;   // (c) Σ s_i = Σ s'_i ⇒ s_i = s'_i
  /// Two distinct tuples with equal sums, when (c) fails.
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> collision;

  bool criterion_b() const { return intersections_trivial && zero_sum_trivial; }
  bool is_internal_direct_sum() const { return covers && unique_decomposition; }
};

inline DirectSumVerdict internal_direct_sum_check(FiniteCommMonoid const& M,
                                                  std::vector<Subset> subsets,
                                                  std::size_t budget = Budget::kDefault) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    subsets[i] = normalize_subset(std::move(subsets[i]));
    if (!is_submonoid(M, subsets[i])) fail(ErrorKind::NotASubmonoid, {i});
  }
  std::size_t total = 1;
  for (auto const& s : subsets) {
    if (total > budget / s.size())
      fail(ErrorKind::BudgetExceeded, {budget}, "internal_direct_sum_check");
    total *= s.size();
  }

  DirectSumVerdict v;
  std::size_t const k = subsets.size();
  std::vector<std::optional<std::vector<Element>>> first_tuple(M.size());
  std::vector<bool> reached(M.size(), false);
  v.unique_decomposition = true;
  v.zero_sum_trivial = true;
  std::vector<std::size_t> pos(k, 0);
  std::vector<Element> tuple(k);
  for (;;) {
    Element s = 0;
    bool all_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      tuple[i] = subsets[i][pos[i]];
      s = M.add(s, tuple[i]);
      all_zero = all_zero && tuple[i] == 0;
    }
    reached[s] = true;
    if (s == 0 && !all_zero) v.zero_sum_trivial = false;
    if (first_tuple[s]) {
      if (v.unique_decomposition) v.collision = std::make_pair(*first_tuple[s], tuple);
      v.unique_decomposition = false;
    } else {
      first_tuple[s] = tuple;
    }
    std::size_t p = k;
    while (p-- > 0) {
      if (++pos[p] < subsets[p].size()) break;
      pos[p] = 0;
    }
    if (p == static_cast<std::size_t>(-1)) break;
  }
  v.covers = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });

  v.intersections_trivial = true;
  for (std::size_t i = 0; i < k && v.intersections_trivial; ++i) {
    Subset others;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others.insert(others.end(), subsets[j].begin(), subsets[j].end());
    auto rest = submonoid_generated(M, others);
    for (auto x : subsets[i])
      if (x != 0 && std::binary_search(rest.begin(), rest.end(), x)) {
        v.intersections_trivial = false;
        break;
      }
  }
  return v;
}

struct SummandAnalysis {
  std::optional<Subset> complement;     // M' with N = M ⊕ M' internally
  std::optional<MonoidHom> retraction;  // p: N -> M with p ∘ ι = id_M
  std::optional<MonoidHom> idempotent;  // f: N -> N with f² = f, f(N) = M
};

/// Three independent brute-force searches; any subset of them may succeed.
inline SummandAnalysis direct_summand_analysis(FiniteCommMonoid const& N, Subset M,
                                               std::size_t budget = Budget::kDefault) {
  M = normalize_subset(std::move(M));
  if (!is_submonoid(N, M)) fail(ErrorKind::NotASubmonoid, {0});
  Budget b(budget);
  SummandAnalysis out;

  for (auto const& cand : enumerate_submonoids(N, b)) {
    b.spend(N.size(), "direct_summand_analysis");
    if (internal_direct_sum_check(N, {M, cand}, b.limit()).is_internal_direct_sum()) {
      out.complement = cand;
      break;
    }
  }

  auto sub = restrict_to(N, M);
  for (auto const& p : enumerate_homs(N, sub.monoid, b)) {
    if (compose(p, sub.inclusion) == identity_hom(sub.monoid)) {
      out.retraction = p;
      break;
    }
  }
  for (auto const& f : enumerate_homs(N, N, b)) {
    if (compose(f, f) == f && f.image_set() == M) {
      out.idempotent = f;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free ℕ₀-vectors over a finite label set

/// α: X -> ℕ₀ with finite support; zero entries are never stored.
template <typename Label = std::string>
class NatVec {
 public:
  NatVec() = default;

  static NatVec basis(Label x, std::uint64_t k = 1) {
    NatVec v;
    v.set(std::move(x), k);
    return v;
  }

  std::uint64_t operator[](Label const& x) const {
    auto it = coords_.find(x);
    return it == coords_.end() ? 0 : it->second;
  }

  void set(Label x, std::uint64_t k) {
    if (k == 0)
      coords_.erase(x);
    else
      coords_[std::move(x)] = k;
  }

  NatVec& operator+=(NatVec const& o) {
    for (auto const& [x, k] : o.coords_) coords_[x] += k;
    return *this;
  }
  friend NatVec operator+(NatVec a, NatVec const& b) { return a += b; }

  friend NatVec operator*(std::uint64_t r, NatVec v) {
    if (r == 0) return {};
    for (auto& [x, k] : v.coords_) k *= r;
    return v;
  }

  bool empty() const noexcept { return coords_.empty(); }
  std::map<Label, std::uint64_t> const& coords() const noexcept { return coords_; }

  friend bool operator==(NatVec const&, NatVec const&) = default;

 private:
  std::map<Label, std::uint64_t> coords_;
};

/// The unique hom ℕ₀X -> M extending f: X -> M, g(α) = Σ α(x)·f(x).
template <typename Label = std::string>
class FreeExtension {
 public:
  FreeExtension(FiniteCommMonoid M, std::map<Label, Element> f)
      : M_(std::move(M)), f_(std::move(f)) {
    for (auto const& [x, m] : f_)
      if (m >= M_.size()) fail(ErrorKind::OutOfRange, {m});
  }

  Element operator()(NatVec<Label> const& v) const {
    Element acc = 0;
    for (auto const& [x, k] : v.coords()) {
      auto it = f_.find(x);
      if (it == f_.end()) fail(ErrorKind::InvalidInput, {}, "label outside X");
      acc = M_.add(acc, M_.scalar(k, it->second));
    }
    return acc;
  }

  FiniteCommMonoid const& target() const noexcept { return M_; }

 private:
  FiniteCommMonoid M_;
  std::map<Label, Element> f_;
};

template <typename Label>
FreeExtension<Label> free_universal_map(FiniteCommMonoid const& M,
                                        std::map<Label, Element> f) {
  return FreeExtension<Label>(M, std::move(f));
}

// ---------------------------------------------------------------------------
// Isomorphism search and small-monoid enumeration

/// Some isomorphism M -> N, by permutation search fixing 0.
inline std::optional<MonoidHom> find_isomorphism(FiniteCommMonoid const& M,
                                                 FiniteCommMonoid const& N,
                                                 std::size_t budget = Budget::kDefault) {
  if (M.size() != N.size()) return std::nullopt;
  std::vector<Element> perm(M.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  Budget b(budget);
  do {
    b.spend(1, "find_isomorphism");
    if (detail::is_additive(M, N, perm)) return hom_check(M, N, perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

inline bool isomorphic(FiniteCommMonoid const& M, FiniteCommMonoid const& N) {
  return find_isomorphism(M, N).has_value();
}

/// All commutative monoid tables of the given size with identity 0, by
/// backtracking over the upper triangle with early associativity pruning.
/// With `up_to_isomorphism`, keeps one table per isomorphism class.
inline std::vector<FiniteCommMonoid> enumerate_monoids(std::size_t n,
                                                       bool up_to_isomorphism,
                                                       Budget& budget) {
  if (n == 0) return {};
  Table t(n, std::vector<Element>(n, n));
  for (Element m = 0; m < n; ++m) t[0][m] = t[m][0] = m;
  std::vector<std::pair<Element, Element>> cells;
  for (Element a = 1; a < n; ++a)
    for (Element b = a; b < n; ++b) cells.emplace_back(a, b);

  auto consistent = [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        auto ab = t[a][b];
        if (ab == n) continue;
        for (Element c = 0; c < n; ++c) {
          auto bc = t[b][c];
          if (bc == n) continue;
          auto l = t[ab][c], r = t[a][bc];
          if (l != n && r != n && l != r) return false;
        }
      }
    return true;
  };

  std::vector<FiniteCommMonoid> out;
  std::vector<Table> canon;
  std::vector<Element> perm(n);

  auto canonical = [&](Table const& tab) {
    std::iota(perm.begin(), perm.end(), Element{0});
    Table best;
    do {
      std::vector<Element> inv(n);
      for (Element i = 0; i < n; ++i) inv[perm[i]] = i;
      Table c(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) c[inv[a]][inv[b]] = inv[tab[a][b]];
      if (best.empty() || c < best) best = std::move(c);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    budget.spend(1, "enumerate_monoids");
    if (i == cells.size()) {
      if (up_to_isomorphism) {
        auto c = canonical(t);
        auto it = std::lower_bound(canon.begin(), canon.end(), c);
        if (it != canon.end() && *it == c) return;
        canon.insert(it, c);
        out.push_back(validate_monoid(c));
      } else {
        out.push_back(validate_monoid(t));
      }
      return;
    }
    auto [a, b] = cells[i];
    for (Element v = 0; v < n; ++v) {
      t[a][b] = t[b][a] = v;
      if (consistent()) rec(i + 1);
    }
    t[a][b] = t[b][a] = n;
  };
  rec(0);
  return out;
}

inline std::vector<FiniteCommMonoid> enumerate_monoids(std::size_t n, bool up_to_isomorphism,
                                                       std::size_t budget = Budget::kDefault) {
  Budget b(budget);
  return enumerate_monoids(n, up_to_isomorphism, b);
}

}  // namespace semimod
