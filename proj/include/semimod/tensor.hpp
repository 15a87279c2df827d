#pragma once

// Tensor products M ⊗ N of finite commutative monoids (over ℕ₀), built as
// the free commutative monoid on (M∖0) × (N∖0) modulo the congruence
// generated by biadditivity, together with induced maps and the coherence
// isomorphisms (associativity, symmetry, unit, inner-hom adjunction).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "union_find.hpp"

namespace semimod {

/// Dense coordinate vector in ℕ₀^G.
using NatCoords = std::vector<std::uint32_t>;

/// Finitely presented commutative monoid with generators G, one reduction
/// rule (i_g + p_g)·e_g ~ i_g·e_g per generator, and extra relation pairs.
/// The rules confine every class to the box 0 ≤ v_g ≤ i_g + p_g − 1.
struct PresentedCommMonoid {
  std::vector<std::string> generator_labels;
  std::vector<Orbit> rules;
  std::vector<std::pair<NatCoords, NatCoords>> relations;

  std::size_t rank() const noexcept { return rules.size(); }

  std::uint32_t box(std::size_t g) const {
    return static_cast<std::uint32_t>(rules[g].index + rules[g].period - 1);
  }

  std::uint32_t reduce_coord(std::size_t g, std::uint64_t v) const {
    auto const& r = rules[g];
    if (v < r.index + r.period) return static_cast<std::uint32_t>(v);
    return static_cast<std::uint32_t>(r.index + (v - r.index) % r.period);
  }

  NatCoords reduce(NatCoords v) const {
    for (std::size_t g = 0; g < v.size(); ++g) v[g] = reduce_coord(g, v[g]);
    return v;
  }

  /// Number of box vectors, or cap + 1 if it would exceed cap.
  std::size_t volume(std::size_t cap) const {
    std::size_t vol = 1;
    for (std::size_t g = 0; g < rank(); ++g) {
      std::size_t const radix = box(g) + 1;
      if (vol > cap / radix) return cap + 1;
      vol *= radix;
    }
    return vol;
  }

  /// Mixed-radix code, first coordinate most significant, so numeric order
  /// is lexicographic order.
  std::size_t encode(NatCoords const& v) const {
    std::size_t x = 0;
    for (std::size_t g = 0; g < rank(); ++g) x = x * (box(g) + 1) + v[g];
    return x;
  }

  NatCoords decode(std::size_t x) const {
    NatCoords v(rank());
    for (std::size_t g = rank(); g-- > 0;) {
      v[g] = static_cast<std::uint32_t>(x % (box(g) + 1));
      x /= box(g) + 1;
    }
    return v;
  }
};

/// The finite monoid presented by `pres`, materialized by saturating a
/// union-find over the box.
struct SaturatedPresentation {
  PresentedCommMonoid presentation;
  FiniteCommMonoid monoid;
  std::vector<std::uint32_t> class_of;  // box code -> element of monoid
  std::vector<NatCoords> representatives;  // lexicographically least per class

  Element class_of_vector(NatCoords const& v) const {
    return class_of[presentation.encode(presentation.reduce(v))];
  }
};

inline SaturatedPresentation saturate(PresentedCommMonoid pres,
                                      std::size_t volume_cap = 1'000'000) {
  auto const vol = pres.volume(volume_cap);
  if (vol > volume_cap) fail(ErrorKind::BudgetExceeded, {vol}, "presentation box volume");
  std::size_t const rank = pres.rank();

  std::vector<std::size_t> stride(rank, 1);
  for (std::size_t g = rank; g-- > 1;) stride[g - 1] = stride[g] * (pres.box(g) + 1);
  auto shift = [&](std::size_t code, std::size_t g) {
    std::uint32_t const digit = (code / stride[g]) % (pres.box(g) + 1);
    std::uint32_t const next = pres.reduce_coord(g, digit + 1u);
    return code - digit * stride[g] + next * stride[g];
  };

  UnionFind uf(vol);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (auto const& [l, r] : pres.relations)
    work.emplace_back(pres.encode(pres.reduce(l)), pres.encode(pres.reduce(r)));
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    for (std::size_t g = 0; g < rank; ++g) work.emplace_back(shift(u, g), shift(v, g));
  }

  SaturatedPresentation out;
  auto const labels = uf.min_labels();
  out.class_of.assign(vol, 0);
  std::vector<std::uint32_t> index_of_rep(vol, 0);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < vol; ++x) {
    if (labels[x] == x) {
      index_of_rep[x] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    }
    out.class_of[x] = index_of_rep[labels[x]];
  }
  std::size_t const n = reps.size();
  for (auto r : reps) out.representatives.push_back(pres.decode(r));
  Table t(n, std::vector<Element>(n));
  NatCoords s(rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t g = 0; g < rank; ++g)
        s[g] = pres.reduce_coord(g, std::uint64_t{out.representatives[i][g]} +
                                        out.representatives[j][g]);
      t[i][j] = t[j][i] = out.class_of[pres.encode(s)];
    }
  out.monoid = validate_monoid(t);
  out.presentation = std::move(pres);
  return out;
}

struct TensorOptions {
  /// Cap on the box volume of the presentation.
  std::size_t budget = 1'000'000;
  /// Optional permutation of the generator list (m, n) ∈ (M∖0) × (N∖0),
  /// which is otherwise ordered with m major.
  std::optional<std::vector<std::size_t>> generator_order;
};

struct TensorProduct {
  FiniteCommMonoid left;
  FiniteCommMonoid right;
  FiniteCommMonoid monoid;
  std::vector<ElementPair> generators;  // coordinate g is e_(m,n)
  SaturatedPresentation saturated;
  std::vector<std::vector<Element>> bilinear;  // bilinear[m][n] = m ⊗ n

  Element tensor(Element m, Element n) const { return bilinear[m][n]; }
  Element class_of_vector(NatCoords const& v) const { return saturated.class_of_vector(v); }
};

/// Generators (M∖0) × (N∖0); relations e_(m,n) + e_(m',n) ~ e_(m+m',n) and
/// e_(m,n) + e_(m,n') ~ e_(m,n+n'), where e_(x,y) is the empty vector when
/// x or y is 0. Each generator also gets the rule from the orbit of m in M
/// or of n in N, whichever gives the smaller box (M on ties); both follow
/// from biadditivity since k·(m ⊗ n) = (k·m) ⊗ n = m ⊗ (k·n).
inline TensorProduct tensor_product(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                                    TensorOptions const& opt = {}) {
  std::vector<ElementPair> gens;
  for (Element m = 1; m < M.size(); ++m)
    for (Element n = 1; n < N.size(); ++n) gens.emplace_back(m, n);
  if (opt.generator_order) {
    auto const& perm = *opt.generator_order;
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < std::max(sorted.size(), gens.size()); ++i)
      if (i >= sorted.size() || sorted[i] != i)
        fail(ErrorKind::InvalidInput, {}, "generator_order is not a permutation");
    std::vector<ElementPair> permuted;
    for (auto i : perm) permuted.push_back(gens[i]);
    gens = std::move(permuted);
  }
  std::size_t const rank = gens.size();
  std::vector<std::vector<std::size_t>> coord(M.size(), std::vector<std::size_t>(N.size(), rank));
  for (std::size_t g = 0; g < rank; ++g) coord[gens[g].first][gens[g].second] = g;

  PresentedCommMonoid pres;
  for (auto [m, n] : gens) {
    auto const& om = M.orbit(m);
    auto const& on = N.orbit(n);
    pres.rules.push_back(on.index + on.period < om.index + om.period ? on : om);
    pres.generator_labels.push_back(M.label(m) + "⊗" + N.label(n));
  }
  auto basis = [&](Element m, Element n) {
    NatCoords v(rank, 0);
    if (m != 0 && n != 0) v[coord[m][n]] += 1;
    return v;
  };
  auto pair_sum = [&](std::size_t g, std::size_t h) {
    NatCoords v(rank, 0);
    v[g] += 1;
    v[h] += 1;
    return v;
  };
  for (Element n = 1; n < N.size(); ++n)
    for (Element m = 1; m < M.size(); ++m)
      for (Element mp = m; mp < M.size(); ++mp)
        pres.relations.emplace_back(pair_sum(coord[m][n], coord[mp][n]), basis(M.add(m, mp), n));
  for (Element m = 1; m < M.size(); ++m)
    for (Element n = 1; n < N.size(); ++n)
      for (Element np = n; np < N.size(); ++np)
        pres.relations.emplace_back(pair_sum(coord[m][n], coord[m][np]), basis(m, N.add(n, np)));

  TensorProduct T;
  T.left = M;
  T.right = N;
  T.generators = gens;
  T.saturated = saturate(std::move(pres), opt.budget);
  T.monoid = T.saturated.monoid;
  T.bilinear.assign(M.size(), std::vector<Element>(N.size(), 0));
  for (Element m = 1; m < M.size(); ++m)
    for (Element n = 1; n < N.size(); ++n) T.bilinear[m][n] = T.class_of_vector(basis(m, n));
  return T;
}

// ---------------------------------------------------------------------------
// Balanced maps and the universal property

/// A map f: M × N -> A given as a table f[m][n].
using BilinearTable = std::vector<std::vector<Element>>;

struct BalancedVerdict {
  bool balanced = true;
  /// 1: f(m+m',n) = f(m,n)+f(m',n)   2: f(m,n+n') = f(m,n)+f(m,n')
  /// 3: f(k·m,n) = f(m,k·n)           4: f(0,n) = 0 = f(m,0)
  int axiom = 0;
  std::vector<std::size_t> witness;
};

inline BalancedVerdict balanced_check(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                                      FiniteCommMonoid const& A, BilinearTable const& f) {
  if (f.size() != M.size())
    fail(ErrorKind::InvalidInput, {f.size()}, "balanced map table has wrong shape");
  for (auto const& row : f) {
    if (row.size() != N.size())
      fail(ErrorKind::InvalidInput, {row.size()}, "balanced map table has wrong shape");
    for (auto x : row)
      if (x >= A.size()) fail(ErrorKind::OutOfRange, {x});
  }
  auto bad = [](int axiom, std::vector<std::size_t> w) {
    return BalancedVerdict{false, axiom, std::move(w)};
  };
  for (Element m = 0; m < M.size(); ++m)
    for (Element mp = m; mp < M.size(); ++mp)
      for (Element n = 0; n < N.size(); ++n)
        if (f[M.add(m, mp)][n] != A.add(f[m][n], f[mp][n])) return bad(1, {m, mp, n});
  for (Element m = 0; m < M.size(); ++m)
    for (Element n = 0; n < N.size(); ++n)
      for (Element np = n; np < N.size(); ++np)
        if (f[m][N.add(n, np)] != A.add(f[m][n], f[m][np])) return bad(2, {m, n, np});
  // (k·m, k·n) is eventually periodic with index ≤ max(i) and period
  // lcm(p_m, p_n), so k up to their sum covers every case.
  for (Element m = 0; m < M.size(); ++m)
    for (Element n = 0; n < N.size(); ++n) {
      auto const& om = M.orbit(m);
      auto const& on = N.orbit(n);
      auto const kmax = std::max(om.index, on.index) + std::lcm(om.period, on.period);
      for (std::uint64_t k = 0; k <= kmax; ++k)
        if (f[M.scalar(k, m)][n] != f[m][N.scalar(k, n)]) return bad(3, {m, n, k});
    }
  for (Element n = 0; n < N.size(); ++n)
    if (f[0][n] != 0) return bad(4, {0, n});
  for (Element m = 0; m < M.size(); ++m)
    if (f[m][0] != 0) return bad(4, {m, 0});
  return {};
}

/// The unique hom g: M ⊗ N -> A with g(m ⊗ n) = f(m, n). g is read off the
/// class representatives and then checked to be additive, to agree with
/// f on decomposables, and to be constant on every class of vectors of
/// total degree ≤ 2.
inline MonoidHom universal_factorization(TensorProduct const& T, FiniteCommMonoid const& A,
                                         BilinearTable const& f) {
  if (auto v = balanced_check(T.left, T.right, A, f); !v.balanced)
    fail(ErrorKind::NotBalanced, v.witness, "axiom " + std::to_string(v.axiom));
  auto eval = [&](NatCoords const& v) {
    Element acc = 0;
    for (std::size_t g = 0; g < v.size(); ++g)
      if (v[g]) acc = A.add(acc, A.scalar(v[g], f[T.generators[g].first][T.generators[g].second]));
    return acc;
  };
  auto const& reps = T.saturated.representatives;
  std::vector<Element> img(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) img[c] = eval(reps[c]);

  auto broken = [](std::vector<std::size_t> w) {
    fail(ErrorKind::WellDefinednessFailure, std::move(w), "factorization is not well defined");
  };
  std::size_t const rank = T.generators.size();
  NatCoords v(rank, 0);
  for (std::size_t g = 0; g < rank; ++g) {
    v[g] += 1;
    if (eval(v) != img[T.class_of_vector(v)]) broken({g});
    for (std::size_t h = g; h < rank; ++h) {
      v[h] += 1;
      if (eval(v) != img[T.class_of_vector(v)]) broken({g, h});
      v[h] -= 1;
    }
    v[g] -= 1;
  }
  for (Element m = 0; m < T.left.size(); ++m)
    for (Element n = 0; n < T.right.size(); ++n)
      if (img[T.tensor(m, n)] != f[m][n]) broken({m, n});
  try {
    return hom_check(T.monoid, A, std::move(img));
  } catch (Error const& e) {
    fail(ErrorKind::WellDefinednessFailure, e.witness(), "factorization is not additive");
  }
}

/// f ⊗ g: M ⊗ N -> M' ⊗ N', m ⊗ n ↦ f(m) ⊗ g(n).
inline MonoidHom induced_map(MonoidHom const& f, MonoidHom const& g, TensorProduct const& T,
                             TensorProduct const& Tp) {
  if (!(f.source() == T.left) || !(g.source() == T.right) || !(f.target() == Tp.left) ||
      !(g.target() == Tp.right))
    fail(ErrorKind::InvalidInput, {}, "induced_map: factors do not match the tensor products");
  BilinearTable t(T.left.size(), std::vector<Element>(T.right.size()));
  for (Element m = 0; m < T.left.size(); ++m)
    for (Element n = 0; n < T.right.size(); ++n) t[m][n] = Tp.tensor(f(m), g(n));
  return universal_factorization(T, Tp.monoid, t);
}

// ---------------------------------------------------------------------------
// Free factors

/// M ⊗ ℕ₀X realized as the |X|-fold biproduct M^X: the element Σ m_x ⊗ x
/// is the tuple (m_x). `unique_representation` records the exhaustive check
/// that the injected copies of M form an internal direct sum.
struct FreeTensor {
  Biproduct sum;
  std::vector<std::string> labels;
  bool unique_representation = false;

  FiniteCommMonoid const& monoid() const { return sum.sum; }
  /// m ⊗ x for the label at position x.
  Element represent(Element m, std::size_t x) const { return sum.injections[x](m); }
};

inline FreeTensor tensor_with_free(FiniteCommMonoid const& M, std::vector<std::string> labels) {
  FreeTensor F;
  F.sum = biproduct(std::vector<FiniteCommMonoid>(labels.size(), M));
  F.labels = std::move(labels);
  std::vector<Subset> parts;
  for (auto const& inj : F.sum.injections) parts.push_back(inj.image_set());
  F.unique_representation =
      internal_direct_sum_check(F.sum.sum, parts).is_internal_direct_sum();
  return F;
}

// ---------------------------------------------------------------------------
// Coherence isomorphisms

struct IsoWitness {
  MonoidHom forward;
  MonoidHom backward;
  bool verified = false;  // both composites are identities
};

namespace detail {
inline bool mutually_inverse(MonoidHom const& f, MonoidHom const& g) {
  return compose(g, f) == identity_hom(f.source()) && compose(f, g) == identity_hom(g.source());
}
}  // namespace detail

/// α: (X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z) from the four tensor products, built by
/// nested factorization: for each z, (x, y) ↦ x ⊗ (y ⊗ z) factors through
/// X ⊗ Y, and the resulting (w, z) ↦ β_z(w) factors through (X ⊗ Y) ⊗ Z.
inline IsoWitness associator(TensorProduct const& xy, TensorProduct const& xy_z,
                             TensorProduct const& yz, TensorProduct const& x_yz) {
  if (!(xy_z.left == xy.monoid) || !(x_yz.right == yz.monoid) || !(xy.left == x_yz.left) ||
      !(xy.right == yz.left) || !(xy_z.right == yz.right))
    fail(ErrorKind::InvalidInput, {}, "associator: tensor products do not fit together");
  auto const& X = xy.left;
  auto const& Y = xy.right;
  auto const& Z = yz.right;

  BilinearTable outer(xy.monoid.size(), std::vector<Element>(Z.size()));
  for (Element z = 0; z < Z.size(); ++z) {
    BilinearTable inner(X.size(), std::vector<Element>(Y.size()));
    for (Element x = 0; x < X.size(); ++x)
      for (Element y = 0; y < Y.size(); ++y) inner[x][y] = x_yz.tensor(x, yz.tensor(y, z));
    auto beta = universal_factorization(xy, x_yz.monoid, inner);
    for (Element w = 0; w < xy.monoid.size(); ++w) outer[w][z] = beta(w);
  }
  auto alpha = universal_factorization(xy_z, x_yz.monoid, outer);

  BilinearTable outer_inv(X.size(), std::vector<Element>(yz.monoid.size()));
  for (Element x = 0; x < X.size(); ++x) {
    BilinearTable inner(Y.size(), std::vector<Element>(Z.size()));
    for (Element y = 0; y < Y.size(); ++y)
      for (Element z = 0; z < Z.size(); ++z) inner[y][z] = xy_z.tensor(xy.tensor(x, y), z);
    auto gamma = universal_factorization(yz, xy_z.monoid, inner);
    for (Element w = 0; w < yz.monoid.size(); ++w) outer_inv[x][w] = gamma(w);
  }
  auto alpha_inv = universal_factorization(x_yz, xy_z.monoid, outer_inv);

  bool ok = detail::mutually_inverse(alpha, alpha_inv);
  for (Element x = 0; x < X.size() && ok; ++x)
    for (Element y = 0; y < Y.size() && ok; ++y)
      for (Element z = 0; z < Z.size() && ok; ++z)
        ok = alpha(xy_z.tensor(xy.tensor(x, y), z)) == x_yz.tensor(x, yz.tensor(y, z));
  return IsoWitness{std::move(alpha), std::move(alpha_inv), ok};
}

struct AssociativityData {
  TensorProduct mn, mn_p, np, m_np;
  IsoWitness alpha;
};

inline AssociativityData associativity_iso(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                                           FiniteCommMonoid const& P,
                                           TensorOptions const& opt = {}) {
  AssociativityData d;
  d.mn = tensor_product(M, N, opt);
  d.mn_p = tensor_product(d.mn.monoid, P, opt);
  d.np = tensor_product(N, P, opt);
  d.m_np = tensor_product(M, d.np.monoid, opt);
  d.alpha = associator(d.mn, d.mn_p, d.np, d.m_np);
  return d;
}

/// τ: M ⊗ N -> N ⊗ M, m ⊗ n ↦ n ⊗ m, with its inverse τ_{N,M}.
inline IsoWitness braiding(TensorProduct const& mn, TensorProduct const& nm) {
  if (!(mn.left == nm.right) || !(mn.right == nm.left))
    fail(ErrorKind::InvalidInput, {}, "braiding: factors are not swapped");
  BilinearTable t(mn.left.size(), std::vector<Element>(mn.right.size()));
  for (Element m = 0; m < mn.left.size(); ++m)
    for (Element n = 0; n < mn.right.size(); ++n) t[m][n] = nm.tensor(n, m);
  auto tau = universal_factorization(mn, nm.monoid, t);
  BilinearTable s(nm.left.size(), std::vector<Element>(nm.right.size()));
  for (Element n = 0; n < nm.left.size(); ++n)
    for (Element m = 0; m < nm.right.size(); ++m) s[n][m] = mn.tensor(m, n);
  auto tau_back = universal_factorization(nm, mn.monoid, s);
  bool ok = detail::mutually_inverse(tau, tau_back);
  return IsoWitness{std::move(tau), std::move(tau_back), ok};
}

struct SymmetryData {
  TensorProduct mn, nm;
  IsoWitness tau;
};

inline SymmetryData symmetry_iso(FiniteCommMonoid const& M, FiniteCommMonoid const& N,
                                 TensorOptions const& opt = {}) {
  SymmetryData d;
  d.mn = tensor_product(M, N, opt);
  d.nm = tensor_product(N, M, opt);
  d.tau = braiding(d.mn, d.nm);
  return d;
}

/// Naturality of τ: τ_{M',N'} ∘ (f ⊗ g) = (g ⊗ f) ∘ τ_{M,N}.
inline bool symmetry_natural(MonoidHom const& f, MonoidHom const& g, TensorProduct const& mn,
                             TensorProduct const& nm, TensorProduct const& mn2,
                             TensorProduct const& nm2) {
  auto lhs = compose(braiding(mn2, nm2).forward, induced_map(f, g, mn, mn2));
  auto rhs = compose(induced_map(g, f, nm, nm2), braiding(mn, nm).forward);
  return lhs == rhs;
}

/// Pentagon for four factors: the two composites
/// ((A⊗B)⊗C)⊗D -> A⊗(B⊗(C⊗D)) agree.
inline bool pentagon_commutes(FiniteCommMonoid const& A, FiniteCommMonoid const& B,
                              FiniteCommMonoid const& C, FiniteCommMonoid const& D,
                              TensorOptions const& opt = {}) {
  auto ab = tensor_product(A, B, opt);
  auto bc = tensor_product(B, C, opt);
  auto cd = tensor_product(C, D, opt);
  auto ab_c = tensor_product(ab.monoid, C, opt);
  auto a_bc = tensor_product(A, bc.monoid, opt);
  auto bc_d = tensor_product(bc.monoid, D, opt);
  auto b_cd = tensor_product(B, cd.monoid, opt);
  auto abc_d = tensor_product(ab_c.monoid, D, opt);     // ((AB)C)D
  auto ab_cd = tensor_product(ab.monoid, cd.monoid, opt);  // (AB)(CD)
  auto a_bcd = tensor_product(A, b_cd.monoid, opt);     // A(B(CD))
  auto a_bc_d = tensor_product(a_bc.monoid, D, opt);    // (A(BC))D
  auto a_bc_d2 = tensor_product(A, bc_d.monoid, opt);   // A((BC)D)

  auto top = compose(associator(ab, ab_cd, b_cd, a_bcd).forward,
                     associator(ab_c, abc_d, cd, ab_cd).forward);
  auto first = induced_map(associator(ab, ab_c, bc, a_bc).forward, identity_hom(D), abc_d, a_bc_d);
  auto middle = associator(a_bc, a_bc_d, bc_d, a_bc_d2).forward;
  auto last = induced_map(identity_hom(A), associator(bc, bc_d, cd, b_cd).forward, a_bc_d2, a_bcd);
  return top == compose(last, compose(middle, first));
}

/// Triangle with a free factor of rank one standing in for the unit ℕ₀:
/// (A ⊗ ℕ₀) ⊗ B -> A ⊗ B along ρ ⊗ id equals (id ⊗ λ) ∘ α. The unitors
/// are the rank-one representations M ⊗ ℕ₀{x} ≅ M^{x} ≅ M.
inline bool triangle_commutes(FiniteCommMonoid const& A, FiniteCommMonoid const& B,
                              TensorOptions const& opt = {}) {
  auto a1 = tensor_with_free(A, {"x"});
  auto b1 = tensor_with_free(B, {"x"});
  auto rho = a1.sum.projections[0];    // A ⊗ ℕ₀ -> A
  auto lambda = b1.sum.projections[0]; // ℕ₀ ⊗ B -> B
  auto a1_b = tensor_product(a1.monoid(), B, opt);
  auto a_b1 = tensor_product(A, b1.monoid(), opt);
  auto ab = tensor_product(A, B, opt);
  // α on decomposables: (a ⊗ x) ⊗ b ↦ a ⊗ (x ⊗ b).
  BilinearTable t(a1.monoid().size(), std::vector<Element>(B.size()));
  for (Element u = 0; u < a1.monoid().size(); ++u)
    for (Element b = 0; b < B.size(); ++b) t[u][b] = a_b1.tensor(rho(u), b1.represent(b, 0));
  auto alpha = universal_factorization(a1_b, a_b1.monoid, t);
  auto lhs = induced_map(rho, identity_hom(B), a1_b, ab);
  auto rhs = compose(induced_map(identity_hom(A), lambda, a_b1, ab), alpha);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Inner hom adjunction

struct AdjunctionReport {
  std::size_t lhs_count = 0;  // |Hom(P ⊗ M, N)|
  std::size_t rhs_count = 0;  // |Hom(P, Hom(M, N))|
  bool phi_well_defined = true;
  bool round_trips = true;  // ψ∘φ = id and φ∘ψ = id
  bool phi_additive = true;

  bool ok() const {
    return lhs_count == rhs_count && phi_well_defined && round_trips && phi_additive;
  }
};

/// Hom(P ⊗ M, N) ≅ Hom(P, Hom(M, N)) via φ(f)(p)(m) = f(p ⊗ m) and
/// ψ(k)(p ⊗ m) = k(p)(m), checked by enumeration.
inline AdjunctionReport hom_adjunction_check(FiniteCommMonoid const& P, FiniteCommMonoid const& M,
                                             FiniteCommMonoid const& N,
                                             std::size_t budget = Budget::kDefault,
                                             TensorOptions const& opt = {}) {
  Budget b(budget);
  auto const T = tensor_product(P, M, opt);
  auto const H = hom_monoid(M, N, b);
  auto const lhs = enumerate_homs(T.monoid, N, b);
  auto const rhs = enumerate_homs(P, H.monoid, b);
  AdjunctionReport r;
  r.lhs_count = lhs.size();
  r.rhs_count = rhs.size();

  auto phi = [&](MonoidHom const& f) -> std::optional<MonoidHom> {
    std::vector<Element> img(P.size());
    for (Element p = 0; p < P.size(); ++p) {
      std::vector<Element> fm(M.size());
      for (Element m = 0; m < M.size(); ++m) fm[m] = f(T.tensor(p, m));
      auto idx = H.index_of(fm);
      if (!idx) return std::nullopt;
      img[p] = *idx;
    }
    try {
      return hom_check(P, H.monoid, std::move(img));
    } catch (Error const&) {
      return std::nullopt;
    }
  };
  auto psi = [&](MonoidHom const& k) {
    BilinearTable t(P.size(), std::vector<Element>(M.size()));
    for (Element p = 0; p < P.size(); ++p)
      for (Element m = 0; m < M.size(); ++m) t[p][m] = H.homs[k(p)](m);
    return universal_factorization(T, N, t);
  };

  std::vector<MonoidHom> phis;
  for (auto const& f : lhs) {
    auto pf = phi(f);
    if (!pf) {
      r.phi_well_defined = false;
      return r;
    }
    if (!(psi(*pf) == f)) r.round_trips = false;
    phis.push_back(std::move(*pf));
  }
  for (auto const& k : rhs) {
    auto pk = phi(psi(k));
    if (!pk || !(*pk == k)) r.round_trips = false;
  }
  for (std::size_t i = 0; i < lhs.size() && r.phi_additive; ++i)
    for (std::size_t j = i; j < lhs.size() && r.phi_additive; ++j)
      r.phi_additive = phi(pointwise_sum(lhs[i], lhs[j])) == pointwise_sum(phis[i], phis[j]);
  return r;
}

}  // namespace semimod
