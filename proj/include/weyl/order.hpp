#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weyl/groupoid.hpp"
#include "weyl/simplicial.hpp"

namespace weyl {

struct not_comparable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The weak (Duflo) order on Hom(-> a):  u <=_R uv iff l(u) + l(v) = l(uv).
// Covers are u < u sigma_i with increasing length; the order relation is the
// reflexive-transitive closure, and construction verifies that this closure
// agrees with the length-additivity definition on every pair.
struct WeakOrder {
  int target = 0;
  std::vector<std::vector<int>> covers_up;  // per element, elements covering it
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<Int>> mobius_;

  bool leq(int u, int v) const { return leq_[u][v] != 0; }
  Int mobius(int u, int v) const { return mobius_[u][v]; }
  int size() const { return static_cast<int>(leq_.size()); }
};

inline WeakOrder build_weak_order(const Groupoid& G, int a) {
  const HomSet& hs = G.hom[a];
  const int N = hs.size();
  WeakOrder P;
  P.target = a;
  P.covers_up.assign(N, {});

  for (int u = 0; u < N; ++u)
    for (int i = 0; i < G.scheme.rank(); ++i) {
      if (!ascends_right(hs.elems[u], i)) continue;
      const Morphism w = right_mul(G.scheme, hs.elems[u], i);
      const int v = hs.find(w);
      if (v < 0) throw std::logic_error("build_weak_order: cover left the set");
      auto& ups = P.covers_up[u];
      if (std::find(ups.begin(), ups.end(), v) == ups.end()) ups.push_back(v);
    }
  for (auto& ups : P.covers_up) std::sort(ups.begin(), ups.end());

  // reachability, filled top-down by length
  P.leq_.assign(N, std::vector<char>(N, 0));
  std::vector<int> by_len_desc(N);
  for (int k = 0; k < N; ++k) by_len_desc[k] = N - 1 - k;
  for (int u : by_len_desc) {
    P.leq_[u][u] = 1;
    for (int v : P.covers_up[u])
      for (int t = 0; t < N; ++t)
        if (P.leq_[v][t]) P.leq_[u][t] = 1;
  }

  // the cover digraph must reproduce the length-additivity definition
  std::vector<Mat> inv(N);
  for (int u = 0; u < N; ++u) inv[u] = inverse_unimodular(hs.elems[u].act);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      const Mat q = inv[u] * hs.elems[v].act;  // u^{-1} v
      const bool defn = hs.elems[u].length +
                            length_of(G.roots, hs.elems[v].source, q) ==
                        hs.elems[v].length;
      if (defn != (P.leq_[u][v] != 0))
        throw std::logic_error(
            "build_weak_order: covers disagree with the length definition");
    }

  P.mobius_.assign(N, std::vector<Int>(N, 0));
  for (int u = 0; u < N; ++u) {
    P.mobius_[u][u] = 1;
    for (int v = 0; v < N; ++v) {
      if (u == v || !P.leq(u, v)) continue;
      Int sum = 0;
      for (int z = 0; z < N; ++z)
        if (P.leq(u, z) && P.leq(z, v) && z != v) sum += P.mobius_[u][z];
      P.mobius_[u][v] = -sum;
    }
  }
  return P;
}

// Everything derived from one validated scheme with a finite root system.
struct System {
  Groupoid g;
  std::vector<WeakOrder> order;

  static System build(CartanScheme s, RootSystem R) {
    System sys{Groupoid::build(std::move(s), std::move(R)), {}};
    for (int a = 0; a < sys.g.scheme.num_objects(); ++a)
      sys.order.push_back(build_weak_order(sys.g, a));
    return sys;
  }

  const CartanScheme& scheme() const { return g.scheme; }
  const RootSystem& roots() const { return g.roots; }
  const HomSet& hom(int a) const { return g.hom[a]; }
  const WeakOrder& poset(int a) const { return order[a]; }
};

// u^{-1} v as a morphism (target = source of u).
inline Morphism quotient(const System& S, int a, int u, int v) {
  const HomSet& hs = S.hom(a);
  return compose(S.roots(), inverse(hs.elems[u]), hs.elems[v]);
}

struct Descents {
  JMask left;                  // I_L(w)
  std::vector<int> descents;   // D_L(w) as poset indices
  std::vector<int> bar;        // bar D_L(w): all w_J below w, poset indices
};

// Poset indices of w_J for every subset J.
inline std::vector<int> longest_word_indices(const System& S, int a) {
  const JMask full = full_mask(S.scheme().rank());
  std::vector<int> out(full + 1, -1);
  for (JMask J = 0; J <= full; ++J) {
    const Morphism wJ = longest_word(S.scheme(), a, J);
    out[J] = S.hom(a).find(wJ);
    if (out[J] < 0) throw std::logic_error("longest word missing from HomSet");
  }
  return out;
}

inline Descents descents(const System& S, int a, int w) {
  const HomSet& hs = S.hom(a);
  Descents d;
  d.left = left_descents(hs.elems[w]);
  const auto wj = longest_word_indices(S, a);
  const WeakOrder& P = S.poset(a);
  for (int i = 0; i < S.scheme().rank(); ++i) {
    const int si = wj[1u << i];
    const bool below = P.leq(si, w);
    if (below != in_mask(d.left, i))
      throw std::logic_error("descents: column test disagrees with <=_R");
    if (below) d.descents.push_back(si);
  }
  for (JMask J = 0; J < wj.size(); ++J)
    if (P.leq(wj[J], w)) d.bar.push_back(wj[J]);
  std::sort(d.bar.begin(), d.bar.end());
  d.bar.erase(std::unique(d.bar.begin(), d.bar.end()), d.bar.end());
  return d;
}

// Constructive meet, following the semilattice proof: strip the longest
// word over the common left descents and recurse at its source object.
inline Morphism meet(const System& S, const Morphism& u, const Morphism& v) {
  if (u.target != v.target)
    throw object_mismatch("meet: morphisms have different targets");
  const JMask J = left_descents(u) & left_descents(v);
  if (J == 0) return identity_morphism(S.scheme(), u.target);
  const Morphism wJ = longest_word(S.scheme(), u.target, J);
  const Morphism wJi = inverse(wJ);
  const Morphism u2 = compose(S.roots(), wJi, u);
  const Morphism v2 = compose(S.roots(), wJi, v);
  if (u2.length + wJ.length != u.length || v2.length + wJ.length != v.length)
    throw std::logic_error("meet: w_J is not below both arguments");
  return compose(S.roots(), wJ, meet(S, u2, v2));
}

// w^perp = w w_I, with w_I the longest word at the source of w.
inline Morphism ortho(const System& S, const Morphism& w) {
  const Morphism wI =
      longest_word(S.scheme(), w.source, full_mask(S.scheme().rank()));
  return compose(S.roots(), w, wI);
}

// Join through the antitone involution: u v v = (u^perp ^ v^perp)^perp.
inline Morphism join(const System& S, const Morphism& u, const Morphism& v) {
  return ortho(S, meet(S, ortho(S, u), ortho(S, v)));
}

// Brute-force meet: the unique maximal element of the intersection of the
// principal down-sets.  Raises if maximality is not unique.
inline int meet_brute(const WeakOrder& P, int u, int v) {
  std::vector<int> lower;
  for (int x = 0; x < P.size(); ++x)
    if (P.leq(x, u) && P.leq(x, v)) lower.push_back(x);
  std::vector<int> maximal;
  for (int x : lower) {
    bool top = true;
    for (int y : lower)
      if (y != x && P.leq(x, y)) top = false;
    if (top) maximal.push_back(x);
  }
  if (maximal.size() != 1)
    throw std::logic_error("meet_brute: maximal lower bound is not unique");
  return maximal[0];
}

inline int join_brute(const WeakOrder& P, int u, int v) {
  std::vector<int> upper;
  for (int x = 0; x < P.size(); ++x)
    if (P.leq(u, x) && P.leq(v, x)) upper.push_back(x);
  std::vector<int> minimal;
  for (int x : upper) {
    bool bot = true;
    for (int y : upper)
      if (y != x && P.leq(y, x)) bot = false;
    if (bot) minimal.push_back(x);
  }
  if (minimal.size() != 1)
    throw std::logic_error("join_brute: minimal upper bound is not unique");
  return minimal[0];
}

// Closed or open interval as sorted poset indices.
inline std::vector<int> interval(const WeakOrder& P, int u, int v, bool open) {
  if (!P.leq(u, v))
    throw not_comparable("interval: endpoints are not comparable");
  std::vector<int> out;
  for (int x = 0; x < P.size(); ++x) {
    if (!P.leq(u, x) || !P.leq(x, v)) continue;
    if (open && (x == u || x == v)) continue;
    out.push_back(x);
  }
  return out;
}

// Order complex of the induced subposet: faces are the chains.  Returns
// nothing when more than max_chains chains exist.
inline std::optional<SimplicialComplex> order_complex(
    const WeakOrder& P, const std::vector<int>& elems, size_t max_chains) {
  std::vector<int> verts = elems;
  std::sort(verts.begin(), verts.end());
  const int m = static_cast<int>(verts.size());
  std::vector<std::vector<int>> above(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && P.leq(verts[x], verts[y])) above[x].push_back(y);

  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  bool overflow = false;
  auto dfs = [&](auto&& self, int last) -> void {
    if (overflow) return;
    chains.push_back(cur);
    if (chains.size() > max_chains) {
      overflow = true;
      return;
    }
    for (int y : above[last]) {
      cur.push_back(y);
      self(self, y);
      cur.pop_back();
    }
  };
  for (int x = 0; x < m && !overflow; ++x) {
    cur = {x};
    dfs(dfs, x);
  }
  if (overflow) return std::nullopt;

  SimplicialComplex sc;
  sc.nverts = m;
  for (auto& c : chains) {
    std::sort(c.begin(), c.end());
    const size_t d = c.size() - 1;
    if (sc.faces.size() <= d) sc.faces.resize(d + 1);
    sc.faces[d].push_back(std::move(c));
  }
  for (auto& level : sc.faces) std::sort(level.begin(), level.end());
  return sc;
}

// [u,v] -> [id, u^{-1} v] elementwise (Duflo order translation): checks the
// bijection and that order is preserved both ways.
inline bool verify_interval_translation(const System& S, int a, int u, int v) {
  const WeakOrder& P = S.poset(a);
  if (!P.leq(u, v)) throw not_comparable("verify_interval_translation");
  const HomSet& hs = S.hom(a);
  const int b = hs.elems[u].source;
  const HomSet& hb = S.hom(b);
  const WeakOrder& Pb = S.poset(b);
  const Morphism x = quotient(S, a, u, v);
  const int xk = hb.find(x);
  if (xk < 0) return false;

  const std::vector<int> src = interval(P, u, v, false);
  std::vector<int> mapped;
  const Mat ui = inverse_unimodular(hs.elems[u].act);
  for (int w : src) {
    Morphism q{hs.elems[w].source, b, ui * hs.elems[w].act, 0};
    q.length = length_of(S.roots(), q.source, q.act);
    const int k = hb.find(q);
    if (k < 0) return false;
    mapped.push_back(k);
  }
  std::vector<int> dst = interval(Pb, hb.bottom, xk, false);
  std::vector<int> sorted_mapped = mapped;
  std::sort(sorted_mapped.begin(), sorted_mapped.end());
  if (sorted_mapped != dst) return false;
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < src.size(); ++j)
      if (P.leq(src[i], src[j]) != Pb.leq(mapped[i], mapped[j])) return false;
  return true;
}

enum class IntervalKind { Contractible, Sphere };

struct IntervalClass {
  IntervalKind kind = IntervalKind::Contractible;
  int sphere_dim = -1;
  Int chi_tilde = 0;     // reduced Euler characteristic of the open interval
  Int chi_expected = 0;  // (-1)^d for a d-sphere, 0 otherwise
  bool chi_consistent = false;
  bool homology_checked = false;
  std::vector<Int> betti;  // reduced GF(2) Betti numbers when checked
  bool homology_consistent = true;
  int open_size = 0;
};

constexpr size_t kDefaultChainCutoff = 5000;

// Topology of the open interval (u,v):  with J = I_L(u^{-1}v) the interval
// is a (|J|-2)-sphere when u^{-1}v = w_J and contractible otherwise.  The
// verdict is cross-checked against the reduced Euler characteristic (via the
// Moebius function) and, below the chain cutoff, against GF(2) homology of
// the order complex.
inline IntervalClass classify_interval(const System& S, int a, int u, int v,
                                       size_t chain_cutoff = kDefaultChainCutoff) {
  const WeakOrder& P = S.poset(a);
  if (!P.leq(u, v)) throw not_comparable("classify_interval");
  const HomSet& hs = S.hom(a);
  const int gap = hs.elems[v].length - hs.elems[u].length;
  if (gap < 2)
    throw std::invalid_argument(
        "classify_interval: length gap below 2 is not classified");
  if (!verify_interval_translation(S, a, u, v))
    throw std::logic_error(
        "classify_interval: [u,v] does not translate to [id, u^{-1}v]");

  const Morphism x = quotient(S, a, u, v);
  const JMask J = left_descents(x);
  const Morphism wJ = longest_word(S.scheme(), x.target, J);

  IntervalClass out;
  if (x == wJ) {
    out.kind = IntervalKind::Sphere;
    out.sphere_dim = mask_size(J) - 2;
    out.chi_expected = (out.sphere_dim % 2 == 0) ? 1 : -1;
  } else {
    out.kind = IntervalKind::Contractible;
    out.chi_expected = 0;
  }

  out.chi_tilde = P.mobius(u, v);
  out.chi_consistent = out.chi_tilde == out.chi_expected;

  const std::vector<int> open = interval(P, u, v, true);
  out.open_size = static_cast<int>(open.size());
  if (auto sc = order_complex(P, open, chain_cutoff)) {
    out.homology_checked = true;
    if (sc->reduced_euler_characteristic() != out.chi_tilde)
      out.chi_consistent = false;  // two chi routes must agree as well
    out.betti = sc->betti_gf2(true);
    std::vector<Int> expected(out.betti.size(), 0);
    if (out.kind == IntervalKind::Sphere) {
      if (out.sphere_dim >= static_cast<int>(expected.size()))
        expected.resize(out.sphere_dim + 1, 0);
      expected[out.sphere_dim] = 1;
      if (out.betti.size() < expected.size()) out.betti.resize(expected.size(), 0);
    }
    out.homology_consistent = out.betti == expected;
  }
  return out;
}

struct Poincare {
  std::vector<Int> coefficients;
  bool unimodal = false;
  bool factor_complete = false;
  std::vector<int> exponents;  // factors 1 + t + ... + t^e, in division order
  std::vector<Int> remainder;  // unfactored quotient when incomplete
};

inline bool is_unimodal(const std::vector<Int>& c) {
  size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 == c.size();
}

namespace detail {
// Divides p by 1 + t + ... + t^e exactly; empty result if not divisible.
inline std::optional<std::vector<Int>> divide_q_integer(
    const std::vector<Int>& p, int e) {
  const int dq = static_cast<int>(p.size()) - 1 - e;
  if (dq < 0) return std::nullopt;
  std::vector<Int> q(dq + 1, 0);
  for (int k = 0; k < static_cast<int>(p.size()); ++k) {
    Int acc = 0;
    for (int t = std::max(0, k - e); t <= std::min(dq, k); ++t)
      if (t != k) acc += q[t];
    if (k <= dq) {
      q[k] = p[k] - acc;
    } else if (p[k] != acc) {
      return std::nullopt;
    }
  }
  return q;
}
}  // namespace detail

// Greedy q-integer factorization: repeatedly divide by the largest feasible
// 1 + t + ... + t^e.  Reports cleanly when no factorization exists.
inline Poincare poincare_polynomial(const HomSet& hs) {
  Poincare out;
  for (int c : hs.level_sizes) out.coefficients.push_back(c);
  out.unimodal = is_unimodal(out.coefficients);

  std::vector<Int> p = out.coefficients;
  while (p.size() > 1) {
    bool found = false;
    for (int e = static_cast<int>(p.size()) - 1; e >= 1; --e) {
      if (auto q = detail::divide_q_integer(p, e)) {
        out.exponents.push_back(e);
        p = std::move(*q);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  out.factor_complete = p.size() == 1 && p[0] == 1;
  if (!out.factor_complete) out.remainder = p;
  return out;
}

}  // namespace weyl
