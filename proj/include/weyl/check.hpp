#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "weyl/complex.hpp"
#include "weyl/order.hpp"
#include "weyl/roots.hpp"
#include "weyl/scheme_io.hpp"

namespace weyl {

struct CheckResult {
  std::string name;
  std::string scope;  // object name or "global"
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace checks {

class Acc {
 public:
  explicit Acc(std::vector<CheckResult>& out) : out_(out) {}

  void add(const std::string& name, const std::string& scope, bool pass,
           const std::string& detail = "") {
    out_.push_back({name, scope, pass, pass ? detail : fail_note(detail)});
  }

 private:
  static std::string fail_note(const std::string& d) {
    return d.empty() ? "failed" : d;
  }
  std::vector<CheckResult>& out_;
};

inline void global_checks(const System& S, Acc& acc) {
  acc.add("scheme-axioms", "global", validate_scheme(S.scheme().to_raw()).ok());

  const AxiomReport rep = check_axioms(S.scheme(), S.roots());
  acc.add("root-axioms", "global", rep.ok(), rep.to_string());

  Int cap = default_root_cap(S.scheme());
  for (int a = 0; a < S.scheme().num_objects(); ++a)
    for (const Vec& v : S.roots().positive[a]) cap = std::max(cap, height(v));
  const RootGenResult again = generate_roots(S.scheme(), cap);
  acc.add("roots-idempotent", "global",
          again.finite() && again.roots->all == S.roots().all &&
              again.roots->positive == S.roots().positive);

  const auto comp = S.scheme().object_components();
  bool counts_ok = true;
  for (int a = 0; a < S.scheme().num_objects(); ++a)
    for (int b = 0; b < S.scheme().num_objects(); ++b)
      if (comp[a] == comp[b] &&
          S.roots().count_positive(a) != S.roots().count_positive(b))
        counts_ok = false;
  acc.add("roots-constant-on-components", "global", counts_ok);
}

inline void groupoid_checks(const System& S, int a, Acc& acc) {
  const CartanScheme& sch = S.scheme();
  const RootSystem& R = S.roots();
  const HomSet& hs = S.hom(a);
  const std::string scope = sch.object_name(a);
  const JMask full = full_mask(sch.rank());

  // closure under right and left multiplication, exact length law
  bool closure_ok = true, length_ok = true;
  for (int w = 0; w < hs.size(); ++w)
    for (int i = 0; i < sch.rank(); ++i) {
      const Morphism r = right_mul(sch, hs.elems[w], i);
      if (hs.find(r) < 0) closure_ok = false;
      const Morphism l =
          compose(R, simple_morphism(sch, R, i, a), hs.elems[w]);
      if (S.hom(sch.reflect(i, a)).find(l) < 0) closure_ok = false;
      const int expect =
          hs.elems[w].length + (ascends_right(hs.elems[w], i) ? 1 : -1);
      if (length_of(R, r.source, r.act) != expect) length_ok = false;
    }
  acc.add("hom-closure", scope, closure_ok);
  acc.add("length-law", scope, length_ok);

  bool morph_ok = true;
  for (int w = 0; w < hs.size(); ++w) {
    const Morphism& m = hs.elems[w];
    const Int d = det(m.act);
    if (d != 1 && d != -1) morph_ok = false;
    if (m.length != length_of(R, m.source, m.act)) morph_ok = false;
    std::set<Vec> image;
    for (const Vec& v : R.all[m.source]) image.insert(m.act * v);
    if (image != std::set<Vec>(R.all[a].begin(), R.all[a].end()))
      morph_ok = false;
  }
  acc.add("morphism-invariants", scope, morph_ok);

  // level symmetry through w -> w w_I
  bool sym_ok = true;
  std::set<std::pair<int, std::vector<Int>>> seen;
  for (int w = 0; w < hs.size(); ++w) {
    const Morphism o = ortho(S, hs.elems[w]);
    const int k = hs.find(o);
    if (k < 0 || hs.elems[k].length != hs.max_length - hs.elems[w].length)
      sym_ok = false;
    else
      seen.insert(o.key());
  }
  sym_ok = sym_ok && static_cast<int>(seen.size()) == hs.size();
  for (int k = 0; k <= hs.max_length; ++k)
    if (hs.level_sizes[k] != hs.level_sizes[hs.max_length - k]) sym_ok = false;
  acc.add("level-symmetry", scope, sym_ok);

  // J(w) = J(w^{-1}) and J(uv) = J(u) u J(v) when lengths add
  bool content_ok = true;
  for (int w = 0; w < hs.size(); ++w)
    if (content(sch, R, inverse(hs.elems[w])) != hs.contents[w])
      content_ok = false;
  for (int u = 0; u < hs.size(); ++u) {
    const HomSet& hb = S.hom(hs.elems[u].source);
    for (int v = 0; v < hb.size(); ++v) {
      const Morphism uv = compose(R, hs.elems[u], hb.elems[v]);
      if (uv.length == hs.elems[u].length + hb.elems[v].length &&
          content(sch, R, uv) != (hs.contents[u] | hb.contents[v]))
        content_ok = false;
    }
  }
  acc.add("content-laws", scope, content_ok);

  // root characterization of J(w) <= J
  bool charac_ok = true;
  for (int w = 0; w < hs.size(); ++w)
    for (JMask J = 0; J <= full; ++J) {
      bool rhs = true;
      for (const Vec& alpha : R.positive[hs.elems[w].source]) {
        const Vec img = hs.elems[w].act * alpha;
        if (all_nonneg(img)) continue;
        for (size_t t = 0; t < img.size(); ++t)
          if (img[t] != 0 && !in_mask(J, static_cast<int>(t))) rhs = false;
      }
      if (((hs.contents[w] & ~J) == 0) != rhs) charac_ok = false;
    }
  acc.add("content-root-characterization", scope, charac_ok);

  bool words_ok = true;
  for (int w = 0; w < hs.size(); ++w) {
    const auto words = reduced_words(sch, R, hs.elems[w]);
    if (words.empty()) words_ok = false;
    for (const auto& word : words) {
      if (static_cast<int>(word.size()) != hs.elems[w].length)
        words_ok = false;
      if (!(from_word(sch, R, word, hs.elems[w].source) == hs.elems[w]))
        words_ok = false;
      if (indices_to_mask(word) != hs.contents[w]) words_ok = false;
    }
  }
  acc.add("reduced-words", scope, words_ok);

  // products over J that fix Z^J pointwise are identities
  bool wellness_ok = true;
  for (JMask J = 0; J <= full; ++J)
    for (int w = 0; w < hs.size(); ++w) {
      if ((hs.contents[w] & ~J) != 0) continue;
      bool fixes = true;
      for (int j : mask_to_indices(J)) {
        Vec e(static_cast<size_t>(sch.rank()), 0);
        e[j] = 1;
        if (hs.elems[w].act.col(j) != e) fixes = false;
      }
      if (fixes && w != hs.bottom) wellness_ok = false;
    }
  acc.add("wellness", scope, wellness_ok);

  // longest words: content, length by root count, unique extremes
  bool longest_ok = true;
  for (JMask J = 0; J <= full; ++J) {
    const Morphism wJ = longest_word(sch, a, J);
    if (content(sch, R, wJ) != J) longest_ok = false;
    int expect = 0;
    for (const Vec& beta : R.positive[a]) {
      bool inside = true;
      for (size_t t = 0; t < beta.size(); ++t)
        if (beta[t] != 0 && !in_mask(J, static_cast<int>(t))) inside = false;
      if (inside) ++expect;
    }
    if (wJ.length != expect) longest_ok = false;
    const int wJi = hs.find(wJ);
    const WeakOrder& P = S.poset(a);
    for (int v = 0; v < hs.size(); ++v)
      if ((hs.contents[v] & ~J) == 0 && !P.leq(v, wJi)) longest_ok = false;
  }
  acc.add("longest-words", scope, longest_ok);

  // parabolic decomposition: shape, additivity and uniqueness by exhaustion
  bool decomp_ok = true;
  for (int w = 0; w < hs.size(); ++w)
    for (JMask J = 0; J <= full; ++J) {
      const auto [u, v] = parabolic_decompose(sch, R, hs.elems[w], J);
      for (int j : mask_to_indices(J))
        if (!ascends_right(u, j)) decomp_ok = false;
      if ((content(sch, R, v) & ~J) != 0) decomp_ok = false;
      int count = 0;
      for (int x = 0; x < hs.size(); ++x) {
        bool in_WJ_up = true;
        for (int j : mask_to_indices(J))
          if (!ascends_right(hs.elems[x], j)) in_WJ_up = false;
        if (!in_WJ_up) continue;
        const Morphism q = compose(
            R, inverse(hs.elems[x]), hs.elems[w]);
        if ((content(sch, R, q) & ~J) == 0) ++count;
      }
      if (count != 1) decomp_ok = false;
    }
  acc.add("parabolic-decomposition", scope, decomp_ok);

  // tau, tau_I and t^a
  bool tau_ok = true;
  const int ta = tau(sch, a);
  if (tau(sch, ta) != a) tau_ok = false;
  const auto perm = tau_I(sch, a);
  for (int j = 0; j < sch.rank(); ++j)
    if (perm[static_cast<size_t>(perm[j])] != j) tau_ok = false;
  const auto comp = sch.object_components();
  for (int b = 0; b < sch.num_objects(); ++b)
    if (comp[b] == comp[a] && tau_I(sch, b) != perm) tau_ok = false;
  for (int i = 0; i < sch.rank(); ++i) {
    // w_I sigma_i^a w_I = sigma_{tau_I(i)}^{tau(a)}
    const Morphism lhs = compose(
        R,
        inverse(longest_word(sch, sch.reflect(i, a), full)),
        compose(R, simple_morphism(sch, R, i, a),
                longest_word(sch, a, full)));
    const Morphism rhs = simple_morphism(sch, R, perm[i], ta);
    if (!(lhs == rhs)) tau_ok = false;
  }
  acc.add("tau-involution", scope, tau_ok);

  bool tmap_ok = true;
  const HomSet& ht = S.hom(ta);
  const WeakOrder& Pt = S.poset(ta);
  const WeakOrder& P = S.poset(a);
  std::vector<int> image(hs.size(), -1);
  for (int w = 0; w < hs.size(); ++w) {
    const Morphism t = t_map(sch, R, a, hs.elems[w]);
    image[w] = ht.find(t);
    if (image[w] < 0 || ht.elems[image[w]].length != hs.elems[w].length)
      tmap_ok = false;
  }
  if (std::set<int>(image.begin(), image.end()).size() !=
      static_cast<size_t>(hs.size()))
    tmap_ok = false;
  if (tmap_ok)
    for (int u = 0; u < hs.size(); ++u)
      for (int v = 0; v < hs.size(); ++v)
        if (P.leq(u, v) != Pt.leq(image[u], image[v])) tmap_ok = false;
  acc.add("t-map-isomorphism", scope, tmap_ok);
}

inline void restriction_checks(const System& S, Acc& acc) {
  const CartanScheme& sch = S.scheme();
  const RootSystem& R = S.roots();
  const JMask full = full_mask(sch.rank());

  bool ok = true;
  std::string note;
  for (JMask J = 1; J <= full && ok; ++J) {
    const std::vector<int> idx = mask_to_indices(J);
    const CartanScheme sub = sch.restrict(idx);
    const RootGenResult rg = generate_roots(sub, default_root_cap(sch));
    if (!rg.finite()) {
      ok = false;
      note = "restricted root system not finite";
      break;
    }
    const Groupoid part = Groupoid::build(sub, *rg.roots);
    for (int a = 0; a < sch.num_objects() && ok; ++a) {
      const HomSet& hsub = part.hom[a];
      const HomSet& hfull = S.hom(a);
      std::set<int> image;
      for (int w = 0; w < hsub.size() && ok; ++w) {
        std::vector<int> word;
        for (int t : hsub.words[w]) word.push_back(idx[t]);
        const Morphism full_w = from_word(sch, R, word, hsub.elems[w].source);
        const int k = hfull.find(full_w);
        if (k < 0 || hfull.elems[k].length != hsub.elems[w].length ||
            hfull.elems[k].source != hsub.elems[w].source ||
            (hfull.contents[k] & ~J) != 0) {
          ok = false;
          note = "functor image mismatch";
          break;
        }
        if (length_J(sch, R, hfull.elems[k], J) != hfull.elems[k].length) {
          ok = false;
          note = "l_J != l";
          break;
        }
        image.insert(k);
      }
      int expected = 0;
      for (int k = 0; k < hfull.size(); ++k)
        if ((hfull.contents[k] & ~J) == 0) ++expected;
      if (static_cast<int>(image.size()) != expected) {
        ok = false;
        note = "functor image is not all of W_J";
      }
    }
  }
  acc.add("restriction-functor", "global", ok, note);
}

inline void order_checks(const System& S, int a, Acc& acc,
                         size_t chain_cutoff) {
  const CartanScheme& sch = S.scheme();
  const RootSystem& R = S.roots();
  const HomSet& hs = S.hom(a);
  const WeakOrder& P = S.poset(a);
  const std::string scope = sch.object_name(a);
  const JMask full = full_mask(sch.rank());
  const int N = hs.size();

  // gradedness: unique source and sink in the cover digraph, every maximal
  // chain runs from bottom to top with |R^a_+| + 1 elements
  {
    std::vector<int> down(N, 0);
    int sinks = 0;
    for (int u = 0; u < N; ++u) {
      if (P.covers_up[u].empty()) ++sinks;
      for (int v : P.covers_up[u]) ++down[v];
    }
    const int sources =
        static_cast<int>(std::count(down.begin(), down.end(), 0));
    bool graded = sinks == 1 && sources == 1 &&
                  P.covers_up[hs.top].empty() && down[hs.bottom] == 0;
    // chain lengths are forced by the grading l(cover) = l + 1
    for (int u = 0; u < N && graded; ++u)
      for (int v : P.covers_up[u])
        if (hs.elems[v].length != hs.elems[u].length + 1) graded = false;
    acc.add("graded-maximal-chains", scope, graded);
  }

  const auto wj = longest_word_indices(S, a);

  bool descent_ok = true;
  for (int w = 0; w < N; ++w) {
    const Descents d = descents(S, a, w);
    std::set<int> expect;
    for (JMask J = 0; J <= full; ++J)
      if ((J & ~d.left) == 0) expect.insert(wj[J]);
    if (std::set<int>(d.bar.begin(), d.bar.end()) != expect) descent_ok = false;
    if (!P.leq(wj[d.left], w)) descent_ok = false;
    for (JMask J = 0; J <= d.left; ++J) {
      if ((J & ~d.left) != 0) continue;
      for (JMask K = 0; K <= d.left; ++K) {
        if ((K & ~d.left) != 0) continue;
        if (P.leq(wj[J], wj[K]) != ((J & ~K) == 0)) descent_ok = false;
      }
    }
  }
  acc.add("descent-boolean", scope, descent_ok);

  bool meet_ok = true, join_ok = true, ju_ok = true;
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      const Morphism mc = meet(S, hs.elems[u], hs.elems[v]);
      const int mb = meet_brute(P, u, v);
      if (hs.find(mc) != mb) meet_ok = false;
      const Morphism jc = join(S, hs.elems[u], hs.elems[v]);
      const int jb = join_brute(P, u, v);
      if (hs.find(jc) != jb) join_ok = false;
      const JMask lhs = hs.contents[u] | hs.contents[v];
      const JMask rhs = hs.contents[hs.find(mc)] |
                        content(sch, R, quotient(S, a, u, v));
      if (lhs != rhs) ju_ok = false;
    }
  acc.add("meet-vs-brute", scope, meet_ok);
  acc.add("join-vs-brute", scope, join_ok);
  acc.add("Ju-identity", scope, ju_ok);

  // lattice laws; associativity over seeded random triples and subsets
  bool lattice_ok = true;
  for (int u = 0; u < N; ++u) {
    if (meet_brute(P, u, u) != u || join_brute(P, u, u) != u)
      lattice_ok = false;
    for (int v = 0; v < N; ++v) {
      if (meet_brute(P, u, v) != meet_brute(P, v, u)) lattice_ok = false;
      if (join_brute(P, u, v) != join_brute(P, v, u)) lattice_ok = false;
      if (meet_brute(P, u, join_brute(P, u, v)) != u) lattice_ok = false;
      if (join_brute(P, u, meet_brute(P, u, v)) != u) lattice_ok = false;
    }
  }
  std::mt19937 rng(0x5eed0 + static_cast<unsigned>(a));
  for (int trial = 0; trial < 200; ++trial) {
    const int x = static_cast<int>(rng() % N);
    const int y = static_cast<int>(rng() % N);
    const int z = static_cast<int>(rng() % N);
    if (meet_brute(P, meet_brute(P, x, y), z) !=
        meet_brute(P, x, meet_brute(P, y, z)))
      lattice_ok = false;
    if (join_brute(P, join_brute(P, x, y), z) !=
        join_brute(P, x, join_brute(P, y, z)))
      lattice_ok = false;
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> subset;
    const int sz = 3 + static_cast<int>(rng() % 4);
    for (int t = 0; t < sz; ++t) subset.push_back(static_cast<int>(rng() % N));
    int fold = subset[0];
    for (size_t t = 1; t < subset.size(); ++t)
      fold = meet_brute(P, fold, subset[t]);
    std::vector<int> shuffled = subset;
    for (size_t t = shuffled.size(); t > 1; --t)
      std::swap(shuffled[t - 1], shuffled[rng() % t]);
    int fold2 = shuffled[0];
    for (size_t t = 1; t < shuffled.size(); ++t)
      fold2 = meet_brute(P, fold2, shuffled[t]);
    if (fold != fold2) lattice_ok = false;
  }
  acc.add("lattice-laws", scope, lattice_ok);

  // ortho-complement: (O1)-(O4) plus the complement lemma
  bool ortho_ok = true;
  for (int w = 0; w < N; ++w) {
    const Morphism o = ortho(S, hs.elems[w]);
    const int oi = hs.find(o);
    if (hs.elems[w].length + o.length != hs.max_length) ortho_ok = false;
    const JMask Iw = left_descents(hs.elems[w]);
    const JMask Io = left_descents(o);
    if ((Iw & Io) != 0) ortho_ok = false;
    if ((Iw | Io) != full) ortho_ok = false;
    if (meet_brute(P, w, oi) != hs.bottom) ortho_ok = false;
    if (join_brute(P, w, oi) != hs.top) ortho_ok = false;
    if (hs.find(ortho(S, o)) != w) ortho_ok = false;
  }
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v)
      if (P.leq(u, v) &&
          !P.leq(hs.find(ortho(S, hs.elems[v])),
                 hs.find(ortho(S, hs.elems[u]))))
        ortho_ok = false;
  acc.add("ortho-complement", scope, ortho_ok);

  bool trans_ok = true;
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v)
      if (P.leq(u, v) && !verify_interval_translation(S, a, u, v))
        trans_ok = false;
  acc.add("interval-translation", scope, trans_ok);

  bool topo_ok = true;
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      if (!P.leq(u, v) || hs.elems[v].length - hs.elems[u].length < 2)
        continue;
      const IntervalClass c = classify_interval(S, a, u, v, chain_cutoff);
      if (!c.chi_consistent || !c.homology_consistent) topo_ok = false;
    }
  acc.add("interval-topology", scope, topo_ok);

  const Poincare pp = poincare_polynomial(hs);
  bool poin_ok = true;
  for (size_t k = 0; k < pp.coefficients.size(); ++k)
    if (pp.coefficients[k] !=
        pp.coefficients[pp.coefficients.size() - 1 - k])
      poin_ok = false;
  if (pp.factor_complete) {
    std::vector<Int> prod{1};
    for (int e : pp.exponents) {
      std::vector<Int> next(prod.size() + e, 0);
      for (size_t t = 0; t < prod.size(); ++t)
        for (int s = 0; s <= e; ++s) next[t + s] += prod[t];
      prod = std::move(next);
    }
    if (prod != pp.coefficients) poin_ok = false;
  }
  acc.add("poincare-symmetry", scope, poin_ok);
}

inline void complex_checks(const System& S, int a, Acc& acc) {
  const CartanScheme& sch = S.scheme();
  const int n = sch.rank();
  if (n < 2) return;
  const HomSet& hs = S.hom(a);
  const std::string scope = sch.object_name(a);
  const JMask full = full_mask(n);

  const CoxeterComplex C = coxeter_complex(S, a);
  const auto faces = geometric_faces(S, a, C.table);

  bool structure_ok = C.sc.pure() && C.sc.dim() == n - 1 &&
                      static_cast<int>(C.facets.size()) == hs.size();
  // the nonempty-intersection definition, cross-checked on small vertex sets
  {
    const int V = static_cast<int>(C.vertex_cosets.size());
    std::set<std::vector<int>> in_complex;
    for (const auto& level : C.sc.faces)
      for (const auto& f : level) in_complex.insert(f);
    auto nonempty = [&](const std::vector<int>& vs) {
      std::vector<uint64_t> common =
          C.table.members[C.vertex_cosets[vs[0]]];
      for (size_t t = 1; t < vs.size(); ++t)
        for (size_t wd = 0; wd < common.size(); ++wd)
          common[wd] &= C.table.members[C.vertex_cosets[vs[t]]][wd];
      return !bits::empty(common);
    };
    for (int x = 0; x < V; ++x)
      for (int y = x + 1; y < V; ++y) {
        const std::vector<int> f{x, y};
        if (nonempty(f) != in_complex.count(f)) structure_ok = false;
        if (n >= 3)
          for (int z = y + 1; z < V; ++z) {
            const std::vector<int> g{x, y, z};
            if (nonempty(g) != in_complex.count(g)) structure_ok = false;
          }
      }
  }
  acc.add("complex-structure", scope, structure_ok);

  bool sphere_ok = true;
  const Int chi_expected = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  if (C.sc.euler_characteristic() != chi_expected) sphere_ok = false;
  for (const auto& [ridge, deg] : C.sc.ridge_degrees()) {
    (void)ridge;
    if (deg != 2) sphere_ok = false;
  }
  if (!C.sc.facet_graph_connected()) sphere_ok = false;
  {
    std::vector<Int> expect(static_cast<size_t>(n), 0);
    expect.front() = 1;
    expect.back() += 1;  // S^{n-1} profile; n = 1 never reaches here
    if (C.sc.betti_gf2(false) != expect) sphere_ok = false;
  }
  acc.add("complex-sphere-profile", scope, sphere_ok);

  const IsoResult iso = verify_isomorphism(C.table, faces);
  acc.add("complex-isomorphism", scope, iso.ok, iso.counterexample);

  // closure stratification: conformally-below(F^w_K) = {(w, L) : L >= K}
  bool strat_ok = true;
  for (const auto& f : faces) {
    std::set<int> below;
    for (const auto& g : faces)
      if (conformal(g.signs, f.signs)) below.insert(g.coset);
    std::set<int> expect;
    for (JMask L = 0; L <= full; ++L)
      if ((f.J & ~L) == 0) expect.insert(C.table.coset_of[f.rep][L]);
    if (below != expect) strat_ok = false;
  }
  acc.add("closure-stratification", scope, strat_ok);

  // face counts and the dimension formula dim F^w_J = |I| - |J|
  bool dims_ok = true;
  {
    std::vector<Int> by_size(static_cast<size_t>(n) + 1, 0);
    for (const Coset& c : C.table.cosets) ++by_size[mask_size(c.J)];
    const auto fv = C.sc.f_vector();
    for (int k = 0; k < n; ++k)
      if (by_size[static_cast<size_t>(k)] != fv[static_cast<size_t>(n - 1 - k)])
        dims_ok = false;
    Int total = 0;
    for (Int b : by_size) total += b;
    if (total != static_cast<Int>(faces.size())) dims_ok = false;
    for (const auto& f : faces) {
      std::vector<Vec> zero_normals;
      for (size_t t = 0; t < f.signs.size(); ++t)
        if (f.signs[t] == '0')
          zero_normals.push_back(S.roots().positive[a][t]);
      const int zrank = zero_normals.empty() ? 0 : rank_of(zero_normals);
      if (zrank != mask_size(f.J)) dims_ok = false;
    }
  }
  acc.add("face-dimension-formula", scope, dims_ok);

  // shelling: length-lexicographic extension, plus random linear extensions
  bool shelling_ok = true;
  {
    const WeakOrder& P = S.poset(a);
    std::vector<int> facet_pos(hs.size());
    std::map<std::vector<int>, int> pos;
    for (size_t k = 0; k < C.sc.faces[C.sc.dim()].size(); ++k)
      pos[C.sc.faces[C.sc.dim()][k]] = static_cast<int>(k);
    auto order_to_positions = [&](const std::vector<int>& morphs) {
      std::vector<int> out;
      for (int w : morphs) out.push_back(pos.at(C.facets[w]));
      return out;
    };
    std::vector<int> lenlex(hs.size());
    for (int w = 0; w < hs.size(); ++w) lenlex[w] = w;  // canonical order
    if (!shelling_check(C.sc, order_to_positions(lenlex)).ok)
      shelling_ok = false;
    std::mt19937 rng(0xc0ffee + static_cast<unsigned>(a));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> indeg(hs.size(), 0);
      for (int u = 0; u < hs.size(); ++u)
        for (int v : P.covers_up[u]) ++indeg[v];
      std::vector<int> avail, extension;
      for (int u = 0; u < hs.size(); ++u)
        if (indeg[u] == 0) avail.push_back(u);
      while (!avail.empty()) {
        const size_t pick = rng() % avail.size();
        const int u = avail[pick];
        avail.erase(avail.begin() + static_cast<long>(pick));
        extension.push_back(u);
        for (int v : P.covers_up[u])
          if (--indeg[v] == 0) avail.push_back(v);
      }
      if (!shelling_check(C.sc, order_to_positions(extension)).ok)
        shelling_ok = false;
    }
  }
  acc.add("shelling-linear-extensions", scope, shelling_ok);

  const Arrangement A = arrangement(S, a, faces);
  acc.add("arrangement-simplicial", scope,
          static_cast<int>(A.normals.size()) == S.roots().count_positive(a) &&
              static_cast<int>(A.chambers.size()) == hs.size() &&
              A.simplicial);

  bool cosets_ok = true;
  for (size_t x = 0; x < C.vertex_cosets.size(); ++x)
    for (size_t y = 0; y < C.vertex_cosets.size(); ++y) {
      const Coset& c1 = C.table.cosets[C.vertex_cosets[x]];
      const Coset& c2 = C.table.cosets[C.vertex_cosets[y]];
      const auto cap = coset_intersection(S, C.table, c1, c2);
      std::vector<int> key{static_cast<int>(std::min(x, y)),
                           static_cast<int>(std::max(x, y))};
      const bool edge =
          x == y || C.face_coset.count(key) > 0;
      if (cap.has_value() != edge) cosets_ok = false;
    }
  acc.add("coset-intersection", scope, cosets_ok);
}

}  // namespace checks

// Every module invariant that admits a finite sweep, on one object or all.
inline std::vector<CheckResult> run_check_suite(
    const System& S, int object = -1,
    size_t chain_cutoff = kDefaultChainCutoff) {
  std::vector<CheckResult> out;
  checks::Acc acc(out);
  checks::global_checks(S, acc);
  checks::restriction_checks(S, acc);
  for (int a = 0; a < S.scheme().num_objects(); ++a) {
    if (object >= 0 && a != object) continue;
    checks::groupoid_checks(S, a, acc);
    checks::order_checks(S, a, acc, chain_cutoff);
    checks::complex_checks(S, a, acc);
  }
  return out;
}

}  // namespace weyl
