#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/ints.hpp"
#include "weyl/roots.hpp"

namespace weyl {

struct object_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A morphism of the Weyl groupoid: an integer matrix acting on Z^I together
// with its endpoints.  Two morphisms are equal iff source and action agree;
// words are not part of the identity.
struct Morphism {
  int source = 0;
  int target = 0;
  Mat act;
  int length = 0;

  std::pair<int, std::vector<Int>> key() const { return {source, act.a}; }

  friend bool operator==(const Morphism& x, const Morphism& y) {
    return x.source == y.source && x.target == y.target && x.act == y.act;
  }
};

// Root-inversion count: l(w) = |{alpha in R^src_+ : w(alpha) in -R^tgt_+}|.
inline int length_of(const RootSystem& R, int source, const Mat& act) {
  int len = 0;
  for (const Vec& v : R.positive[source])
    if (all_nonpos(act * v)) ++len;
  return len;
}

inline Morphism identity_morphism(const CartanScheme& s, int a) {
  return {a, a, Mat::identity(s.rank()), 0};
}

// sigma_i^a in Hom(a, rho_i(a)).
inline Morphism simple_morphism(const CartanScheme& s, const RootSystem& R,
                                int i, int a) {
  Morphism w{a, s.reflect(i, a), s.simple_reflection(i, a), 0};
  w.length = length_of(R, a, w.act);
  return w;
}

// l(w sigma_i) = l(w) + 1 iff w(alpha_i) is a positive root (column test).
inline bool ascends_right(const Morphism& w, int i) {
  return all_nonneg(w.act.col(i));
}

// w sigma_i = w composed with sigma_i^{rho_i(src w)}.
inline Morphism right_mul(const CartanScheme& s, const Morphism& w, int i) {
  const int c = s.reflect(i, w.source);
  return {c, w.target, w.act * s.simple_reflection(i, c),
          w.length + (ascends_right(w, i) ? 1 : -1)};
}

inline Morphism compose(const RootSystem& R, const Morphism& u,
                        const Morphism& v) {
  if (u.source != v.target)
    throw object_mismatch("compose: source of left factor (" +
                          std::to_string(u.source) +
                          ") != target of right factor (" +
                          std::to_string(v.target) + ")");
  Morphism out{v.source, u.target, u.act * v.act, 0};
  out.length = length_of(R, out.source, out.act);
  return out;
}

inline Morphism inverse(const Morphism& w) {
  return {w.target, w.source, inverse_unimodular(w.act), w.length};
}

// sigma_{i_1} ... sigma_{i_k}^source, composed right to left; the target is
// rho_{i_1} ... rho_{i_k}(source).  Indices are 0-based.
inline Morphism from_word(const CartanScheme& s, const RootSystem& R,
                          const std::vector<int>& word, int source) {
  for (int i : word)
    if (i < 0 || i >= s.rank())
      throw std::invalid_argument("from_word: index out of range");
  Morphism w = identity_morphism(s, source);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int cur = w.target;
    w.act = s.simple_reflection(*it, cur) * w.act;
    w.target = s.reflect(*it, cur);
  }
  w.length = length_of(R, w.source, w.act);
  return w;
}

// Left descent set I_L(w) = {i : sigma_i <=_R w}, via the sign of the
// columns of w^{-1}.
inline JMask left_descents(const Morphism& w) {
  const Mat inv = inverse_unimodular(w.act);
  JMask J = 0;
  for (int i = 0; i < w.act.n; ++i)
    if (all_nonpos(inv.col(i))) J |= (1u << i);
  return J;
}

// Peels the leading letter i off w:  w = sigma_i^{rho_i(tgt)} * result.
inline Morphism strip_left(const CartanScheme& s, const RootSystem& R,
                           const Morphism& w, int i) {
  const Morphism sig = simple_morphism(s, R, i, w.target);
  Morphism out = compose(R, sig, w);
  if (out.length != w.length - 1)
    throw std::invalid_argument("strip_left: index is not a left descent");
  return out;
}

// One reduced word, deterministic (smallest left descent first).
inline std::vector<int> canonical_reduced_word(const CartanScheme& s,
                                               const RootSystem& R,
                                               Morphism w) {
  std::vector<int> word;
  while (w.length > 0) {
    const JMask d = left_descents(w);
    const int i = mask_to_indices(d).at(0);
    word.push_back(i);
    w = strip_left(s, R, w, i);
  }
  return word;
}

// All reduced decompositions, by recursive descent on left descents.
inline std::vector<std::vector<int>> reduced_words(const CartanScheme& s,
                                                   const RootSystem& R,
                                                   const Morphism& w) {
  if (w.length == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i : mask_to_indices(left_descents(w))) {
    for (auto& rest : reduced_words(s, R, strip_left(s, R, w, i))) {
      std::vector<int> word{i};
      word.insert(word.end(), rest.begin(), rest.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

// J(w): the letter set of any reduced decomposition.
inline JMask content(const CartanScheme& s, const RootSystem& R, Morphism w) {
  return indices_to_mask(canonical_reduced_word(s, R, std::move(w)));
}

// The longest word w_J over J with target a, by greedy ascent from id^a.
inline Morphism longest_word(const CartanScheme& s, int a, JMask J) {
  Morphism w = identity_morphism(s, a);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : mask_to_indices(J))
      if (ascends_right(w, j)) {
        w = right_mul(s, w, j);
        grew = true;
        break;
      }
  }
  return w;
}

// All morphisms with target a, enumerated breadth-first by length.  The
// word recorded for each element is the reduced word along its discovery
// path, which makes the listing deterministic.
struct HomSet {
  int target = 0;
  std::vector<Morphism> elems;             // sorted by (length, source, act)
  std::vector<std::vector<int>> words;     // parallel to elems
  std::vector<JMask> contents;             // parallel to elems
  std::map<std::pair<int, std::vector<Int>>, int> index;
  std::vector<int> level_sizes;
  int max_length = 0;
  int bottom = 0;  // id^a
  int top = 0;     // w_I

  int find(const Morphism& w) const {
    auto it = index.find(w.key());
    return it == index.end() ? -1 : it->second;
  }

  int size() const { return static_cast<int>(elems.size()); }
};

inline HomSet enumerate_hom_to(const CartanScheme& s, const RootSystem& R,
                               int a) {
  HomSet hs;
  hs.target = a;

  std::vector<Morphism> elems{identity_morphism(s, a)};
  std::vector<std::vector<int>> words{{}};
  std::map<std::pair<int, std::vector<Int>>, int> index{{elems[0].key(), 0}};
  std::vector<int> frontier{0};
  int depth = 0;

  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [&](int x, int y) {
      return elems[x].key() < elems[y].key();
    });
    std::vector<int> next;
    for (int idx : frontier)
      for (int i = 0; i < s.rank(); ++i) {
        if (!ascends_right(elems[idx], i)) continue;
        Morphism w = right_mul(s, elems[idx], i);
        if (index.count(w.key())) continue;
        index[w.key()] = static_cast<int>(elems.size());
        std::vector<int> word = words[idx];
        word.push_back(i);
        elems.push_back(std::move(w));
        words.push_back(std::move(word));
        next.push_back(static_cast<int>(elems.size()) - 1);
      }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }

  if (depth != R.count_positive(a))
    throw std::logic_error("enumerate_hom_to: BFS depth != |R^a_+|");

  std::vector<int> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple(elems[x].length, elems[x].source, elems[x].act.a) <
           std::tuple(elems[y].length, elems[y].source, elems[y].act.a);
  });
  hs.level_sizes.assign(depth + 1, 0);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    const Morphism& w = elems[order[k]];
    if (w.length != length_of(R, w.source, w.act))
      throw std::logic_error("enumerate_hom_to: cached length is wrong");
    hs.level_sizes[w.length] += 1;
    hs.index[w.key()] = k;
    hs.contents.push_back(content(s, R, w));
    hs.elems.push_back(w);
    hs.words.push_back(words[order[k]]);
  }
  hs.max_length = depth;
  if (hs.level_sizes.front() != 1 || hs.level_sizes.back() != 1)
    throw std::logic_error("enumerate_hom_to: min or max level is not unique");
  hs.bottom = 0;
  hs.top = hs.size() - 1;
  return hs;
}

// l_J: minimal word length over the alphabet J, by breadth-first search in
// the parabolic subgroupoid.  Agrees with l(w) whenever J(w) <= J, and that
// agreement is asserted here.
inline int length_J(const CartanScheme& s, const RootSystem& R,
                    const Morphism& w, JMask J) {
  if ((content(s, R, w) & ~J) != 0)
    throw std::invalid_argument("length_J: J(w) is not contained in J");
  std::map<std::pair<int, std::vector<Int>>, int> dist;
  std::vector<Morphism> queue{identity_morphism(s, w.target)};
  dist[queue[0].key()] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Morphism cur = queue[head];
    const int d = dist.at(cur.key());
    if (cur.key() == w.key()) {
      if (d != w.length)
        throw std::logic_error("length_J: l_J differs from l");
      return d;
    }
    for (int j : mask_to_indices(J)) {
      Morphism nxt = right_mul(s, cur, j);
      if (dist.emplace(nxt.key(), d + 1).second) queue.push_back(nxt);
    }
  }
  throw std::logic_error("length_J: element not reached over J");
}

// w = u v with u in W^J (every j in J ascends) and v in W_J; lengths add.
// Follows the inductive construction: peel descending letters of J off the
// right of w.
inline std::pair<Morphism, Morphism> parabolic_decompose(
    const CartanScheme& s, const RootSystem& R, const Morphism& w, JMask J) {
  Morphism u = w;
  std::vector<int> vword;
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (int j : mask_to_indices(J))
      if (!ascends_right(u, j)) {
        u = right_mul(s, u, j);
        vword.insert(vword.begin(), j);
        peeled = true;
        break;
      }
  }
  Morphism v = from_word(s, R, vword, w.source);
  if (v.length != static_cast<int>(vword.size()) ||
      u.length + v.length != w.length)
    throw std::logic_error("parabolic_decompose: lengths do not add");
  if (!(compose(R, u, v) == w))
    throw std::logic_error("parabolic_decompose: u v != w");
  return {u, v};
}

// tau(a): source of the longest element of Hom(-> a).
inline int tau(const CartanScheme& s, int a) {
  return longest_word(s, a, full_mask(s.rank())).source;
}

// tau_I^a: the permutation with w_I id^a(alpha_j) = -alpha_{tau_I(j)},
// where w_I id^a is the longest word with source a, i.e. the inverse of the
// maximal element of Hom(-> a).
inline std::vector<int> tau_I(const CartanScheme& s, int a) {
  const Morphism wI = longest_word(s, a, full_mask(s.rank()));
  const Mat u = inverse_unimodular(wI.act);
  std::vector<int> perm(s.rank(), -1);
  for (int j = 0; j < s.rank(); ++j) {
    const Vec c = u.col(j);
    int hit = -1;
    for (int r = 0; r < s.rank(); ++r) {
      if (c[r] == 0) continue;
      if (c[r] != -1 || hit != -1)
        throw std::logic_error("tau_I: w_I does not negate the basis");
      hit = r;
    }
    if (hit < 0) throw std::logic_error("tau_I: zero column");
    perm[j] = hit;
  }
  return perm;
}

// t^a(w) = w_I w w_I in Hom(-> tau(a)); length-preserving.
inline Morphism t_map(const CartanScheme& s, const RootSystem& R, int a,
                      const Morphism& w) {
  if (w.target != a)
    throw object_mismatch("t_map: morphism does not target the given object");
  const Morphism left = inverse(longest_word(s, a, full_mask(s.rank())));
  const Morphism right = longest_word(s, w.source, full_mask(s.rank()));
  Morphism out = compose(R, left, compose(R, w, right));
  if (out.length != w.length)
    throw std::logic_error("t_map: length not preserved");
  return out;
}

// Scheme + finite root system + one HomSet per object.
struct Groupoid {
  CartanScheme scheme;
  RootSystem roots;
  std::vector<HomSet> hom;

  static Groupoid build(CartanScheme s, RootSystem R) {
    Groupoid g{std::move(s), std::move(R), {}};
    for (int a = 0; a < g.scheme.num_objects(); ++a)
      g.hom.push_back(enumerate_hom_to(g.scheme, g.roots, a));
    return g;
  }

  const Morphism& at(int a, int idx) const { return hom[a].elems[idx]; }
};

}  // namespace weyl
