#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/order.hpp"
#include "weyl/simplicial.hpp"

namespace weyl {

// Left parabolic coset w W_J, identified by its minimal-length
// representative (an index into the HomSet of the target) and J.
struct Coset {
  int rep = -1;
  JMask J = 0;

  friend bool operator==(const Coset&, const Coset&) = default;
};

inline Coset canonical_coset(const System& S, int a, const Morphism& w,
                             JMask J) {
  const auto [u, v] = parabolic_decompose(S.scheme(), S.roots(), w, J);
  (void)v;
  const int rep = S.hom(a).find(u);
  if (rep < 0) throw std::logic_error("canonical_coset: representative missing");
  return {rep, J};
}

namespace bits {
inline void set(std::vector<uint64_t>& b, int k) {
  b[static_cast<size_t>(k) / 64] |= (uint64_t{1} << (k % 64));
}
inline bool test(const std::vector<uint64_t>& b, int k) {
  return (b[static_cast<size_t>(k) / 64] >> (k % 64)) & 1u;
}
inline bool subset(const std::vector<uint64_t>& x,
                   const std::vector<uint64_t>& y) {  // x <= y
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] & ~y[i]) return false;
  return true;
}
inline bool empty(const std::vector<uint64_t>& b) {
  for (uint64_t w : b)
    if (w) return false;
  return true;
}
inline int first(const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i]) return static_cast<int>(i * 64 + __builtin_ctzll(b[i]));
  return -1;
}
}  // namespace bits

// All distinct cosets w W_J at a fixed target, for every J including I,
// with element bitsets over the HomSet and the coset of every (w, J) pair.
struct CosetTable {
  int object = 0;
  std::vector<Coset> cosets;                        // sorted by (J, rep)
  std::map<std::pair<JMask, int>, int> id;          // (J, rep) -> coset index
  std::vector<std::vector<uint64_t>> members;       // per coset
  std::vector<std::vector<int>> coset_of;           // [hom idx][J] -> coset

  int find(const Coset& c) const {
    auto it = id.find({c.J, c.rep});
    return it == id.end() ? -1 : it->second;
  }
};

inline CosetTable enumerate_cosets(const System& S, int a) {
  const HomSet& hs = S.hom(a);
  const JMask full = full_mask(S.scheme().rank());
  const size_t words = (static_cast<size_t>(hs.size()) + 63) / 64;

  CosetTable T;
  T.object = a;
  T.coset_of.assign(hs.size(), std::vector<int>(full + 1, -1));

  std::map<std::pair<JMask, int>, std::vector<int>> groups;
  for (int w = 0; w < hs.size(); ++w)
    for (JMask J = 0; J <= full; ++J) {
      const Coset c = canonical_coset(S, a, hs.elems[w], J);
      groups[{J, c.rep}].push_back(w);
    }

  for (const auto& [key, ws] : groups) {
    const int cid = static_cast<int>(T.cosets.size());
    T.cosets.push_back({key.second, key.first});
    T.id[key] = cid;
    std::vector<uint64_t> bs(words, 0);
    for (int w : ws) {
      bits::set(bs, w);
      T.coset_of[w][key.first] = cid;
    }
    T.members.push_back(std::move(bs));
  }

  // the elements of w W_J are exactly w' = rep * v with v in the parabolic,
  // so membership must agree with content-filtered composition
  for (int cid = 0; cid < static_cast<int>(T.cosets.size()); ++cid) {
    const Coset& c = T.cosets[cid];
    const Morphism& rep = hs.elems[c.rep];
    const HomSet& hb = S.hom(rep.source);
    std::vector<uint64_t> expect(words, 0);
    for (int k = 0; k < hb.size(); ++k) {
      if ((hb.contents[k] & ~c.J) != 0) continue;
      const int w = hs.find(compose(S.roots(), rep, hb.elems[k]));
      if (w < 0) throw std::logic_error("enumerate_cosets: element escaped");
      bits::set(expect, w);
    }
    if (expect != T.members[cid])
      throw std::logic_error("enumerate_cosets: coset membership mismatch");
  }
  return T;
}

// u W_J cap v W_K is empty or a single coset of W_{J cap K} (asserted).
inline std::optional<Coset> coset_intersection(const System& S,
                                               const CosetTable& T,
                                               const Coset& c1,
                                               const Coset& c2) {
  const int i1 = T.find(c1), i2 = T.find(c2);
  if (i1 < 0 || i2 < 0)
    throw std::invalid_argument("coset_intersection: unknown coset");
  std::vector<uint64_t> both(T.members[i1].size());
  for (size_t k = 0; k < both.size(); ++k)
    both[k] = T.members[i1][k] & T.members[i2][k];
  if (bits::empty(both)) return std::nullopt;
  const int w = bits::first(both);
  const Coset c =
      canonical_coset(S, T.object, S.hom(T.object).elems[w], c1.J & c2.J);
  const int ci = T.find(c);
  if (ci < 0 || T.members[ci] != both)
    throw std::logic_error(
        "coset_intersection: intersection is not a single coset");
  return c;
}

// The Coxeter complex at an object: vertices are the cosets with
// |J| = |I|-1, a vertex set is a face iff the cosets intersect, and the
// facets correspond to the morphisms.
struct CoxeterComplex {
  int object = 0;
  int rank = 0;
  CosetTable table;
  std::vector<int> vertex_cosets;   // coset ids, one per vertex
  std::vector<int> vertex_of_coset; // coset id -> vertex number or -1
  SimplicialComplex sc;
  std::vector<std::vector<int>> facets;  // per morphism, sorted vertex sets
  std::map<std::vector<int>, int> face_coset;  // face -> realizing coset id
};

inline CoxeterComplex coxeter_complex(const System& S, int a) {
  const int n = S.scheme().rank();
  if (n < 2)
    throw std::invalid_argument(
        "coxeter_complex: rank below 2 degenerates to points");
  const HomSet& hs = S.hom(a);
  const JMask full = full_mask(n);

  CoxeterComplex C;
  C.object = a;
  C.rank = n;
  C.table = enumerate_cosets(S, a);

  C.vertex_of_coset.assign(C.table.cosets.size(), -1);
  for (int cid = 0; cid < static_cast<int>(C.table.cosets.size()); ++cid)
    if (mask_size(C.table.cosets[cid].J) == n - 1) {
      C.vertex_of_coset[cid] = static_cast<int>(C.vertex_cosets.size());
      C.vertex_cosets.push_back(cid);
    }

  for (int w = 0; w < hs.size(); ++w) {
    std::vector<int> fac;
    for (int i = 0; i < n; ++i) {
      const JMask J = full & ~(1u << i);
      fac.push_back(C.vertex_of_coset[C.table.coset_of[w][J]]);
    }
    std::sort(fac.begin(), fac.end());
    if (std::unique(fac.begin(), fac.end()) != fac.end())
      throw std::logic_error("coxeter_complex: facet vertices collide");
    C.facets.push_back(std::move(fac));
  }

  C.sc = SimplicialComplex::from_facets(
      static_cast<int>(C.vertex_cosets.size()), C.facets);

  // tag every face with the realizing coset and check it is a single coset
  for (const auto& level : C.sc.faces)
    for (const auto& face : level) {
      std::vector<uint64_t> common;
      JMask K = full;
      for (int v : face) {
        const int cid = C.vertex_cosets[v];
        K &= C.table.cosets[cid].J;
        if (common.empty())
          common = C.table.members[cid];
        else
          for (size_t t = 0; t < common.size(); ++t)
            common[t] &= C.table.members[cid][t];
      }
      if (bits::empty(common))
        throw std::logic_error("coxeter_complex: face with empty intersection");
      const int w = bits::first(common);
      const int cid = C.table.coset_of[w][K];
      if (C.table.members[cid] != common)
        throw std::logic_error(
            "coxeter_complex: face intersection is not one coset");
      C.face_coset[face] = cid;
    }

  // conversely, every proper-J coset must appear as a face
  for (int cid = 0; cid < static_cast<int>(C.table.cosets.size()); ++cid) {
    const Coset& c = C.table.cosets[cid];
    if (c.J == full) continue;
    std::vector<int> face;
    for (int i = 0; i < n; ++i) {
      const JMask J = full & ~(1u << i);
      if ((c.J & ~J) != 0) continue;  // J must contain c.J
      face.push_back(C.vertex_of_coset[C.table.coset_of[c.rep][J]]);
    }
    std::sort(face.begin(), face.end());
    auto it = C.face_coset.find(face);
    if (it == C.face_coset.end() || it->second != cid)
      throw std::logic_error("coxeter_complex: coset without matching face");
  }
  return C;
}

// A face F^w_J of the hyperplane model: rational witness point plus its
// sign vector against the sorted positive roots at the object.
struct GeometricFace {
  int coset = -1;
  int rep = -1;
  JMask J = 0;
  Vec witness;
  std::string signs;  // one of -, 0, + per positive root
};

inline char sign_char(Int x) { return x > 0 ? '+' : (x < 0 ? '-' : '0'); }

// child lies in the closure of parent iff its sign vector agrees with the
// parent's wherever it is nonzero.
inline bool conformal(const std::string& child, const std::string& parent) {
  for (size_t i = 0; i < child.size(); ++i)
    if (child[i] != '0' && child[i] != parent[i]) return false;
  return true;
}

// One geometric face per coset: the witness is the sum of the dual basis
// vectors of {u(alpha_i)} over i outside J.  The dual basis is integral
// because morphism actions are unimodular.
inline std::vector<GeometricFace> geometric_faces(const System& S, int a,
                                                  const CosetTable& T) {
  const HomSet& hs = S.hom(a);
  const int n = S.scheme().rank();
  std::vector<GeometricFace> out;
  std::map<std::string, int> seen_signs;

  for (int cid = 0; cid < static_cast<int>(T.cosets.size()); ++cid) {
    const Coset& c = T.cosets[cid];
    const Morphism& u = hs.elems[c.rep];
    const Mat dual = inverse_unimodular(u.act);  // row i is mu_i

    GeometricFace f;
    f.coset = cid;
    f.rep = c.rep;
    f.J = c.J;
    f.witness.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (in_mask(c.J, i)) continue;
      for (int t = 0; t < n; ++t) f.witness[t] += dual(i, t);
    }
    for (int j = 0; j < n; ++j) {
      const Int val = dot(f.witness, u.act.col(j));
      if (val != (in_mask(c.J, j) ? 0 : 1))
        throw std::logic_error("geometric_faces: witness misses its cone");
    }

    for (const Vec& beta : S.roots().positive[a]) {
      const char s = sign_char(dot(f.witness, beta));
      // predicted sign from u^{-1} beta: zero iff the support lies in J,
      // otherwise the sign of the transported root
      const Vec gamma = dual * beta;
      JMask supp = 0;
      for (int t = 0; t < n; ++t)
        if (gamma[t] != 0) supp |= (1u << t);
      char predicted;
      if ((supp & ~c.J) == 0)
        predicted = '0';
      else
        predicted = all_nonneg(gamma) ? '+' : '-';
      if (s != predicted)
        throw std::logic_error("geometric_faces: sign vector mismatch");
      f.signs.push_back(s);
    }

    if (!seen_signs.emplace(f.signs, cid).second)
      throw std::logic_error("geometric_faces: duplicate sign vector");
    out.push_back(std::move(f));
  }
  return out;
}

struct IsoResult {
  bool ok = true;
  std::string counterexample;
};

// Coset complex vs sign-vector complex: the correspondence must be
// bijective and closure inclusion (conformality) must match coset
// containment in both directions.
inline IsoResult verify_isomorphism(const CosetTable& T,
                                    const std::vector<GeometricFace>& faces) {
  if (faces.size() != T.cosets.size())
    return {false, "face/coset counts differ"};
  std::map<std::string, int> by_sign;
  for (const auto& f : faces)
    if (!by_sign.emplace(f.signs, f.coset).second)
      return {false, "duplicate sign vector for coset " +
                         std::to_string(f.coset)};
  for (size_t x = 0; x < faces.size(); ++x)
    for (size_t y = 0; y < faces.size(); ++y) {
      const bool geo = conformal(faces[x].signs, faces[y].signs);
      const bool alg =
          bits::subset(T.members[faces[y].coset], T.members[faces[x].coset]);
      if (geo != alg)
        return {false,
                "faces " + std::to_string(x) + " and " + std::to_string(y) +
                    ": closure inclusion disagrees with coset containment"};
    }
  return {};
}

struct ChamberInfo {
  int morphism = -1;  // representative (coset of J = empty set)
  std::string signs;
  int walls = 0;
  int rays = 0;
  bool simplicial = false;
};

struct Arrangement {
  std::vector<Vec> normals;  // the positive roots
  std::vector<ChamberInfo> chambers;
  bool simplicial = true;
};

// Hyperplanes H_beta for the positive roots; chambers are the zero-free
// sign vectors.  A chamber is simplicial when it has exactly |I| walls and
// |I| extreme rays with linearly independent witnesses.
inline Arrangement arrangement(const System& S, int a,
                               const std::vector<GeometricFace>& faces) {
  const int n = S.scheme().rank();
  Arrangement A;
  A.normals = S.roots().positive[a];

  for (const auto& f : faces) {
    if (f.J != 0) continue;
    if (f.signs.find('0') != std::string::npos)
      throw std::logic_error("arrangement: chamber sign vector has a zero");
    ChamberInfo ch;
    ch.morphism = f.rep;
    ch.signs = f.signs;
    std::vector<Vec> ray_witnesses;
    for (const auto& g : faces) {
      if (!conformal(g.signs, f.signs)) continue;
      if (mask_size(g.J) == 1) ++ch.walls;
      if (mask_size(g.J) == n - 1 && g.J != 0) {
        ++ch.rays;
        ray_witnesses.push_back(g.witness);
      }
    }
    if (n == 1) {  // a half-line is its own extreme ray
      ch.rays = 1;
      ray_witnesses = {f.witness};
    }
    ch.simplicial = ch.walls == n && ch.rays == n &&
                    rank_of(ray_witnesses) == n;
    A.simplicial = A.simplicial && ch.simplicial;
    A.chambers.push_back(std::move(ch));
  }
  if (A.chambers.size() != static_cast<size_t>(S.hom(a).size()))
    throw std::logic_error("arrangement: chamber census != |Hom(-> a)|");
  return A;
}

}  // namespace weyl
