#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "weyl/ints.hpp"

namespace weyl {

// Abstract simplicial complex on vertices 0..nverts-1.  Faces are nonempty
// sorted vertex lists, grouped by dimension and sorted lexicographically.
// The empty set is not stored.
struct SimplicialComplex {
  int nverts = 0;
  std::vector<std::vector<std::vector<int>>> faces;  // faces[k]: dim-k faces

  static SimplicialComplex from_facets(int nverts,
                                       const std::vector<std::vector<int>>& facets) {
    std::set<std::vector<int>> all;
    for (auto f : facets) {
      std::sort(f.begin(), f.end());
      const size_t m = f.size();
      for (unsigned sub = 1; sub < (1u << m); ++sub) {
        std::vector<int> g;
        for (size_t t = 0; t < m; ++t)
          if ((sub >> t) & 1u) g.push_back(f[t]);
        all.insert(std::move(g));
      }
    }
    return from_face_set(nverts, all);
  }

  static SimplicialComplex from_face_set(int nverts,
                                         const std::set<std::vector<int>>& all) {
    SimplicialComplex sc;
    sc.nverts = nverts;
    for (const auto& f : all) {
      const size_t d = f.size() - 1;
      if (sc.faces.size() <= d) sc.faces.resize(d + 1);
      sc.faces[d].push_back(f);
    }
    for (auto& level : sc.faces)
      std::sort(level.begin(), level.end());
    return sc;
  }

  int dim() const { return static_cast<int>(faces.size()) - 1; }

  std::vector<Int> f_vector() const {
    std::vector<Int> f;
    for (const auto& level : faces) f.push_back(static_cast<Int>(level.size()));
    return f;
  }

  Int euler_characteristic() const {
    Int chi = 0, sign = 1;
    for (const auto& level : faces) {
      chi += sign * static_cast<Int>(level.size());
      sign = -sign;
    }
    return chi;
  }

  Int reduced_euler_characteristic() const { return euler_characteristic() - 1; }

  bool pure() const {
    if (faces.empty()) return true;
    const int d = dim();
    // every maximal face has dimension d
    std::set<std::vector<int>> upper;
    for (int k = d; k >= 1; --k) {
      std::set<std::vector<int>> cur;
      for (const auto& f : faces[k]) {
        cur.insert(f);
        for (size_t drop = 0; drop < f.size(); ++drop) {
          std::vector<int> g;
          for (size_t t = 0; t < f.size(); ++t)
            if (t != drop) g.push_back(f[t]);
          upper.insert(std::move(g));
        }
      }
      if (k < d)
        for (const auto& f : faces[k])
          if (!upper.count(f)) return false;
      upper.insert(cur.begin(), cur.end());
    }
    if (d > 0)
      for (const auto& v : faces[0])
        if (!upper.count(v)) return false;
    return true;
  }

  // Number of facets containing each codimension-1 face.
  std::map<std::vector<int>, int> ridge_degrees() const {
    std::map<std::vector<int>, int> deg;
    const int d = dim();
    if (d < 1) return deg;
    for (const auto& r : faces[d - 1]) deg[r] = 0;
    for (const auto& f : faces[d])
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> g;
        for (size_t t = 0; t < f.size(); ++t)
          if (t != drop) g.push_back(f[t]);
        deg[g] += 1;
      }
    return deg;
  }

  bool is_pseudomanifold() const {
    if (!pure()) return false;
    for (const auto& [r, d] : ridge_degrees())
      if (d > 2) return false;
    return true;
  }

  bool facet_graph_connected() const {
    const int d = dim();
    const auto& fac = faces[d];
    if (fac.size() <= 1) return true;
    std::map<std::vector<int>, std::vector<int>> by_ridge;
    for (size_t k = 0; k < fac.size(); ++k)
      for (size_t drop = 0; drop < fac[k].size(); ++drop) {
        std::vector<int> g;
        for (size_t t = 0; t < fac[k].size(); ++t)
          if (t != drop) g.push_back(fac[k][t]);
        by_ridge[g].push_back(static_cast<int>(k));
      }
    std::vector<int> comp(fac.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    std::map<int, std::vector<int>> adj;
    for (const auto& [g, ks] : by_ridge)
      for (size_t x = 0; x < ks.size(); ++x)
        for (size_t y = x + 1; y < ks.size(); ++y) {
          adj[ks[x]].push_back(ks[y]);
          adj[ks[y]].push_back(ks[x]);
        }
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      for (int nb : adj[k])
        if (comp[nb] == -1) {
          comp[nb] = 0;
          stack.push_back(nb);
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  }

  // Betti numbers over GF(2) via boundary-matrix ranks.  With reduced=true
  // the augmentation map is included, giving reduced homology.
  std::vector<Int> betti_gf2(bool reduced) const {
    const int d = dim();
    if (d < 0) return {};
    std::vector<std::map<std::vector<int>, int>> idx(d + 1);
    for (int k = 0; k <= d; ++k)
      for (size_t t = 0; t < faces[k].size(); ++t)
        idx[k][faces[k][t]] = static_cast<int>(t);

    // rank of boundary_k : C_k -> C_{k-1}
    std::vector<int> rank(d + 2, 0);
    for (int k = (reduced ? 0 : 1); k <= d; ++k) {
      const size_t rows = k == 0 ? 1 : faces[k - 1].size();
      const size_t cols = faces[k].size();
      const size_t words = (cols + 63) / 64;
      std::vector<std::vector<uint64_t>> M(rows,
                                           std::vector<uint64_t>(words, 0));
      for (size_t c = 0; c < cols; ++c) {
        const auto& f = faces[k][c];
        if (k == 0) {
          M[0][c / 64] |= (uint64_t{1} << (c % 64));
          continue;
        }
        for (size_t drop = 0; drop < f.size(); ++drop) {
          std::vector<int> g;
          for (size_t t = 0; t < f.size(); ++t)
            if (t != drop) g.push_back(f[t]);
          const int r = idx[k - 1].at(g);
          M[static_cast<size_t>(r)][c / 64] ^= (uint64_t{1} << (c % 64));
        }
      }
      // Gaussian elimination over GF(2)
      int rk = 0;
      size_t row = 0;
      for (size_t c = 0; c < cols && row < rows; ++c) {
        size_t piv = row;
        while (piv < rows &&
               !((M[piv][c / 64] >> (c % 64)) & 1u))
          ++piv;
        if (piv == rows) continue;
        std::swap(M[row], M[piv]);
        for (size_t r2 = 0; r2 < rows; ++r2) {
          if (r2 == row) continue;
          if ((M[r2][c / 64] >> (c % 64)) & 1u)
            for (size_t wd = 0; wd < words; ++wd) M[r2][wd] ^= M[row][wd];
        }
        ++row;
        ++rk;
      }
      rank[k] = rk;
    }

    std::vector<Int> betti(d + 1, 0);
    for (int k = 0; k <= d; ++k)
      betti[k] = static_cast<Int>(faces[k].size()) - rank[k] - rank[k + 1];
    return betti;
  }
};

struct ShellingResult {
  bool ok = true;
  int bad_i = -1;  // earlier facet of the first violated pair
  int bad_j = -1;
};

// Literal pairwise shelling condition: for i < j there must be l < j and a
// vertex omega of F_j with F_i cap F_j <= F_l cap F_j = F_j minus omega.
inline ShellingResult shelling_check(const SimplicialComplex& sc,
                                     const std::vector<int>& facet_order) {
  const int d = sc.dim();
  const auto& fac = sc.faces[d];
  if (facet_order.size() != fac.size())
    throw std::invalid_argument("shelling_check: order is not a permutation");

  auto intersect = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::back_inserter(out));
    return out;
  };

  for (size_t j = 1; j < facet_order.size(); ++j) {
    const auto& Fj = fac[facet_order[j]];
    std::set<std::vector<int>> ridges;  // F_l cap F_j of size |F_j|-1, l < j
    for (size_t l = 0; l < j; ++l) {
      auto cap = intersect(fac[facet_order[l]], Fj);
      if (cap.size() + 1 == Fj.size()) ridges.insert(std::move(cap));
    }
    for (size_t i = 0; i < j; ++i) {
      const auto cap = intersect(fac[facet_order[i]], Fj);
      if (cap.size() + 1 == Fj.size()) continue;  // is itself a ridge
      bool covered = false;
      for (const auto& r : ridges)
        if (std::includes(r.begin(), r.end(), cap.begin(), cap.end())) {
          covered = true;
          break;
        }
      if (Fj.size() == 1 && cap.empty()) covered = true;  // 0-dimensional case
      if (!covered)
        return {false, static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

}  // namespace weyl
