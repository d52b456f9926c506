#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/ints.hpp"

namespace weyl {

// Real roots, one set per object.  `all` is the reflection closure of the
// standard basis; `positive` is its intersection with N_0^I.  Both are
// sorted lexicographically, so equal systems compare equal.
struct RootSystem {
  std::vector<std::vector<Vec>> all;
  std::vector<std::vector<Vec>> positive;

  int count_positive(int a) const {
    return static_cast<int>(positive[a].size());
  }

  bool contains(int a, const Vec& v) const {
    const auto& s = all[a];
    return std::binary_search(s.begin(), s.end(), v);
  }

  bool contains_positive(int a, const Vec& v) const {
    const auto& s = positive[a];
    return std::binary_search(s.begin(), s.end(), v);
  }
};

struct NotFinite {
  int object = -1;
  Vec vec;
};

struct RootGenResult {
  std::optional<RootSystem> roots;
  std::optional<NotFinite> not_finite;

  bool finite() const { return roots.has_value(); }
};

inline Int default_root_cap(const CartanScheme& s) {
  return Int{10} * s.rank() * s.num_objects();
}

// Fixed-point closure of {alpha_j} under all sigma_i^a, transporting vectors
// along the object change maps.  The cap bounds the coordinate height of any
// generated vector and turns non-finiteness into a detectable outcome.
inline RootGenResult generate_roots(const CartanScheme& s, Int cap) {
  const int n = s.rank();
  const int m = s.num_objects();

  std::vector<Mat> sigma(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      sigma[static_cast<size_t>(i) * m + a] = s.simple_reflection(i, a);

  std::vector<std::set<Vec>> seen(m);
  std::deque<std::pair<int, Vec>> work;
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) {
      Vec v(static_cast<size_t>(n), 0);
      v[j] = 1;
      if (seen[a].insert(v).second) work.emplace_back(a, std::move(v));
    }

  while (!work.empty()) {
    auto [a, v] = std::move(work.front());
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      Vec u = sigma[static_cast<size_t>(i) * m + a] * v;
      const int b = s.reflect(i, a);
      if (height(u) > cap) return {std::nullopt, NotFinite{b, std::move(u)}};
      if (seen[b].insert(u).second) work.emplace_back(b, std::move(u));
    }
  }

  RootSystem R;
  R.all.resize(m);
  R.positive.resize(m);
  for (int a = 0; a < m; ++a) {
    R.all[a].assign(seen[a].begin(), seen[a].end());
    for (const Vec& v : R.all[a])
      if (all_nonneg(v)) R.positive[a].push_back(v);
  }
  return {std::move(R), std::nullopt};
}

struct AxiomFailure {
  std::string axiom;  // "R1", "R2", "R3" or "R4"
  int object = -1;
  std::string witness;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
  friend auto operator<=>(const AxiomFailure&, const AxiomFailure&) = default;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;

  bool ok() const { return failures.empty(); }
  bool axiom_ok(const std::string& name) const {
    for (const auto& f : failures)
      if (f.axiom == name) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& f : failures)
      s += "(" + f.axiom + ") at object " + std::to_string(f.object) + ": " +
           f.witness + "\n";
    return s;
  }
};

// m^a_{i,j} = |R^a cap (N_0 alpha_i + N_0 alpha_j)|.
inline int root_pair_count(const RootSystem& R, int a, int i, int j) {
  int cnt = 0;
  for (const Vec& v : R.all[a]) {
    if (!all_nonneg(v)) continue;
    bool supported = true;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0 && static_cast<int>(k) != i && static_cast<int>(k) != j)
        supported = false;
    if (supported) ++cnt;
  }
  return cnt;
}

// Axioms (R1)-(R4) for a generated (finite) system.  Failures are report
// entries, not errors.
inline AxiomReport check_axioms(const CartanScheme& s, const RootSystem& R) {
  AxiomReport rep;
  const int n = s.rank();
  const int m = s.num_objects();

  for (int a = 0; a < m; ++a) {
    // (R1): sign-definite and symmetric under negation.
    std::set<Vec> expected;
    for (const Vec& v : R.positive[a]) {
      expected.insert(v);
      expected.insert(negate(v));
    }
    for (const Vec& v : R.all[a])
      if (!all_nonneg(v) && !all_nonpos(v))
        rep.failures.push_back(
            {"R1", a, "root " + vec_to_string(v) + " is not sign-definite"});
    std::set<Vec> actual(R.all[a].begin(), R.all[a].end());
    if (actual != expected && rep.axiom_ok("R1"))
      rep.failures.push_back({"R1", a, "R^a != R^a_+ cup -R^a_+"});

    // (R2): the only multiples of alpha_i are +-alpha_i.
    for (const Vec& v : R.all[a]) {
      int support = -1;
      bool single = true;
      for (int k = 0; k < n; ++k)
        if (v[k] != 0) {
          if (support == -1)
            support = k;
          else
            single = false;
        }
      if (single && support >= 0 && std::llabs(v[support]) != 1)
        rep.failures.push_back(
            {"R2", a,
             "extra multiple " + vec_to_string(v) + " of alpha_" +
                 std::to_string(support + 1)});
    }
    for (int i = 0; i < n; ++i) {
      Vec e(static_cast<size_t>(n), 0);
      e[i] = 1;
      if (!R.contains(a, e) || !R.contains(a, negate(e)))
        rep.failures.push_back(
            {"R2", a, "missing +-alpha_" + std::to_string(i + 1)});
    }

    // (R3): sigma_i^a maps R^a onto R^{rho_i(a)}.
    for (int i = 0; i < n; ++i) {
      const Mat sig = s.simple_reflection(i, a);
      const int b = s.reflect(i, a);
      std::set<Vec> image;
      for (const Vec& v : R.all[a]) image.insert(sig * v);
      std::set<Vec> target(R.all[b].begin(), R.all[b].end());
      if (image != target) {
        Vec bad;
        for (const Vec& v : R.all[a])
          if (!R.contains(b, sig * v)) {
            bad = v;
            break;
          }
        rep.failures.push_back(
            {"R3", a,
             "sigma_" + std::to_string(i + 1) + " image mismatch" +
                 (bad.empty() ? std::string()
                              : " at root " + vec_to_string(bad))});
      }
    }

    // (R4): (rho_i rho_j)^{m^a_{i,j}} fixes a.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int mij = root_pair_count(R, a, i, j);
        int x = a;
        for (int t = 0; t < mij; ++t) x = s.reflect(i, s.reflect(j, x));
        if (x != a)
          rep.failures.push_back(
              {"R4", a,
               "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   "): m = " + std::to_string(mij) +
                   " but (rho_i rho_j)^m moves the object"});
      }
  }

  std::sort(rep.failures.begin(), rep.failures.end());
  rep.failures.erase(std::unique(rep.failures.begin(), rep.failures.end()),
                     rep.failures.end());
  return rep;
}

// True iff the off-diagonal zero pattern, read as a graph on I, is connected.
inline bool is_indecomposable(const Mat& C) {
  const int n = C.n;
  if (n == 0) return false;
  std::vector<bool> vis(n, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (j != i && !vis[j] && C(i, j) != 0) {
        vis[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == n;
}

}  // namespace weyl
