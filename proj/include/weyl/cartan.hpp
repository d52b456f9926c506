#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "weyl/ints.hpp"

namespace weyl {

// Index subsets J of I = {0,...,rank-1} as bitmasks.
using JMask = unsigned;

inline JMask full_mask(int rank) { return (1u << rank) - 1u; }
inline bool in_mask(JMask J, int i) { return (J >> i) & 1u; }
inline int mask_size(JMask J) { return __builtin_popcount(J); }

inline std::vector<int> mask_to_indices(JMask J) {
  std::vector<int> out;
  for (int i = 0; J >> i; ++i)
    if (in_mask(J, i)) out.push_back(i);
  return out;
}

inline JMask indices_to_mask(const std::vector<int>& idx) {
  JMask J = 0;
  for (int i : idx) J |= (1u << i);
  return J;
}

// Unvalidated scheme data, as read from a file or assembled by hand.
// Reflection maps are keyed by 1-based index; matrices are lists of rows.
struct RawScheme {
  int rank = 0;
  std::vector<std::string> objects;
  std::map<int, std::map<std::string, std::string>> reflections;
  std::map<std::string, std::vector<Vec>> cartan;

  friend bool operator==(const RawScheme&, const RawScheme&) = default;
};

struct Violation {
  std::string axiom;  // "structure", "gcm", "C1" or "C2"
  std::vector<std::string> objects;
  std::vector<int> indices;  // 1-based, as in the input format
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;

  std::string to_string() const {
    std::string s = "[" + axiom + "]";
    for (const auto& o : objects) s += " object " + o;
    for (int i : indices) s += " index " + std::to_string(i);
    if (!note.empty()) s += ": " + note;
    return s;
  }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::string to_string() const {
    std::string s;
    for (const auto& v : violations) s += v.to_string() + "\n";
    return s;
  }
};

// Checks the shape of the data, the generalized-Cartan-matrix conditions and
// axioms (C1), (C2).  Collects every violation instead of failing fast; the
// list is canonically sorted, so the report is input-order independent.
inline ValidationReport validate_scheme(const RawScheme& raw) {
  ValidationReport rep;
  auto add = [&](std::string axiom, std::vector<std::string> objs,
                 std::vector<int> idx, std::string note) {
    rep.violations.push_back(
        {std::move(axiom), std::move(objs), std::move(idx), std::move(note)});
  };

  const int n = raw.rank;
  if (n < 1) {
    add("structure", {}, {}, "rank must be >= 1");
    return rep;
  }
  if (raw.objects.empty()) {
    add("structure", {}, {}, "object list is empty");
    return rep;
  }
  std::map<std::string, int> oid;
  for (size_t k = 0; k < raw.objects.size(); ++k) {
    if (!oid.emplace(raw.objects[k], static_cast<int>(k)).second)
      add("structure", {raw.objects[k]}, {}, "duplicate object name");
  }

  // Matrices: every object needs an n x n matrix, and nothing else may
  // appear in the map.
  bool shapes_ok = true;
  for (const auto& name : raw.objects) {
    auto it = raw.cartan.find(name);
    if (it == raw.cartan.end()) {
      add("structure", {name}, {}, "missing Cartan matrix");
      shapes_ok = false;
      continue;
    }
    const auto& rows = it->second;
    bool good = rows.size() == static_cast<size_t>(n);
    for (const auto& r : rows) good = good && r.size() == static_cast<size_t>(n);
    if (!good) {
      add("structure", {name}, {}, "Cartan matrix is not rank x rank");
      shapes_ok = false;
    }
  }
  for (const auto& [name, rows] : raw.cartan) {
    (void)rows;
    if (!oid.count(name))
      add("structure", {name}, {}, "Cartan matrix for unknown object");
  }

  // Reflection maps: indices 1..rank, total on the object set, values known.
  bool refl_ok = true;
  for (int i = 1; i <= n; ++i) {
    auto it = raw.reflections.find(i);
    if (it == raw.reflections.end()) {
      add("structure", {}, {i}, "missing reflection map");
      refl_ok = false;
      continue;
    }
    for (const auto& name : raw.objects) {
      auto jt = it->second.find(name);
      if (jt == it->second.end()) {
        add("structure", {name}, {i}, "reflection undefined on object");
        refl_ok = false;
      } else if (!oid.count(jt->second)) {
        add("structure", {name, jt->second}, {i},
            "reflection maps to unknown object");
        refl_ok = false;
      }
    }
    for (const auto& [from, to] : it->second) {
      (void)to;
      if (!oid.count(from))
        add("structure", {from}, {i}, "reflection defined on unknown object");
    }
  }
  for (const auto& [i, m] : raw.reflections) {
    (void)m;
    if (i < 1 || i > n)
      add("structure", {}, {i}, "reflection index out of range");
  }

  // Generalized Cartan matrix conditions.
  if (shapes_ok) {
    for (const auto& name : raw.objects) {
      const auto& C = raw.cartan.at(name);
      for (int j = 0; j < n; ++j) {
        if (C[j][j] != 2)
          add("gcm", {name}, {j + 1}, "diagonal entry is not 2");
        for (int k = 0; k < n; ++k) {
          if (j == k) continue;
          if (C[j][k] > 0)
            add("gcm", {name}, {j + 1, k + 1}, "positive off-diagonal entry");
          if ((C[j][k] == 0) != (C[k][j] == 0) && j < k)
            add("gcm", {name}, {j + 1, k + 1},
                "off-diagonal zero is not symmetric");
        }
      }
    }
  }

  // (C1): each reflection map is an involution.
  if (refl_ok) {
    for (int i = 1; i <= n; ++i) {
      const auto& rho = raw.reflections.at(i);
      for (const auto& name : raw.objects) {
        const auto& img = rho.at(name);
        if (rho.at(img) != name)
          add("C1", {name}, {i}, "reflection is not an involution");
      }
    }
  }

  // (C2): row i of the Cartan matrix is constant along the i-edge.
  if (refl_ok && shapes_ok) {
    for (int i = 1; i <= n; ++i) {
      const auto& rho = raw.reflections.at(i);
      for (const auto& name : raw.objects) {
        const auto& img = rho.at(name);
        if (oid.at(name) > oid.at(img)) continue;  // report each edge once
        const auto& Ca = raw.cartan.at(name);
        const auto& Cb = raw.cartan.at(img);
        for (int j = 0; j < n; ++j)
          if (Ca[i - 1][j] != Cb[i - 1][j])
            add("C2", {name, img}, {i, j + 1},
                "row differs across the reflection");
      }
    }
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(
      std::unique(rep.violations.begin(), rep.violations.end()),
      rep.violations.end());
  return rep;
}

// A validated Cartan scheme.  Immutable after construction; objects are
// referred to by dense ids, indices of I are 0-based internally.
class CartanScheme {
 public:
  static CartanScheme from_raw(const RawScheme& raw) {
    ValidationReport rep = validate_scheme(raw);
    if (!rep.ok())
      throw std::invalid_argument("invalid Cartan scheme:\n" + rep.to_string());
    CartanScheme s;
    s.rank_ = raw.rank;
    s.objects_ = raw.objects;
    for (size_t k = 0; k < s.objects_.size(); ++k)
      s.oid_[s.objects_[k]] = static_cast<int>(k);
    s.refl_.assign(s.rank_, std::vector<int>(s.objects_.size()));
    for (int i = 0; i < s.rank_; ++i)
      for (size_t a = 0; a < s.objects_.size(); ++a)
        s.refl_[i][a] = s.oid_.at(raw.reflections.at(i + 1).at(s.objects_[a]));
    for (size_t a = 0; a < s.objects_.size(); ++a) {
      Mat C(s.rank_);
      const auto& rows = raw.cartan.at(s.objects_[a]);
      for (int r = 0; r < s.rank_; ++r)
        for (int c = 0; c < s.rank_; ++c) C(r, c) = rows[r][c];
      s.cartan_.push_back(std::move(C));
    }
    return s;
  }

  RawScheme to_raw() const {
    RawScheme raw;
    raw.rank = rank_;
    raw.objects = objects_;
    for (int i = 0; i < rank_; ++i) {
      std::map<std::string, std::string> rho;
      for (int a = 0; a < num_objects(); ++a)
        rho[objects_[a]] = objects_[refl_[i][a]];
      raw.reflections[i + 1] = std::move(rho);
    }
    for (int a = 0; a < num_objects(); ++a) {
      std::vector<Vec> rows;
      for (int r = 0; r < rank_; ++r) rows.push_back(cartan_[a].row(r));
      raw.cartan[objects_[a]] = std::move(rows);
    }
    return raw;
  }

  int rank() const { return rank_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::string& object_name(int a) const { return objects_[a]; }

  int object_id(const std::string& name) const {
    auto it = oid_.find(name);
    return it == oid_.end() ? -1 : it->second;
  }

  int reflect(int i, int a) const { return refl_[i][a]; }
  const Mat& cartan(int a) const { return cartan_[a]; }

  // sigma_i^a in Hom(a, reflect(i, a)): alpha_j -> alpha_j - c^a_{ij} alpha_i.
  Mat simple_reflection(int i, int a) const {
    Mat m = Mat::identity(rank_);
    for (int j = 0; j < rank_; ++j) m(i, j) -= cartan_[a](i, j);
    return m;
  }

  // Restriction to the index subset J (0-based, sorted).  Index k of the
  // result corresponds to J[k] in this scheme; objects are unchanged.
  CartanScheme restrict(const std::vector<int>& J) const {
    if (J.empty()) throw std::invalid_argument("restrict: empty index subset");
    for (int j : J)
      if (j < 0 || j >= rank_)
        throw std::invalid_argument("restrict: index out of range");
    CartanScheme s;
    s.rank_ = static_cast<int>(J.size());
    s.objects_ = objects_;
    s.oid_ = oid_;
    for (int j : J) s.refl_.push_back(refl_[j]);
    for (int a = 0; a < num_objects(); ++a) {
      Mat C(s.rank_);
      for (int r = 0; r < s.rank_; ++r)
        for (int c = 0; c < s.rank_; ++c) C(r, c) = cartan_[a](J[r], J[c]);
      s.cartan_.push_back(std::move(C));
    }
    return s;
  }

  // Connected components of the object change diagram.
  std::vector<int> object_components() const {
    std::vector<int> comp(num_objects(), -1);
    int next = 0;
    for (int a = 0; a < num_objects(); ++a) {
      if (comp[a] != -1) continue;
      std::vector<int> stack{a};
      comp[a] = next;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int i = 0; i < rank_; ++i) {
          int y = refl_[i][x];
          if (comp[y] == -1) {
            comp[y] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  friend bool operator==(const CartanScheme& x, const CartanScheme& y) {
    return x.rank_ == y.rank_ && x.objects_ == y.objects_ &&
           x.refl_ == y.refl_ && x.cartan_ == y.cartan_;
  }

 private:
  CartanScheme() = default;

  int rank_ = 0;
  std::vector<std::string> objects_;
  std::map<std::string, int> oid_;
  std::vector<std::vector<int>> refl_;
  std::vector<Mat> cartan_;
};

}  // namespace weyl
