#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl {

using Int = long long;
using Vec = std::vector<Int>;

// Dense square integer matrix, row-major.  Columns hold images of the
// standard basis, so the image of alpha_j under a morphism is column j.
struct Mat {
  int n = 0;
  std::vector<Int> a;

  Mat() = default;
  explicit Mat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  Int operator()(int r, int c) const {
    return a[static_cast<size_t>(r) * n + c];
  }

  Vec col(int j) const {
    Vec v(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) v[r] = (*this)(r, j);
    return v;
  }

  Vec row(int i) const {
    Vec v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) v[c] = (*this)(i, c);
    return v;
  }

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& x, const Mat& y) {
    if (auto c = x.n <=> y.n; c != 0) return c;
    return x.a <=> y.a;
  }
};

inline Mat operator*(const Mat& x, const Mat& y) {
  assert(x.n == y.n);
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Int v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

inline Vec operator*(const Mat& m, const Vec& v) {
  assert(static_cast<size_t>(m.n) == v.size());
  Vec out(static_cast<size_t>(m.n), 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline bool all_nonneg(const Vec& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

inline bool all_nonpos(const Vec& v) {
  for (Int x : v)
    if (x > 0) return false;
  return true;
}

inline bool is_zero_vec(const Vec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

inline Vec negate(Vec v) {
  for (Int& x : v) x = -x;
  return v;
}

inline Int dot(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Int height(const Vec& v) {
  Int s = 0;
  for (Int x : v) s += std::llabs(x);
  return s;
}

// Fraction-free (Bareiss) determinant; exact on the small matrices used here.
inline Int det(Mat m) {
  const int n = m.n;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {
inline Mat minor_of(const Mat& m, int drop_row, int drop_col) {
  Mat s(m.n - 1);
  int r2 = 0;
  for (int r = 0; r < m.n; ++r) {
    if (r == drop_row) continue;
    int c2 = 0;
    for (int c = 0; c < m.n; ++c) {
      if (c == drop_col) continue;
      s(r2, c2) = m(r, c);
      ++c2;
    }
    ++r2;
  }
  return s;
}
}  // namespace detail

// Inverse of an integer matrix with det = +-1, via the adjugate.  Exact.
inline Mat inverse_unimodular(const Mat& m) {
  const Int d = det(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
  if (m.n == 1) {
    Mat inv(1);
    inv(0, 0) = d;
    return inv;
  }
  Mat inv(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      Int cof = det(detail::minor_of(m, j, i));
      if ((i + j) % 2 != 0) cof = -cof;
      inv(i, j) = cof * d;  // adj / det with det = +-1
    }
  return inv;
}

// Rank over Q of a list of integer row vectors (fraction-free elimination).
inline int rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Int p = rows[r][c], q = rows[i][c];
      for (size_t j = 0; j < ncols; ++j)
        rows[i][j] = rows[i][j] * p - rows[r][j] * q;
      const Int g = std::reduce(rows[i].begin(), rows[i].end(), Int{0},
                                [](Int x, Int y) {
                                  x = std::llabs(x);
                                  y = std::llabs(y);
                                  while (y) {
                                    Int t = x % y;
                                    x = y;
                                    y = t;
                                  }
                                  return x;
                                });
      if (g > 1)
        for (Int& x : rows[i]) x /= g;
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace weyl
