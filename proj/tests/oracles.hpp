#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's LR, model or linear-algebra code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<mpq_class>>;

// Plain dense Gaussian elimination.
inline int rank(Mat m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// A basis of sl_n as dense matrices: E_ij (i≠j) and E_ii - E_nn.
inline std::vector<Mat> sl_basis(int n) {
  std::vector<Mat> out;
  auto zero = [n] { return Mat(n, std::vector<mpq_class>(n, 0)); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto m = zero();
      m[i][j] = 1;
      out.push_back(m);
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    auto m = zero();
    m[i][i] = 1;
    m[n - 1][n - 1] = -1;
    out.push_back(m);
  }
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat c(n, std::vector<mpq_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a[0].size(), std::vector<mpq_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline std::vector<mpq_class> flatten(const std::vector<Mat>& blocks) {
  std::vector<mpq_class> v;
  for (const auto& b : blocks)
    for (const auto& row : b)
      for (const auto& x : row) v.push_back(x);
  return v;
}

inline Mat random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c) {
  Mat m(r, std::vector<mpq_class>(c));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(g() % 201) - 100;
  return m;
}

enum class Action { Vector, Quadric, Adjoint, TwoForm };

// dim of {X ∈ sl_n : X·p = 0} for a random point p of the given classical
// action (copies of it). Vector: X v; Quadric: X S + S Xᵀ with S symmetric;
// Adjoint: [X, A] with A traceless; TwoForm: X B + B Xᵀ with B skew.
inline int stabilizer_dim(int n, Action a, int copies, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<Mat> points;
  for (int c = 0; c < copies; ++c) {
    Mat p = random_matrix(g, n, a == Action::Vector ? 1 : n);
    if (a == Action::Quadric) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) p[i][j] = p[j][i];
    } else if (a == Action::TwoForm) {
      for (int i = 0; i < n; ++i) {
        p[i][i] = 0;
        for (int j = 0; j < i; ++j) p[i][j] = -p[j][i];
      }
    } else if (a == Action::Adjoint) {
      mpq_class tr = 0;
      for (int i = 0; i + 1 < n; ++i) tr += p[i][i];
      p[n - 1][n - 1] = -tr;
    }
    points.push_back(p);
  }
  Mat columns;
  for (const auto& x : sl_basis(n)) {
    std::vector<Mat> images;
    for (const auto& p : points) {
      switch (a) {
        case Action::Vector: images.push_back(mul(x, p)); break;
        case Action::Quadric:
        case Action::TwoForm: {
          Mat l = mul(x, p), r = mul(p, transpose(x));
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) l[i][j] += r[i][j];
          images.push_back(l);
          break;
        }
        case Action::Adjoint: {
          Mat l = mul(x, p), r = mul(p, x);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) l[i][j] -= r[i][j];
          images.push_back(l);
          break;
        }
      }
    }
    columns.push_back(flatten(images));
  }
  return n * n - 1 - rank(columns);
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
