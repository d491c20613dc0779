#include "saff/sl.hpp"

#include <stdexcept>

namespace saff::sl {

int dim(int n) { return n * n - 1; }

int index_of_e(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("E_ij index");
  return i * (n - 1) + (j < i ? j : j - 1);
}

int index_of_h(int n, int i) {
  if (i < 0 || i >= n - 1) throw std::out_of_range("H_i index");
  return n * (n - 1) + i;
}

std::vector<std::vector<int>> matrix(int n, int a) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  const int off = n * (n - 1);
  if (a < off) {
    const int i = a / (n - 1);
    int j = a % (n - 1);
    if (j >= i) ++j;
    m[i][j] = 1;
  } else {
    const int i = a - off;
    m[i][i] = 1;
    m[i + 1][i + 1] = -1;
  }
  return m;
}

std::vector<Rational> coordinates(const std::vector<std::vector<Rational>>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Rational> c(dim(n), 0);
  Rational trace = 0;
  for (int i = 0; i < n; ++i) {
    trace += x[i][i];
    for (int j = 0; j < n; ++j) {
      if (i != j) c[index_of_e(n, i, j)] = x[i][j];
    }
  }
  if (trace != 0) throw std::invalid_argument("matrix is not traceless");
  // diag(d) = Σ h_i (e_i - e_{i+1}) with h_i = d_0 + ... + d_i.
  Rational running = 0;
  for (int i = 0; i + 1 < n; ++i) {
    running += x[i][i];
    c[index_of_h(n, i)] = running;
  }
  return c;
}

std::vector<Rational> bracket(int n, int a, int b) {
  const auto x = matrix(n, a);
  const auto y = matrix(n, b);
  std::vector<std::vector<Rational>> z(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x[i][k] * y[k][j] - y[i][k] * x[k][j];
      z[i][j] = s;
    }
  }
  return coordinates(z);
}

std::vector<int> weight_shift(int n, int a) {
  std::vector<int> s(n, 0);
  const int off = n * (n - 1);
  if (a < off) {
    const int i = a / (n - 1);
    int j = a % (n - 1);
    if (j >= i) ++j;
    s[i] += 1;
    s[j] -= 1;
  }
  return s;
}

}  // namespace saff::sl
