#include "greenfn/matrix.hpp"

#include "greenfn/errors.hpp"

namespace greenfn {

RatMatrix identity_matrix(size_t n) {
  RatMatrix m(n, std::vector<RatFunc>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<RatFunc>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), std::vector<RatFunc>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMatrix invert(const RatMatrix& a) {
  const size_t n = a.size();
  RatMatrix m = a, inv = identity_matrix(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvariantError("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const RatFunc p = m[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= p;
      inv[col][j] *= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RatFunc f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<RatFunc> solve_left(const RatMatrix& a, const std::vector<RatFunc>& b) {
  return multiply(RatMatrix{b}, invert(a))[0];
}

RatMatrix q_power_diagonal(const std::vector<int>& exponents) {
  RatMatrix d(exponents.size(), std::vector<RatFunc>(exponents.size()));
  for (size_t i = 0; i < exponents.size(); ++i) d[i][i] = RatFunc(1).shift(exponents[i]);
  return d;
}

}  // namespace greenfn
