#include "magnus/linalg.hpp"

namespace magnus {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = m[r][c].inv();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.empty()) {
    for (const auto& x : b)
      if (!x.is_zero()) return std::nullopt;
    return Vec{};
  }
  const size_t rows = a.size(), cols = a[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (int p : piv)
    if (p == static_cast<int>(cols)) return std::nullopt;
  Vec x(cols, Rational(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  const size_t n = a.size();
  Mat aug(n, Vec(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Rational(1);
  }
  std::vector<int> piv = rref(aug);
  if (piv.size() != n || (n > 0 && piv.back() != static_cast<int>(n) - 1)) return std::nullopt;
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
  return y;
}

} // namespace magnus
