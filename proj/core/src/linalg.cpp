#include "obc/linalg.hpp"

#include <stdexcept>

namespace obc {

Mat mat_zero(int rows, int cols, long p) { return Mat(rows, Vec(cols, Fq::zero(p))); }

Mat mat_identity(int n, long p) {
  Mat m = mat_zero(n, n, p);
  for (int i = 0; i < n; ++i) m[i][i] = Fq::one(p);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  if ((int)a[0].size() != k) throw std::invalid_argument("mat_mul shape");
  long p = a[0][0].characteristic();
  Mat m = mat_zero(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (int l = 0; l < c; ++l) m[i][l] += a[i][j] * b[j][l];
    }
  return m;
}

Mat mat_pow(const Mat& a, int e, long p) {
  Mat r = mat_identity((int)a.size(), p);
  Mat base = a;
  while (e > 0) {
    if (e & 1) r = mat_mul(r, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return r;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  long p = a[0].empty() ? 0 : a[0][0].characteristic();
  Mat t = mat_zero((int)a[0].size(), (int)a.size(), p);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty() || m[0].empty()) return pivots;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (!m[i][col].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Fq inv = Fq::one(m[row][col].characteristic()) / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Fq f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(Mat m) { return (int)rref(m).size(); }

std::vector<Vec> kernel(const Mat& m, long p) {
  if (m.empty() || m[0].empty()) {
    // kernel of a map out of k^cols with no constraints is everything
    int cols = m.empty() ? 0 : (int)m[0].size();
    std::vector<Vec> basis;
    for (int j = 0; j < cols; ++j) {
      Vec v(cols, Fq::zero(p));
      v[j] = Fq::one(p);
      basis.push_back(v);
    }
    return basis;
  }
  Mat r = m;
  std::vector<int> pivots = rref(r);
  int cols = (int)m[0].size();
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = (int)i;
  std::vector<Vec> basis;
  for (int j = 0; j < cols; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    Vec v(cols, Fq::zero(p));
    v[j] = Fq::one(p);
    for (int c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -r[pivot_of_col[c]][j];
    basis.push_back(v);
  }
  return basis;
}

bool solve(const Mat& a, const Vec& b, Vec& x, long p) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  if ((int)b.size() != rows) throw std::invalid_argument("solve shape");
  Mat aug = mat_zero(rows, cols + 1, p);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == cols) return false;  // inconsistent
  x.assign(cols, Fq::zero(p));
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = (int)i;
  for (int j = 0; j < cols; ++j)
    if (pivot_of_col[j] >= 0) x[j] = aug[pivot_of_col[j]][cols];
  return true;
}

Mat express_in(const Mat& s, const Mat& x, long p) {
  int scols = s.empty() ? 0 : (int)s[0].size();
  int xcols = x.empty() ? 0 : (int)x[0].size();
  Mat r = mat_zero(scols, xcols, p);
  for (int j = 0; j < xcols; ++j) {
    Vec col((int)x.size(), Fq::zero(p));
    for (size_t i = 0; i < x.size(); ++i) col[i] = x[i][j];
    Vec sol;
    if (!solve(s, col, sol, p)) throw std::runtime_error("express_in: vector outside span");
    for (int i = 0; i < scols; ++i) r[i][j] = sol[i];
  }
  return r;
}

}  // namespace obc
