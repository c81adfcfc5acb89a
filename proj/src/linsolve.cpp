#include "twy/matrix.hpp"

namespace twy {

std::vector<size_t> rref(QMat& a) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rat inv = 1 / a(row, col);
    for (size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Rat f = a(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> kernel(const QMat& m) {
  QMat a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(a.cols());
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rat>> joint_kernel(const std::vector<QMat>& mats, size_t cols) {
  size_t rows = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols) throw MathError("joint_kernel: column mismatch");
    rows += m.rows();
  }
  QMat stacked(rows, cols);
  size_t r0 = 0;
  for (const auto& m : mats) {
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < cols; ++j) stacked(r0 + i, j) = m(i, j);
    r0 += m.rows();
  }
  return kernel(stacked);
}

LinSolveResult poly_linear_solve(const QMat& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw MathError("poly_linear_solve: rhs size mismatch");
  QMat a(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  auto pivots = rref(a);
  LinSolveResult res;
  if (!pivots.empty() && pivots.back() == m.cols()) return res;
  res.consistent = true;
  res.particular.assign(m.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) res.particular[pivots[r]] = a(r, m.cols());
  res.kernel = kernel(m);
  return res;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw MathError("inverse of a non-square matrix");
  size_t n = m.rows();
  QMat a(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace twy
