#include "tropalg/linalg.hpp"

#include <utility>

namespace tropalg::linalg {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a);
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<Vector> nullspace(Matrix a, std::size_t cols) {
  std::vector<Vector> basis;
  if (a.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      Vector e(cols, Rational(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tropalg::linalg
