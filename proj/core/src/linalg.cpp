#include "gpd/linalg.hpp"

#include <utility>

namespace gpd::linalg {

FieldElement determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of empty matrix");
  for (const Row& r : m) {
    if (r.size() != n) throw PreconditionError("determinant of non-square matrix");
  }
  Field f = m[0][0].field();
  FieldElement det = f.one();
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      negate = !negate;
    }
    det = det * m[col][col];
    FieldElement inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      FieldElement factor = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) {
        m[i][j] = m[i][j] - factor * m[col][j];
      }
    }
  }
  return negate ? -det : det;
}

int rref(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    FieldElement inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldElement factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = m[i][j] - factor * m[r][j];
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(Matrix m) { return rref(m); }

}  // namespace gpd::linalg
