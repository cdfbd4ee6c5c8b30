#include "pathpoly/linalg.hpp"

#include <utility>

#include "pathpoly/errors.hpp"

namespace pathpoly {

std::size_t rank_exact(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::vector<IVec> m;
  m.reserve(rows.size());
  for (const QVec& r : rows) {
    if (r.size() != cols) fail(errc::internal, "ragged matrix");
    m.push_back(primitive(r));  // row scaling does not change rank
  }

  // Bareiss fraction-free elimination; prev divides exactly at every step.
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

Rref rref(std::vector<QVec> rows) {
  Rref out;
  if (rows.empty()) return out;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rat p = rows[r][col];
    for (std::size_t j = col; j < cols; ++j) rows[r][j] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<QVec> nullspace_basis(const std::vector<QVec>& rows,
                                  std::size_t cols) {
  Rref rr = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec a(cols, Rat(0));
    a[f] = 1;
    for (std::size_t r = 0; r < rr.rows.size(); ++r)
      a[rr.pivot_cols[r]] = -rr.rows[r][f];
    basis.push_back(std::move(a));
  }
  return basis;
}

std::optional<std::vector<QVec>> inverse(std::vector<QVec> square) {
  std::size_t n = square.size();
  std::vector<QVec> inv(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && square[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(square[col], square[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat p = square[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      square[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || square[i][col] == 0) continue;
      Rat f = square[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        square[i][j] -= f * square[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace pathpoly
