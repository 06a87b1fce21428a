#include "torcoh/dense.hpp"

namespace torcoh {

DenseInt to_dense(const SparseIntMatrix& m) {
  DenseInt d(static_cast<std::size_t>(m.rows()), std::vector<Int>(static_cast<std::size_t>(m.cols()), Int(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d[r][c] = v;
  return d;
}

SparseIntMatrix from_dense(const DenseInt& d, int cols_hint) {
  int rows = static_cast<int>(d.size());
  int cols = rows > 0 ? static_cast<int>(d[0].size()) : (cols_hint >= 0 ? cols_hint : 0);
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(d[r].size()) != cols) fail(Errc::bad_argument, "ragged dense matrix");
    for (int c = 0; c < cols; ++c)
      if (d[r][c] != 0) m.set(r, c, d[r][c]);
  }
  return m;
}

Int bareiss_det(DenseInt a, const Caps& caps) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(Errc::bad_argument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divexact(a[i][j], prev);  // exact by the Bareiss identity
        check_entry_bits(a[i][j], caps);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rat det_rational(const DenseRat& a, const Caps& caps) {
  std::size_t n = a.size();
  DenseInt scaled(n, std::vector<Int>(n, Int(0)));
  Int denom = 1;
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) fail(Errc::bad_argument, "determinant of a non-square matrix");
    Int l = 1;
    for (const Rat& v : a[r]) l = lcm(l, v.get_den());
    for (std::size_t c = 0; c < n; ++c) {
      Rat s = a[r][c] * Rat(l);
      scaled[r][c] = s.get_num();  // denominator is 1 after scaling
    }
    denom *= l;
  }
  Rat d(bareiss_det(std::move(scaled), caps), denom);
  d.canonicalize();
  return d;
}

bool solve_dense(DenseRat a, DenseRat b, DenseRat& x) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(Errc::bad_argument, "solve needs a square system");
  if (b.size() != n) fail(Errc::bad_argument, "solve shape mismatch");
  std::size_t w = n > 0 ? b[0].size() : 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    Rat inv = 1 / a[k][k];
    for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
    for (std::size_t j = 0; j < w; ++j) b[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < w; ++j) b[i][j] -= f * b[k][j];
    }
  }
  x = std::move(b);
  return true;
}

SparseIntMatrix inverse_unimodular(const SparseIntMatrix& m, const Caps& caps) {
  if (m.rows() != m.cols()) fail(Errc::validate, "inverse of a non-square matrix");
  int n = m.rows();
  Int det = bareiss_det(to_dense(m), caps);
  if (det != 1 && det != -1)
    fail(Errc::validate, "matrix is not unimodular (det = " + det.get_str() + ")");
  DenseRat a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  DenseRat rhs(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    rhs[r][r] = 1;
    for (const auto& [c, v] : m.row(r)) a[r][c] = Rat(v);
  }
  DenseRat x;
  if (!solve_dense(std::move(a), std::move(rhs), x)) fail(Errc::internal, "unimodular matrix reported singular");
  SparseIntMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rat& v = x[r][c];
      if (v == 0) continue;
      if (v.get_den() != 1) fail(Errc::internal, "unimodular inverse came out non-integral");
      inv.set(r, c, v.get_num());
    }
  return inv;
}

}  // namespace torcoh
