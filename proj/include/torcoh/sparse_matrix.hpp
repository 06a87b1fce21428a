#pragma once

#include <map>
#include <string>
#include <vector>

#include "torcoh/numbers.hpp"

namespace torcoh {

// Sparse integer matrix, row-major map storage. Invariant: no stored value is
// zero. Shapes with zero rows or columns are legal and behave like the empty
// map of the corresponding shape.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols);

  int rows() const { return nrows_; }
  int cols() const { return ncols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const std::map<int, Int>& row(int r) const { return rows_[r]; }
  Int get(int r, int c) const;
  void set(int r, int c, const Int& v);   // v == 0 erases
  void add_to(int r, int c, const Int& v);

  SparseIntMatrix transpose() const;
  SparseIntMatrix operator*(const SparseIntMatrix& o) const;
  SparseIntMatrix operator+(const SparseIntMatrix& o) const;
  SparseIntMatrix scaled(const Int& s) const;
  bool operator==(const SparseIntMatrix& o) const;

  // *this += s * b placed with top-left corner at (r0, c0).
  void add_block(int r0, int c0, const SparseIntMatrix& b, const Int& s = 1);
  SparseIntMatrix submatrix_rows(const std::vector<int>& which) const;

  static SparseIntMatrix identity(int n);
  static SparseIntMatrix zero(int rows, int cols) { return SparseIntMatrix(rows, cols); }

  // Plain-text exchange format:
  //   line 1: "<rows> <cols> <nnz>"
  //   then nnz lines "<row> <col> <value>", zero-based, sorted by (row, col).
  // '#' starts a comment; blank lines are ignored. Writing always emits the
  // sorted form, so serialize/parse round-trips byte-identically.
  std::string to_exchange_text() const;
  static SparseIntMatrix from_exchange_text(const std::string& text);

 private:
  void check_index(int r, int c) const;
  int nrows_ = 0;
  int ncols_ = 0;
  std::vector<std::map<int, Int>> rows_;
};

}  // namespace torcoh
