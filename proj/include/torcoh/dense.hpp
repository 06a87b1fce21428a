#pragma once

#include <vector>

#include "torcoh/sparse_matrix.hpp"

namespace torcoh {

using DenseInt = std::vector<std::vector<Int>>;
using DenseRat = std::vector<std::vector<Rat>>;

DenseInt to_dense(const SparseIntMatrix& m);
SparseIntMatrix from_dense(const DenseInt& d, int cols_hint = -1);

// Fraction-free (Bareiss) determinant of a square matrix. Deterministic:
// pivots are the first nonzero entry in each column.
Int bareiss_det(DenseInt a, const Caps& caps = default_caps());

// Determinant over Q: rows are scaled to integers by their denominator lcm,
// then Bareiss runs on the integer matrix.
Rat det_rational(const DenseRat& a, const Caps& caps = default_caps());

// Solves A X = B over Q for square nonsingular A; returns false if singular.
bool solve_dense(DenseRat a, DenseRat b, DenseRat& x);

// Inverse of a matrix with |det| == 1; fails (validate) otherwise. The result
// is integral by Cramer.
SparseIntMatrix inverse_unimodular(const SparseIntMatrix& m, const Caps& caps = default_caps());

}  // namespace torcoh
