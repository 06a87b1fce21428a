#pragma once

#include <vector>

#include "torcoh/sparse_matrix.hpp"

namespace torcoh {

struct SnfResult {
  std::vector<Int> divisors;  // positive, each divides the next
  int rank = 0;               // == divisors.size()
  int rows = 0;
  int cols = 0;
};

enum class SnfStrategy {
  fraction_free,  // all-integer unimodular elimination (default)
  modular,        // triangular core, then reduction modulo its determinant
};

// Invariant divisor chain of an integer matrix. Both strategies return
// identical results; `modular` trades gcd work for arithmetic bounded by the
// determinant of a full-rank core and wins on dense-ish inputs with large
// entries.
SnfResult snf(const SparseIntMatrix& a, SnfStrategy strategy = SnfStrategy::fraction_free,
              const Caps& caps = default_caps());

// Rank over Q. Row contents are stripped during elimination (legal here,
// unlike in the unimodular routines above).
int rational_rank(const SparseIntMatrix& a, const Caps& caps = default_caps());

// Canonical row Hermite form: zero rows dropped, pivots positive, entries
// above each pivot reduced into [0, pivot). Rows come out in pivot-column
// order. Row operations are unimodular over Z.
SparseIntMatrix hermite_rows(const SparseIntMatrix& a, const Caps& caps = default_caps());

// Basis of the saturated kernel lattice ker(a) ∩ Z^cols, returned as the
// columns of a cols x k matrix. Saturated means Z^cols / (lattice) is torsion
// free, so any integer vector of the kernel is an integer combination of the
// basis. Computed from the row Hermite form of [aᵀ | I]; deterministic.
// The columns form a staircase: the first nonzero row of column j is its
// pivot, pivots are strictly increasing, and each pivot row vanishes on all
// later columns.
SparseIntMatrix kernel_lattice(const SparseIntMatrix& a, const Caps& caps = default_caps());

// Integral coordinates X with k * x = b, column by column: k must be a
// kernel_lattice-style staircase basis. Fails (validate) when some column of
// b lies outside the spanned lattice, (internal) when a rational solution
// exists but is not integral — impossible for a saturated basis.
SparseIntMatrix lattice_coordinates(const SparseIntMatrix& k, const SparseIntMatrix& b,
                                    const Caps& caps = default_caps());

}  // namespace torcoh
