#pragma once

// Brute-force reference implementations the test suite audits the library
// against. Deliberately dense, quadratic-or-worse, and written from first
// principles: they must not share a code path with the routines they check.

#include <cstddef>
#include <functional>
#include <vector>

#include "torcoh/dense.hpp"
#include "torcoh/numbers.hpp"
#include "torcoh/rng.hpp"
#include "torcoh/sparse_matrix.hpp"

namespace oracle {

using torcoh::DenseInt;
using torcoh::DenseRat;
using torcoh::Int;
using torcoh::Rat;
using torcoh::Rng;
using torcoh::SparseIntMatrix;

// Textbook dense diagonalization: park a nonzero at the pivot, clear its row
// and column by Euclid steps, then force the pivot to divide the whole
// remaining block before moving on. Returns the nonzero diagonal, positive.
inline std::vector<Int> snf_dense(DenseInt a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> divisors;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;  // block is zero; done
    std::swap(a[t], a[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
    while (true) {
      bool touched = true;
      while (touched) {
        touched = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          while (a[i][t] != 0) {
            Int q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) {
              std::swap(a[t], a[i]);  // Euclid: remainder becomes the pivot
              touched = true;
            }
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          while (a[t][j] != 0) {
            Int q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) {
              for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
              touched = true;
            }
          }
        }
      }
      // Divisibility repair: fold an offending row into the pivot row and
      // re-clear. Strictly shrinks the pivot, so this terminates.
      std::size_t bi = rows;
      for (std::size_t i = t + 1; i < rows && bi == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bi = i;
            break;
          }
      if (bi == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bi][j];
    }
    divisors.push_back(torcoh::abs(a[t][t]));
  }
  return divisors;
}

// Cofactor expansion along the first row. Exponential; keep n small.
template <typename T>
inline T det_cofactor(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  T total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<T>> sub(n - 1, std::vector<T>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) sub[i - 1][jj++] = a[i][j];
    }
    T term = a[0][c] * det_cofactor(sub);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Divisor chain via minor gcds: with g_k = gcd of all k x k minors (g_0 = 1),
// the k-th divisor is g_k / g_{k-1} for as long as g_k != 0.
inline std::vector<Int> divisors_from_minors(const DenseInt& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  const int bound = rows < cols ? rows : cols;
  std::vector<Int> divisors;
  Int prev(1);
  for (int k = 1; k <= bound; ++k) {
    Int g(0);
    for_each_subset(rows, k, [&](const std::vector<int>& ri) {
      for_each_subset(cols, k, [&](const std::vector<int>& ci) {
        DenseInt sub(static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(ri[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(ci[static_cast<std::size_t>(j)])];
        g = torcoh::gcd(g, det_cofactor(sub));
      });
    });
    if (g == 0) break;
    divisors.push_back(torcoh::divexact(g, prev));
    prev = g;
  }
  return divisors;
}

// Rank by plain fraction-free elimination on a dense rational copy.
inline int rank_dense(const DenseInt& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  DenseRat m(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[row], m[p]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// --- seeded generators for property tests -------------------------------

inline SparseIntMatrix random_matrix(Rng& rng, int rows, int cols, long bound,
                                     int fill_percent = 70) {
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.below(100) < static_cast<std::uint64_t>(fill_percent))
        m.set(r, c, Int(static_cast<long>(rng.range(-bound, bound))));
  return m;
}

// Product of elementary operations: transvections with small multipliers,
// swaps, and sign flips. |det| = 1 by construction.
inline SparseIntMatrix random_unimodular(Rng& rng, int n, int steps = 12) {
  DenseInt a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  if (n >= 2) {
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      std::size_t j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      if (i == j) {
        for (auto& v : a[i]) v = -v;
        continue;
      }
      switch (rng.below(3)) {
        case 0: {
          Int c(static_cast<long>(rng.nonzero(2)));
          for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) a[i][k] += c * a[j][k];
          break;
        }
        case 1:
          std::swap(a[i], a[j]);
          break;
        default:
          for (auto& v : a[i]) v = -v;
          break;
      }
    }
  }
  return torcoh::from_dense(a, n);
}

}  // namespace oracle
