#pragma once

#include "torcoh/group_ring.hpp"
#include "torcoh/weights.hpp"

namespace torcoh {

// Monomial exponent vectors of total degree m in `vars` variables, in graded
// lexicographic order with x_0 heaviest: for vars=2, m=2 this is
// (2,0), (1,1), (0,2) — i.e. x^2, xy, y^2. This order is part of the file and
// matrix contracts and must not change.
std::vector<std::vector<int>> sym_monomials(int vars, int m);

// Matrix of the induced action on degree-m monomials: column j holds the
// expansion of the image of basis monomial j under x_i -> sum_k a[k][i] x_k.
SparseIntMatrix sym_power_matrix(const SparseIntMatrix& a, int m,
                                 const Caps& caps = default_caps());

CoeffModule sym_power_module(const CoeffModule& base, int m, const Caps& caps = default_caps());

// Contragredient symmetric power: generator g acts by Sym^m((g^{-1})ᵀ).
CoeffModule dual_sym_power_module(const CoeffModule& base, int m,
                                  const Caps& caps = default_caps());

// Saturated image lattice of the Young symmetrizer for the two-row partition
// (lam1 >= lam2 >= 0) inside (Z^3)^{⊗N}, N = lam1 + lam2, plus the action of
// each generator expressed in lattice coordinates. The action matrices are
// integral and unimodular for any unimodular generators, and the lattice rank
// equals the Weyl dimension of the A2 weight (lam1 - lam2, lam2).
struct SchurData {
  CoeffModule module;
  SparseIntMatrix lattice;  // 3^N x rank, kernel_lattice staircase form
  int tensor_degree = 0;    // N
};

SchurData schur_lattice(const std::vector<SparseIntMatrix>& generators, int lam1, int lam2,
                        const Caps& caps = default_caps());

// Lattice coordinates of a^{⊗N} restricted to the lattice. Integral for any
// integer a because the symmetrizer commutes with the diagonal action; its
// trace evaluates the character at a.
SparseIntMatrix lattice_action(const SchurData& data, const SparseIntMatrix& a,
                               const Caps& caps = default_caps());

CoeffModule schur_module(const std::vector<SparseIntMatrix>& generators, int lam1, int lam2,
                         const Caps& caps = default_caps());

}  // namespace torcoh
