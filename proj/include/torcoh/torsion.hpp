#pragma once

#include "torcoh/complexes.hpp"
#include "torcoh/real.hpp"

namespace torcoh {

struct TorsionValue {
  Rat t_squared;        // exact positive rational
  bool t_exact = false; // true when t_squared is the square of a rational
  Rat t_value;          // set when t_exact
  Real log_t;           // (1/2) log t_squared

  std::string log_t_str(int sig_digits = default_caps().precision_digits) const {
    return log_t.str(sig_digits);
  }
};

// det' — determinant of the bilinear form restricted to the column span:
// det(BᵀAB)/det(BᵀB) for B the independent-column basis of A, columns picked
// left to right (first nonzero pivot). For nonsingular A this is det(A).
Rat restricted_det(const SparseIntMatrix& a, const Caps& caps = default_caps());

// Combinatorial torsion of a rationally acyclic integer cochain complex via
// its Laplacians Δ_q = D_qᵀ D_q + D_{q-1} D_{q-1}ᵀ:
//   log t = (1/2) Σ_q (-1)^{q+1} q log det'(Δ_q),
// an exact positive rational once squared. No Smith reduction is involved.
// Fails (validate) when the complex is not exact over Q or D∘D != 0.
TorsionValue reidemeister_torsion(const CochainComplex& cc, const Caps& caps = default_caps());

struct VerifyReport {
  CohomologyResult cohomology;
  Rat alt_product;      // prod over q of |H^q| ^ (-1)^{q+1}
  TorsionValue torsion;
  bool equal = false;   // t_squared == alt_product^2, exact comparison
};

// Checks, with exact arithmetic on both sides, that the torsion of an acyclic
// complex equals the alternating product of its cohomology orders.
VerifyReport verify_torsion_equals_cohomology(const CochainComplex& cc,
                                              SnfStrategy strategy = SnfStrategy::fraction_free,
                                              const Caps& caps = default_caps());

// Seeded random rationally-acyclic complex with the given degree lengths:
// staircase core with nonzero diagonal entries bounded by entry_bound,
// conjugated by random unimodular matrices on every degree. Fails (validate)
// when the shape cannot carry an acyclic complex (some partial alternating
// sum goes negative, or the top one is nonzero).
CochainComplex random_acyclic(const std::vector<int>& shape, std::uint64_t seed,
                              long entry_bound = 9, const Caps& caps = default_caps());

}  // namespace torcoh
