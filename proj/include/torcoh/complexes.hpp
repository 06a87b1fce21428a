#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torcoh/group_ring.hpp"
#include "torcoh/normal_forms.hpp"

namespace torcoh {

// Integer cochain complex 0 -> Z^{n_0} -> Z^{n_1} -> ... -> Z^{n_d} -> 0 with
// maps[q] : Z^{n_q} -> Z^{n_{q+1}} (so maps[q] is n_{q+1} x n_q).
struct CochainComplex {
  std::vector<int> lengths;
  std::vector<SparseIntMatrix> maps;

  int top_degree() const { return static_cast<int>(lengths.size()) - 1; }
  void validate(bool check_dd = true, const Caps& caps = default_caps()) const;
};

struct DegreeCohomology {
  int degree = 0;
  int free_rank = 0;
  std::vector<Int> elementary_divisors;  // the nontrivial ones (> 1), ascending chain
  Int torsion_order = 1;                 // product of the divisors
};

struct CohomologyResult {
  std::vector<DegreeCohomology> degrees;

  const DegreeCohomology& at(int q) const { return degrees.at(static_cast<std::size_t>(q)); }
  bool all_orders_finite() const;
};

// Specializes a group-ring complex through an integral module: a group-ring
// entry sum_g a_g * g becomes the block sum_g a_g * rho(g^{-1})ᵀ, and
// boundary q turns into the cochain map D_q with block (i, j) taken from
// boundary entry (j, i). With boundaries composing to zero on the left-module
// side, the blocks compose to zero as cochain maps; check_dd verifies that on
// the specialized matrices and fails (validate) on violation.
CochainComplex specialize(const GroupRingComplex& complex, const CoeffModule& module,
                          bool check_dd = true, const Caps& caps = default_caps());

SparseIntMatrix evaluate_word(const CoeffModule& module, const Word& w,
                              const Caps& caps = default_caps());

// Cohomology of an integer cochain complex. Torsion is computed from a
// saturated kernel lattice: in degree q the columns of the incoming map are
// rewritten in kernel coordinates (an exact integral solve) and the divisor
// chain of that coordinate matrix is the torsion of H^q. The boundary matrix
// itself never goes through a Smith reduction. max_degree < 0 means all
// degrees; a cutoff skips the top of a truncated resolution, where the
// quotient is not meaningful anyway.
CohomologyResult cohomology(const CochainComplex& cc,
                            SnfStrategy strategy = SnfStrategy::fraction_free,
                            int max_degree = -1, const Caps& caps = default_caps());

CohomologyResult cohomology(const GroupRingComplex& complex, const CoeffModule& module,
                            bool check_dd = true, SnfStrategy strategy = SnfStrategy::fraction_free,
                            int max_degree = -1, const Caps& caps = default_caps());

// True when the complex is exact over Q in every degree (all rational
// cohomology vanishes).
bool is_R_acyclic(const CochainComplex& cc, const Caps& caps = default_caps());

// Alternating sum of free ranks equals the alternating sum of lengths.
Int euler_characteristic(const CohomologyResult& r);

// --- model complexes ---------------------------------------------------

// Cyclic group of order p presented by one generator t, resolution of length
// 3 with boundaries t-1, norm, t^q - 1 (gcd(p, q) == 1), all ranks 1. With the
// module below this is the cellular complex of the (2,q)-twisted lens space
// with fundamental group Z/p.
GroupRingComplex lens_complex(long p, long q);

// Rank p-1 module where t acts by the companion matrix of
// 1 + t + ... + t^{p-1}; the norm element acts by zero on it.
CoeffModule lens_module(long p);

// Length-capped periodic resolution of Z/p: ranks all 1, boundaries
// alternating t-1, norm, t-1, norm, ...
GroupRingComplex periodic_complex(long p, int length);

// --- finite groups and the bar resolution ------------------------------

struct GroupPresentationData {
  std::vector<std::string> generator_names;          // optional
  std::vector<SparseIntMatrix> generator_matrices;   // faithful integral matrices
};

struct FiniteGroupTable {
  int order = 0;
  std::vector<std::vector<int>> mul;  // element ids, id 0 = identity
  std::vector<int> inv;
  std::vector<Word> element_words;    // words over the original generators
};

// Enumerates the group generated by the given matrices by breadth-first
// closure; fails (capacity) beyond caps.max_group_order elements.
FiniteGroupTable enumerate_group(const GroupPresentationData& pres,
                                 const Caps& caps = default_caps());

// Normalized bar resolution of the finite group, truncated at the given
// length (capped by caps.max_bar_length). Degree q has one cell per tuple of
// nontrivial elements, so rank (order-1)^q; the generator alphabet of the
// returned complex is the order-1 nontrivial elements themselves.
GroupRingComplex bar_complex(const FiniteGroupTable& table, int length,
                             const Caps& caps = default_caps());

// Transports a module over the original presentation generators to the
// element alphabet of bar_complex by evaluating element words.
CoeffModule module_on_elements(const FiniteGroupTable& table, const CoeffModule& base,
                               const Caps& caps = default_caps());

}  // namespace torcoh
