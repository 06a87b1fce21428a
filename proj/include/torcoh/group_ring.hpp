#pragma once

#include <vector>

#include "torcoh/sparse_matrix.hpp"

namespace torcoh {

// A word over abstract group generators: letter g >= 1 means generator g-1,
// letter -g its inverse. The empty word is the identity.
using Word = std::vector<int>;

// Free reduction only (cancel adjacent x x^-1); relations of a concrete group
// are applied later, when words are evaluated through a representation.
Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);

// Element of the integral group ring: a finite sum coeff * word. Terms are
// kept sorted by word with nonzero coefficients after normalize().
struct GroupRingElement {
  std::vector<std::pair<Word, Int>> terms;

  void normalize();
  bool is_zero() const { return terms.empty(); }
  static GroupRingElement unit();                       // 1 * identity
  static GroupRingElement generator(int g);             // 1 * g  (g >= 1)
  static GroupRingElement of(const Word& w, const Int& c = 1);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement& o) const;
};

// Finitely generated free-module complex over a group ring, given by the
// boundary matrices of a resolution:
//   C_top -> ... -> C_1 -> C_0,   boundaries[q] : C_{q+1} -> C_q
// boundaries[q] has basis_sizes[q] rows and basis_sizes[q+1] columns (entries
// act on the left of column vectors of cells).
struct GroupRingComplex {
  int num_generators = 0;
  std::vector<std::string> generator_names;        // optional, size 0 or num_generators
  std::vector<int> basis_sizes;                    // ranks of C_0 .. C_top
  std::vector<std::vector<std::vector<GroupRingElement>>> boundaries;  // [q][row][col]

  int top_degree() const { return static_cast<int>(basis_sizes.size()) - 1; }
  void validate() const;  // shapes, generator indices in words
};

// Integral representation of the same abstract generators: action[g] is an
// invertible integer matrix (|det| = 1) of size rank for generator g.
struct CoeffModule {
  int rank = 0;
  std::vector<SparseIntMatrix> action;

  void validate(int expect_generators, bool check_unimodular = true,
                const Caps& caps = default_caps()) const;
};

// Block-diagonal sum of two modules over the same generator set.
CoeffModule direct_sum(const CoeffModule& a, const CoeffModule& b);

CoeffModule trivial_module(int num_generators);

}  // namespace torcoh
