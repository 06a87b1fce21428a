#pragma once

#include <string>
#include <vector>

#include "torcoh/numbers.hpp"

namespace torcoh {

enum class RootKind { A1, A2, D };

// Dominant highest weight. Coordinate conventions:
//   A1: one coefficient m >= 0, the multiple of the fundamental weight.
//   A2: two coefficients (t1, t2) >= 0 in the fundamental-weight basis.
//   D:  ambient_rank coefficients k_1 .. k_r in the standard e-basis with
//       k_1 >= k_2 >= ... >= k_{r-1} >= |k_r|; ambient_rank = r >= 2.
struct HighestWeight {
  RootKind kind = RootKind::A2;
  int ambient_rank = 0;     // used for D only
  std::vector<Int> coeffs;

  std::string str() const;
};

struct RootSystemData {
  std::vector<std::vector<Rat>> positive_roots;  // ambient coordinates
  std::vector<Rat> rho;                          // half sum of positive roots
  std::vector<std::vector<Rat>> gram;            // ambient inner product matrix
};

RootSystemData root_system(RootKind kind, int ambient_rank = 0);

void validate_dominant(const HighestWeight& w);

// Ambient coordinates of the weight (A1 in R^1, A2 in the sum-zero plane of
// R^3, D_r in R^r).
std::vector<Rat> weight_vector(const HighestWeight& w);

// Cartan-involution twist on dominant weights: identity for A1, swap of the
// two fundamental coordinates for A2, sign flip of the last e-coordinate for
// D. An involution.
HighestWeight theta_twist(const HighestWeight& w);
bool is_theta_fixed(const HighestWeight& w);

HighestWeight scale_weight(const HighestWeight& w, long m);

// Weyl dimension: product over positive roots of <w+rho, a> / <rho, a>.
// Exact; fails (internal) if the product is not a positive integer.
Int weyl_dim(const RootSystemData& rs, const std::vector<Rat>& weight);
Int weyl_dim(const HighestWeight& w);

// Rank of the twisted lattice family on D_{n+1}: d * (2 * dim V_{tau(m)})^d
// where tau(m) has all e-coordinates equal to 2m (n even) or m (n odd).
// Grows like m^{d * n(n+1)/2} up to a constant.
Int rho_m_rank(int n, int d, long m);

// The weight tau(m) above.
HighestWeight twisted_diagonal_weight(int n, long m);

// Parses "A1:m", "A2:t1,t2", "D:k1,k2,...". Inverse of HighestWeight::str().
HighestWeight parse_weight(const std::string& spec);

}  // namespace torcoh
