#pragma once

#include <utility>
#include <vector>

#include "torcoh/caps.hpp"
#include "torcoh/real.hpp"
#include "torcoh/weights.hpp"

namespace torcoh {

// Volume data for a locally symmetric space and its compact dual. Both are
// user inputs: every constant downstream scales with the chosen metric
// normalization, and hard-coding one would just hide unit errors.
struct Geometry {
  Real vol_x;   // > 0
  Real vol_xd;  // > 0
  void validate() const;
};

// (-1)^{(p q - 1)/2} * 2^{eps(q)} * pi * binom(n, (p-1)/2) / vol_xd,
// with n = (p+q)/2 - 1 and eps(q) = 0 iff q == 1 else 1.
// Requires p, q odd and p >= q >= 1, p > 1.
Real c_pq(int p, int q, const Real& vol_xd, const Caps& caps = default_caps());

// Predicted leading term of sum_j (-1)^j log |H^j| for the orthogonal-group
// module family: -c_pq(p, q, vol_xd) * vol_x * m * rho_m_rank(n, d, m),
// n = (p+q)/2 - 1.
Real predict_alt_sum_so(const Geometry& geom, int p, int q, int d, long m,
                        const Caps& caps = default_caps());

// Prediction for the SL(3) family. The proportionality constant has a known
// closed form only when the base weight is one of the two fundamental
// weights (4/9); any other weight yields constant_known = false and no
// value — an explicit "unknown constant" outcome instead of a guess.
struct Sl3Prediction {
  bool constant_known = false;
  Rat constant;   // meaningful iff constant_known
  Real value;     // meaningful iff constant_known
  Int dimension;  // dimension of the weight-space module at m * weight
};

// Requires an A2 weight not fixed by the twist (a twist-fixed weight breaks
// the acyclicity hypothesis, so no prediction applies) and m >= 1.
Sl3Prediction predict_alt_sum_sl3(const Geometry& geom,
                                  const HighestWeight& weight, long m,
                                  const Caps& caps = default_caps());

// Lower-bound constants for the liminf of the (normalized) torsion sums.
// SL3: 2*pi/9 * vol_x / vol_xd, valid for the fundamental-weight families.
// SO:  |c_pq| * d * vol_x — derived from c_pq; the source gives only the
//      existence of a positive constant, not a closed form.
Real liminf_lower_sl3(const Geometry& geom, const Caps& caps = default_caps());
Real liminf_lower_so(const Geometry& geom, int p, int q, int d,
                     const Caps& caps = default_caps());

// A sampled series (m, value) with m strictly increasing. model_degree is a
// hint carried in file formats; fitting always takes the degree explicitly.
struct GrowthSeries {
  std::vector<std::pair<long, Real>> points;
  int model_degree = -1;
  void validate() const;
};

struct FitResult {
  Real leading_coeff;  // a in value ~ a*m^p + b*m^(p-1)
  Real second_coeff;   // b
  Real residual_rel;   // ||y - fit|| / ||y||, 0 when ||y|| = 0
  bool ill_conditioned = false;
};

// Least-squares fit of value ~ a*m^p + b*m^(p-1) over the sample points.
// Needs degree >= 1 and at least max(3, degree + 1) points, all at m >= 1.
// A degenerate normal system is flagged, not guessed around.
FitResult fit_growth(const GrowthSeries& series, int degree,
                     const Caps& caps = default_caps());

// Estimates the growth exponent k of a positive, roughly-polynomial series
// by least squares on ln(value) = k*ln(m) + beta + gamma/m. The 1/m term
// absorbs the leading finite-size correction, so moderate m already land
// near the true degree. All values must be positive.
Real estimate_log_slope(const GrowthSeries& series,
                        const Caps& caps = default_caps());

}  // namespace torcoh
