#include "torcoh/growth.hpp"

#include <algorithm>
#include <array>

namespace torcoh {

void Geometry::validate() const {
  if (vol_x.sign() <= 0) fail(Errc::validate, "vol_x must be positive");
  if (vol_xd.sign() <= 0) fail(Errc::validate, "vol_xd must be positive");
}

Real c_pq(int p, int q, const Real& vol_xd, const Caps& caps) {
  if (p <= 0 || q <= 0 || p % 2 == 0 || q % 2 == 0)
    fail(Errc::validate, "c_pq requires positive odd p and q");
  if (p < q || p <= 1)
    fail(Errc::validate, "c_pq requires p >= q and p > 1");
  if (vol_xd.sign() <= 0) fail(Errc::validate, "vol_xd must be positive");
  const int digits = caps.precision_digits;
  const int n = (p + q) / 2 - 1;
  // p*q is odd, so (p*q - 1)/2 is exact; its parity fixes the sign.
  const long long half = (static_cast<long long>(p) * q - 1) / 2;
  Int mag = binomial(static_cast<unsigned long>(n),
                     static_cast<unsigned long>((p - 1) / 2));
  if (q != 1) mag *= 2;
  if (half % 2 != 0) mag = -mag;
  return Real::of(mag, digits) * Real::pi(digits) / vol_xd;
}

Real predict_alt_sum_so(const Geometry& geom, int p, int q, int d, long m,
                        const Caps& caps) {
  geom.validate();
  if (d < 1) fail(Errc::bad_argument, "d must be >= 1");
  if (m < 1) fail(Errc::bad_argument, "m must be >= 1");
  const int digits = caps.precision_digits;
  const Real c = c_pq(p, q, geom.vol_xd, caps);
  const int n = (p + q) / 2 - 1;
  const Int rank = rho_m_rank(n, d, m);
  return -(c * geom.vol_x * Real::of(m, digits) * Real::of(rank, digits));
}

Sl3Prediction predict_alt_sum_sl3(const Geometry& geom,
                                  const HighestWeight& weight, long m,
                                  const Caps& caps) {
  geom.validate();
  if (weight.kind != RootKind::A2)
    fail(Errc::bad_argument, "prediction requires an A2 weight");
  if (m < 1) fail(Errc::bad_argument, "m must be >= 1");
  validate_dominant(weight);
  if (is_theta_fixed(weight))
    fail(Errc::validate,
         "weight is fixed by the twist: the module family is not acyclic and "
         "no prediction applies");
  const int digits = caps.precision_digits;

  Sl3Prediction out;
  out.dimension = weyl_dim(scale_weight(weight, m));
  const bool fundamental =
      (weight.coeffs[0] == 1 && weight.coeffs[1] == 0) ||
      (weight.coeffs[0] == 0 && weight.coeffs[1] == 1);
  if (!fundamental) return out;  // constant unknown; dimension still reported
  out.constant_known = true;
  out.constant = Rat(4, 9);
  out.value = -(Real::pi(digits) * geom.vol_x / geom.vol_xd *
                Real::of(out.constant, digits) * Real::of(m, digits) *
                Real::of(out.dimension, digits));
  return out;
}

Real liminf_lower_sl3(const Geometry& geom, const Caps& caps) {
  geom.validate();
  const int digits = caps.precision_digits;
  return Real::pi(digits) * Real::of(Rat(2, 9), digits) * geom.vol_x /
         geom.vol_xd;
}

Real liminf_lower_so(const Geometry& geom, int p, int q, int d,
                     const Caps& caps) {
  geom.validate();
  if (d < 1) fail(Errc::bad_argument, "d must be >= 1");
  const int digits = caps.precision_digits;
  return c_pq(p, q, geom.vol_xd, caps).abs() * Real::of(long(d), digits) *
         geom.vol_x;
}

void GrowthSeries::validate() const {
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i].first >= points[i + 1].first)
      fail(Errc::validate, "series positions must be strictly increasing");
  }
}

FitResult fit_growth(const GrowthSeries& series, int degree,
                     const Caps& caps) {
  series.validate();
  if (degree < 1) fail(Errc::bad_argument, "fit degree must be >= 1");
  const size_t need = std::max<size_t>(3, static_cast<size_t>(degree) + 1);
  if (series.points.size() < need)
    fail(Errc::validate, "not enough points to fit");
  const int digits = caps.precision_digits;

  // Two-parameter normal equations for value ~ a*m^p + b*m^(p-1).
  Real spp(digits), spq(digits), sqq(digits), tp(digits), tq(digits),
      yy(digits);
  for (const auto& [m, y] : series.points) {
    if (m < 1) fail(Errc::validate, "sample positions must be >= 1");
    const Real mb = Real::of(m, digits);
    const Real mp = mb.pow_int(degree);
    const Real mq = mb.pow_int(degree - 1);
    spp = spp + mp * mp;
    spq = spq + mp * mq;
    sqq = sqq + mq * mq;
    tp = tp + y * mp;
    tq = tq + y * mq;
    yy = yy + y * y;
  }
  const Real det = spp * sqq - spq * spq;

  FitResult out;
  out.leading_coeff = Real(digits);
  out.second_coeff = Real(digits);
  out.residual_rel = Real(digits);
  // With >= 2 distinct positive m the two basis vectors are independent and
  // det > 0; anything else is numerically degenerate.
  out.ill_conditioned =
      det.sign() <= 0 || (det / (spp * sqq)) < Real::parse("1e-30", digits);
  if (det.sign() <= 0) return out;

  out.leading_coeff = (tp * sqq - tq * spq) / det;
  out.second_coeff = (spp * tq - spq * tp) / det;

  Real ssr(digits);
  for (const auto& [m, y] : series.points) {
    const Real mb = Real::of(m, digits);
    const Real r = y - out.leading_coeff * mb.pow_int(degree) -
                   out.second_coeff * mb.pow_int(degree - 1);
    ssr = ssr + r * r;
  }
  if (yy.sign() > 0) out.residual_rel = (ssr / yy).sqrt();
  return out;
}

Real estimate_log_slope(const GrowthSeries& series, const Caps& caps) {
  series.validate();
  if (series.points.size() < 3)
    fail(Errc::validate, "not enough points to fit");
  const int digits = caps.precision_digits;
  const Real one = Real::of(1L, digits);

  // Basis (ln m, 1, 1/m); solve the 3x3 normal equations by Cramer's rule.
  std::array<std::array<Real, 3>, 3> n{};
  std::array<Real, 3> rhs{};
  for (auto& row : n)
    for (auto& v : row) v = Real(digits);
  for (auto& v : rhs) v = Real(digits);

  for (const auto& [m, y] : series.points) {
    if (m < 1) fail(Errc::validate, "sample positions must be >= 1");
    if (y.sign() <= 0)
      fail(Errc::validate, "log-slope estimation needs positive values");
    const Real mb = Real::of(m, digits);
    const std::array<Real, 3> f = {mb.ln(), one, one / mb};
    const Real ly = y.ln();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) n[i][j] = n[i][j] + f[i] * f[j];
      rhs[i] = rhs[i] + f[i] * ly;
    }
  }

  auto det3 = [&](const std::array<std::array<Real, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const Real d = det3(n);
  if (d.is_zero())
    fail(Errc::validate, "degenerate sample positions for log-slope fit");
  auto replaced = n;
  for (int i = 0; i < 3; ++i) replaced[i][0] = rhs[i];
  return det3(replaced) / d;
}

}  // namespace torcoh
