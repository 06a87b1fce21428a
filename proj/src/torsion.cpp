#include "torcoh/torsion.hpp"

#include "torcoh/dense.hpp"
#include "torcoh/rng.hpp"

namespace torcoh {

Rat restricted_det(const SparseIntMatrix& a, const Caps& caps) {
  if (a.rows() != a.cols()) fail(Errc::bad_argument, "restricted determinant needs a square form");
  const int n = a.rows();
  if (n == 0) return Rat(1);
  // Column rank profile over Q, first nonzero pivot, scanning left to right.
  DenseRat work(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : a.row(r)) work[r][c] = Rat(v);
  std::vector<int> profile;
  int next_row = 0;
  for (int c = 0; c < n && next_row < n; ++c) {
    int piv = -1;
    for (int r = next_row; r < n; ++r)
      if (work[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(work[piv], work[static_cast<std::size_t>(next_row)]);
    for (int r = next_row + 1; r < n; ++r) {
      if (work[r][c] == 0) continue;
      Rat f = work[r][c] / work[static_cast<std::size_t>(next_row)][c];
      for (int j = c; j < n; ++j) work[r][j] -= f * work[static_cast<std::size_t>(next_row)][j];
    }
    profile.push_back(c);
    ++next_row;
  }
  if (profile.empty()) return Rat(1);  // zero form restricted to nothing
  const std::size_t k = profile.size();
  // Gram quotient det(BᵀAB) / det(BᵀB) on the selected columns.
  SparseIntMatrix at = a.transpose();
  SparseIntMatrix b(n, static_cast<int>(k));
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& [r, v] : at.row(profile[j])) b.set(r, static_cast<int>(j), v);
  SparseIntMatrix bt = b.transpose();
  Int num = bareiss_det(to_dense(bt * (a * b)), caps);
  Int den = bareiss_det(to_dense(bt * b), caps);
  if (den == 0) fail(Errc::internal, "independent columns produced a singular Gram matrix");
  Rat d(num, den);
  d.canonicalize();
  return d;
}

TorsionValue reidemeister_torsion(const CochainComplex& cc, const Caps& caps) {
  cc.validate(/*check_dd=*/true, caps);
  if (!is_R_acyclic(cc, caps))
    fail(Errc::validate, "complex is not exact over Q; torsion is undefined");
  const int top = cc.top_degree();
  Rat t2(1);
  Real log_t(caps.precision_digits);
  for (int q = 0; q <= top; ++q) {
    if (q == 0) continue;  // weight q = 0 contributes nothing
    SparseIntMatrix lap(cc.lengths[q], cc.lengths[q]);
    if (q < top) {
      SparseIntMatrix dt = cc.maps[q].transpose();
      lap = lap + dt * cc.maps[q];
    }
    if (q > 0) {
      SparseIntMatrix dp = cc.maps[q - 1];
      lap = lap + dp * dp.transpose();
    }
    Rat det = restricted_det(lap, caps);
    if (det <= 0) fail(Errc::internal, "Laplacian with non-positive restricted determinant");
    const long weight = (q % 2 == 0) ? -q : q;  // (-1)^{q+1} q
    Rat factor = det;
    Rat powed(1);
    for (long i = 0; i < (weight > 0 ? weight : -weight); ++i) powed *= factor;
    if (weight < 0) powed = 1 / powed;
    t2 *= powed;
    log_t = log_t + Real::of(Rat(weight, 2), caps.precision_digits) *
                        Real::of(det, caps.precision_digits).ln();
  }
  t2.canonicalize();
  TorsionValue out;
  out.t_squared = t2;
  out.log_t = log_t;
  Int rn, rd;
  if (perfect_square(t2.get_num(), rn) && perfect_square(t2.get_den(), rd)) {
    out.t_exact = true;
    out.t_value = Rat(rn, rd);
    out.t_value.canonicalize();
  }
  return out;
}

VerifyReport verify_torsion_equals_cohomology(const CochainComplex& cc, SnfStrategy strategy,
                                              const Caps& caps) {
  VerifyReport rep;
  rep.torsion = reidemeister_torsion(cc, caps);  // also validates acyclicity
  rep.cohomology = cohomology(cc, strategy, -1, caps);
  if (!rep.cohomology.all_orders_finite())
    fail(Errc::internal, "acyclic complex reported infinite cohomology");
  Rat prod(1);
  for (const auto& d : rep.cohomology.degrees) {
    Rat f(d.torsion_order);
    if (d.degree % 2 == 1)
      prod *= f;
    else
      prod /= f;
  }
  prod.canonicalize();
  rep.alt_product = prod;
  rep.equal = rep.torsion.t_squared == prod * prod;
  return rep;
}

CochainComplex random_acyclic(const std::vector<int>& shape, std::uint64_t seed, long entry_bound,
                              const Caps& caps) {
  if (shape.empty()) fail(Errc::validate, "shape needs at least one degree");
  if (entry_bound < 1) fail(Errc::bad_argument, "entry bound must be positive");
  const int top = static_cast<int>(shape.size()) - 1;
  for (int n : shape)
    if (n < 0) fail(Errc::validate, "negative shape entry");
  // s_q = rank of the q-th map; acyclicity forces the alternating recursion.
  std::vector<int> s(static_cast<std::size_t>(top) + 1, 0);
  int prev = 0;
  for (int q = 0; q <= top; ++q) {
    s[q] = shape[q] - prev;
    if (s[q] < 0)
      fail(Errc::validate, "shape cannot be acyclic: alternating partial sum dips below zero");
    prev = s[q];
  }
  if (s[top] != 0)
    fail(Errc::validate, "shape cannot be acyclic: alternating sum of lengths is nonzero");

  Rng rng(seed);
  // Random unimodular W per degree as a short product of elementary moves.
  auto random_unimodular = [&](int n) {
    DenseInt w(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) w[i][i] = 1;
    const int moves = 3 * n;
    for (int k = 0; k < moves; ++k) {
      if (n < 2) break;
      std::uint64_t what = rng.below(10);
      int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (what < 8) {
        if (i == j) continue;
        Int c(static_cast<long>(rng.nonzero(2)));
        for (int col = 0; col < n; ++col) w[i][col] += c * w[j][col];
      } else if (what == 8) {
        std::swap(w[i], w[j]);
      } else {
        for (int col = 0; col < n; ++col) w[i][col] = -w[i][col];
      }
    }
    return from_dense(w, n);
  };

  std::vector<SparseIntMatrix> w, winv;
  for (int q = 0; q <= top; ++q) {
    SparseIntMatrix m = random_unimodular(shape[q]);
    winv.push_back(inverse_unimodular(m, caps));
    w.push_back(std::move(m));
  }
  CochainComplex cc;
  cc.lengths = shape;
  for (int q = 0; q < top; ++q) {
    SparseIntMatrix core(shape[q + 1], shape[q]);
    const int offset = q > 0 ? s[q - 1] : 0;
    for (int i = 0; i < s[q]; ++i) core.set(i, offset + i, Int(static_cast<long>(rng.nonzero(entry_bound))));
    cc.maps.push_back(w[q + 1] * core * winv[q]);
  }
  cc.validate(/*check_dd=*/true, caps);
  return cc;
}

}  // namespace torcoh
