#include "torcoh/reps.hpp"

#include <algorithm>
#include <map>

#include "torcoh/dense.hpp"
#include "torcoh/normal_forms.hpp"

namespace torcoh {

std::vector<std::vector<int>> sym_monomials(int vars, int m) {
  if (vars < 1 || m < 0) fail(Errc::bad_argument, "monomials need vars >= 1, m >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(vars), 0);
  // graded-lex: first exponent runs from m downward, recursively
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, m);
  return out;
}

SparseIntMatrix sym_power_matrix(const SparseIntMatrix& a, int m, const Caps& caps) {
  if (a.rows() != a.cols()) fail(Errc::bad_argument, "symmetric power of a non-square matrix");
  if (m < 0) fail(Errc::bad_argument, "negative symmetric power");
  const int g = a.cols();
  auto basis = sym_monomials(g, m);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  const int dim = static_cast<int>(basis.size());
  SparseIntMatrix out(dim, dim);
  using Poly = std::map<std::vector<int>, Int>;
  // Images of the variables: x_j -> column j of a.
  for (int col = 0; col < dim; ++col) {
    Poly poly;
    poly.emplace(std::vector<int>(static_cast<std::size_t>(g), 0), Int(1));
    for (int var = 0; var < g; ++var) {
      const int e = basis[static_cast<std::size_t>(col)][static_cast<std::size_t>(var)];
      for (int rep = 0; rep < e; ++rep) {
        Poly next;
        for (const auto& [mono, coeff] : poly)
          for (int k = 0; k < g; ++k) {
            Int v = a.get(k, var);
            if (v == 0) continue;
            std::vector<int> mk = mono;
            ++mk[static_cast<std::size_t>(k)];
            auto [it, fresh] = next.try_emplace(std::move(mk), Int(0));
            it->second += coeff * v;
            if (it->second == 0) next.erase(it);
          }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) {
      check_entry_bits(coeff, caps);
      out.set(index.at(mono), col, coeff);
    }
  }
  return out;
}

CoeffModule sym_power_module(const CoeffModule& base, int m, const Caps& caps) {
  base.validate(static_cast<int>(base.action.size()), base.rank <= 32, caps);
  if (base.rank < 1) fail(Errc::validate, "symmetric power needs a module of positive rank");
  CoeffModule out;
  out.rank = static_cast<int>(sym_monomials(base.rank, m).size());
  for (const auto& g : base.action) out.action.push_back(sym_power_matrix(g, m, caps));
  return out;
}

CoeffModule dual_sym_power_module(const CoeffModule& base, int m, const Caps& caps) {
  base.validate(static_cast<int>(base.action.size()), base.rank <= 32, caps);
  if (base.rank < 1) fail(Errc::validate, "symmetric power needs a module of positive rank");
  CoeffModule out;
  out.rank = static_cast<int>(sym_monomials(base.rank, m).size());
  for (const auto& g : base.action)
    out.action.push_back(sym_power_matrix(inverse_unimodular(g, caps).transpose(), m, caps));
  return out;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// v <- (A applied on tensor slot `slot`) v over index tuples base 3.
void apply_slot(const SparseIntMatrix& a, std::vector<Int>& v, int n, int slot) {
  const long stride = ipow(3, n - 1 - slot);
  const long block = stride * 3;
  std::vector<Int> tmp(3);
  for (long base = 0; base < static_cast<long>(v.size()); base += block)
    for (long off = 0; off < stride; ++off) {
      long i0 = base + off;
      for (int r = 0; r < 3; ++r) {
        tmp[static_cast<std::size_t>(r)] = 0;
        for (int c = 0; c < 3; ++c) {
          Int av = a.get(r, c);
          if (av != 0) tmp[static_cast<std::size_t>(r)] += av * v[i0 + stride * c];
        }
      }
      for (int r = 0; r < 3; ++r) v[i0 + stride * r] = tmp[static_cast<std::size_t>(r)];
    }
}

}  // namespace

SchurData schur_lattice(const std::vector<SparseIntMatrix>& generators, int lam1, int lam2,
                        const Caps& caps) {
  if (lam2 < 0 || lam1 < lam2) fail(Errc::validate, "partition needs lam1 >= lam2 >= 0");
  const int n = lam1 + lam2;
  if (n > caps.max_tensor_degree)
    fail(Errc::capacity, "tensor degree " + std::to_string(n) + " above the cap of " +
                             std::to_string(caps.max_tensor_degree));
  for (const auto& g : generators)
    if (g.rows() != 3 || g.cols() != 3)
      fail(Errc::validate, "two-row lattice construction is for 3x3 generators");
  HighestWeight hw;
  hw.kind = RootKind::A2;
  hw.coeffs = {Int(lam1 - lam2), Int(lam2)};
  const Int expect_rank = weyl_dim(hw);

  SchurData out;
  if (n == 0) {
    out.module.rank = 1;
    out.module.action.assign(generators.size(), SparseIntMatrix::identity(1));
    out.lattice = SparseIntMatrix::identity(1);
    return out;
  }

  const long tdim = ipow(3, n);
  // Young symmetrizer of the canonical two-row tableau, row-major fill:
  // row 1 holds slots 0..lam1-1, row 2 slots lam1..n-1. Column c < lam2 pairs
  // slots (c, lam1 + c).
  std::vector<std::vector<int>> row_perms;  // permutations of slots, pos -> slot
  {
    std::vector<int> p1(static_cast<std::size_t>(lam1)), p2(static_cast<std::size_t>(lam2));
    for (int i = 0; i < lam1; ++i) p1[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < lam2; ++i) p2[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> firsts, seconds;
    do firsts.push_back(p1);
    while (std::next_permutation(p1.begin(), p1.end()));
    do seconds.push_back(p2);
    while (std::next_permutation(p2.begin(), p2.end()));
    for (const auto& f : firsts)
      for (const auto& s : seconds) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < lam1; ++i) perm[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];
        for (int i = 0; i < lam2; ++i)
          perm[static_cast<std::size_t>(lam1 + i)] = lam1 + s[static_cast<std::size_t>(i)];
        row_perms.push_back(std::move(perm));
      }
  }
  std::vector<std::pair<std::vector<int>, int>> col_perms;  // (perm, sign)
  for (long mask = 0; mask < (1L << lam2); ++mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    int sgn = 1;
    for (int c = 0; c < lam2; ++c)
      if (mask & (1L << c)) {
        std::swap(perm[static_cast<std::size_t>(c)], perm[static_cast<std::size_t>(lam1 + c)]);
        sgn = -sgn;
      }
    col_perms.emplace_back(std::move(perm), sgn);
  }

  // Image columns of the symmetrizer on each basis tensor, deduplicated.
  SparseIntMatrix image(static_cast<int>(tdim), static_cast<int>(tdim));
  int ncols = 0;
  std::map<std::string, int> seen;
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (long idx = 0; idx < tdim; ++idx) {
    long rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    std::map<long, Int> colv;
    for (const auto& rp : row_perms)
      for (const auto& [cp, sgn] : col_perms) {
        // overall slot map: position k receives the digit of rp[cp[k]]
        long j = 0;
        for (int k = 0; k < n; ++k) {
          int src = rp[static_cast<std::size_t>(cp[static_cast<std::size_t>(k)])];
          j = j * 3 + digits[static_cast<std::size_t>(src)];
        }
        auto [it, fresh] = colv.try_emplace(j, Int(0));
        it->second += sgn;
        if (it->second == 0) colv.erase(it);
      }
    if (colv.empty()) continue;
    std::string key;
    for (const auto& [r, v] : colv) key += std::to_string(r) + ":" + v.get_str() + ";";
    if (seen.emplace(std::move(key), ncols).second) {
      for (const auto& [r, v] : colv) image.set(static_cast<int>(r), ncols, v);
      ++ncols;
    }
  }
  SparseIntMatrix cols(static_cast<int>(tdim), ncols);
  for (int r = 0; r < static_cast<int>(tdim); ++r)
    for (const auto& [c, v] : image.row(r))
      if (c < ncols) cols.set(r, c, v);

  // Saturate: double orthogonal complement keeps the span and fixes the
  // lattice to ker(orthᵀ), which kernel_lattice returns saturated.
  SparseIntMatrix orth = kernel_lattice(cols.transpose(), caps);
  SparseIntMatrix sat = kernel_lattice(orth.transpose(), caps);
  if (Int(sat.cols()) != expect_rank)
    fail(Errc::internal, "symmetrizer lattice rank " + std::to_string(sat.cols()) +
                             " disagrees with the weight dimension " + expect_rank.get_str());

  out.lattice = sat;
  out.tensor_degree = n;
  out.module.rank = sat.cols();
  for (const auto& g : generators) {
    SparseIntMatrix x = lattice_action(out, g, caps);
    Int det = bareiss_det(to_dense(x), caps);
    if (det != 1 && det != -1)
      fail(Errc::validate, "lattice action has det " + det.get_str() +
                               "; module generators must be unimodular");
    out.module.action.push_back(std::move(x));
  }
  return out;
}

SparseIntMatrix lattice_action(const SchurData& data, const SparseIntMatrix& a, const Caps& caps) {
  if (a.rows() != 3 || a.cols() != 3) fail(Errc::bad_argument, "lattice action needs a 3x3 matrix");
  const int n = data.tensor_degree;
  const SparseIntMatrix& sat = data.lattice;
  if (n == 0) return SparseIntMatrix::identity(sat.cols());
  const long tdim = ipow(3, n);
  SparseIntMatrix moved(static_cast<int>(tdim), sat.cols());
  for (int c = 0; c < sat.cols(); ++c) {
    std::vector<Int> v(static_cast<std::size_t>(tdim), Int(0));
    for (int r = 0; r < static_cast<int>(tdim); ++r) {
      Int x = sat.get(r, c);
      if (x != 0) v[static_cast<std::size_t>(r)] = x;
    }
    for (int slot = 0; slot < n; ++slot) apply_slot(a, v, n, slot);
    for (long r = 0; r < tdim; ++r)
      if (v[static_cast<std::size_t>(r)] != 0)
        moved.set(static_cast<int>(r), c, v[static_cast<std::size_t>(r)]);
  }
  return lattice_coordinates(sat, moved, caps);
}

CoeffModule schur_module(const std::vector<SparseIntMatrix>& generators, int lam1, int lam2,
                         const Caps& caps) {
  return schur_lattice(generators, lam1, lam2, caps).module;
}

}  // namespace torcoh
