#include "torcoh/normal_forms.hpp"

#include <algorithm>
#include <set>

#include "torcoh/dense.hpp"

namespace torcoh {
namespace {

// Elimination workspace: row maps plus a per-column index of occupied rows,
// so both row and column operations stay proportional to actual fill.
struct Elim {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::map<int, Int>> rows;
  std::vector<std::set<int>> col_rows;
  const Caps* caps = nullptr;

  Elim(int nr, int nc, const Caps& c) : nrows(nr), ncols(nc), caps(&c) {
    rows.resize(static_cast<std::size_t>(nr));
    col_rows.resize(static_cast<std::size_t>(nc));
  }

  static Elim from(const SparseIntMatrix& m, const Caps& caps) {
    Elim e(m.rows(), m.cols(), caps);
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) {
        e.rows[r].emplace(c, v);
        e.col_rows[c].insert(r);
      }
    return e;
  }

  const Int* get(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? nullptr : &it->second;
  }

  void set(int r, int c, const Int& v) {
    if (v == 0) {
      rows[r].erase(c);
      col_rows[c].erase(r);
    } else {
      check_entry_bits(v, *caps);
      rows[r][c] = v;
      col_rows[c].insert(r);
    }
  }

  // row[dst] += k * row[src]
  void row_addmul(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (const auto& [c, v] : rows[src]) {
      auto [it, fresh] = rows[dst].try_emplace(c, Int(0));
      it->second += k * v;
      if (it->second == 0) {
        rows[dst].erase(it);
        col_rows[c].erase(dst);
      } else {
        check_entry_bits(it->second, *caps);
        if (fresh) col_rows[c].insert(dst);
      }
    }
  }

  // (row[r1], row[r2]) <- (a*row[r1] + b*row[r2], c*row[r1] + d*row[r2]);
  // caller guarantees a*d - b*c == ±1.
  void row_combine(int r1, int r2, const Int& a, const Int& b, const Int& c, const Int& d) {
    std::map<int, Int> n1, n2;
    auto accum = [](std::map<int, Int>& m, int col, Int v) {
      if (v == 0) return;
      auto [it, fresh] = m.try_emplace(col, std::move(v));
      if (!fresh) {
        it->second += v;
        if (it->second == 0) m.erase(it);
      }
    };
    for (const auto& [col, v] : rows[r1]) {
      accum(n1, col, a * v);
      accum(n2, col, c * v);
    }
    for (const auto& [col, v] : rows[r2]) {
      accum(n1, col, b * v);
      accum(n2, col, d * v);
    }
    replace_row(r1, std::move(n1));
    replace_row(r2, std::move(n2));
  }

  void replace_row(int r, std::map<int, Int>&& content) {
    for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
    rows[r] = std::move(content);
    for (const auto& [c, v] : rows[r]) {
      check_entry_bits(v, *caps);
      col_rows[c].insert(r);
    }
  }

  void row_swap(int r1, int r2) {
    if (r1 == r2) return;
    // Detach both rows from the column index before their contents move;
    // replace_row can't do it after a move has already emptied the source.
    for (const auto& [c, v] : rows[r1]) col_rows[c].erase(r1);
    for (const auto& [c, v] : rows[r2]) col_rows[c].erase(r2);
    std::swap(rows[r1], rows[r2]);
    for (const auto& [c, v] : rows[r1]) col_rows[c].insert(r1);
    for (const auto& [c, v] : rows[r2]) col_rows[c].insert(r2);
  }

  void row_negate(int r) {
    for (auto& [c, v] : rows[r]) v = -v;
  }

  // col[dst] += k * col[src]
  void col_addmul(int dst, int src, const Int& k) {
    if (k == 0) return;
    std::vector<int> src_rows(col_rows[src].begin(), col_rows[src].end());
    for (int r : src_rows) {
      const auto sit = rows[r].find(src);
      if (sit == rows[r].end()) continue;  // index must never be stale; stay safe
      Int v = k * sit->second;
      auto [it, fresh] = rows[r].try_emplace(dst, Int(0));
      it->second += v;
      if (it->second == 0) {
        rows[r].erase(it);
        col_rows[dst].erase(r);
      } else {
        check_entry_bits(it->second, *caps);
        if (fresh) col_rows[dst].insert(r);
      }
    }
  }

  void col_combine(int c1, int c2, const Int& a, const Int& b, const Int& c, const Int& d) {
    std::set<int> touched = col_rows[c1];
    touched.insert(col_rows[c2].begin(), col_rows[c2].end());
    for (int r : touched) {
      const Int* p1 = get(r, c1);
      const Int* p2 = get(r, c2);
      Int v1 = p1 ? *p1 : Int(0);
      Int v2 = p2 ? *p2 : Int(0);
      set(r, c1, a * v1 + b * v2);
      set(r, c2, c * v1 + d * v2);
    }
  }

  int row_weight(int r, const std::set<int>& active_cols) const {
    int n = 0;
    for (const auto& [c, v] : rows[r])
      if (active_cols.count(c)) ++n;
    return n;
  }

  SparseIntMatrix to_matrix() const {
    SparseIntMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    return m;
  }
};

// Row Hermite elimination over the column window [col_begin, col_end), rows
// starting at row_begin. Pivot rows are swapped up to positions row_begin,
// row_begin+1, ...; returns the pivot (row, column) list in order. When
// strip_content is set, processed rows are divided by their content after
// each update round — that destroys the Hermite property but preserves rank.
std::vector<std::pair<int, int>> hermite_window(Elim& e, int col_begin, int col_end, int row_begin,
                                                bool strip_content = false) {
  std::vector<std::pair<int, int>> pivots;
  int next = row_begin;
  auto strip = [&](int r) {
    if (!strip_content || e.rows[r].empty()) return;
    Int g = 0;
    for (const auto& [c, v] : e.rows[r]) {
      g = gcd(g, v);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& [c, v] : e.rows[r]) v = divexact(v, g);
  };
  for (int c = col_begin; c < col_end && next < e.nrows; ++c) {
    // Reduce the active rows of this column against each other until one
    // survivor remains; floor-division remainders shrink strictly, so this
    // terminates.
    int pr = -1;
    while (true) {
      std::vector<int> act;
      for (int r : e.col_rows[c])
        if (r >= next) act.push_back(r);
      if (act.empty()) break;
      // Smallest |value| (ties: lowest row) so every other quotient is
      // nonzero and the reduction makes progress.
      std::size_t best = 0;
      for (std::size_t i = 1; i < act.size(); ++i)
        if (mpz_cmpabs(e.get(act[i], c)->get_mpz_t(), e.get(act[best], c)->get_mpz_t()) < 0) best = i;
      int r0 = act[best];
      if (act.size() == 1) {
        pr = r0;
        break;
      }
      const Int piv = *e.get(r0, c);
      for (int r : act) {
        if (r == r0) continue;
        Int q = fdiv_q(*e.get(r, c), piv);
        e.row_addmul(r, r0, -q);
        strip(r);
      }
    }
    if (pr < 0) continue;
    e.row_swap(pr, next);
    if (*e.get(next, c) < 0) e.row_negate(next);
    const Int piv = *e.get(next, c);
    // Canonical form: entries above the pivot reduced into [0, pivot).
    std::vector<int> above;
    for (int r : e.col_rows[c])
      if (r < next) above.push_back(r);
    for (int r : above) {
      Int q = fdiv_q(*e.get(r, c), piv);
      e.row_addmul(r, next, -q);
    }
    pivots.emplace_back(next, c);
    ++next;
  }
  return pivots;
}

}  // namespace

SparseIntMatrix hermite_rows(const SparseIntMatrix& a, const Caps& caps) {
  Elim e = Elim::from(a, caps);
  auto pivots = hermite_window(e, 0, a.cols(), 0);
  SparseIntMatrix h(static_cast<int>(pivots.size()), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (const auto& [c, v] : e.rows[pivots[i].first]) h.set(static_cast<int>(i), c, v);
  return h;
}

int rational_rank(const SparseIntMatrix& a, const Caps& caps) {
  // Rank is transpose-invariant; eliminating the smaller row count is cheaper.
  const SparseIntMatrix& m = a;
  if (a.rows() > a.cols()) return rational_rank(a.transpose(), caps);
  Elim e = Elim::from(m, caps);
  return static_cast<int>(hermite_window(e, 0, m.cols(), 0, /*strip_content=*/true).size());
}

SparseIntMatrix kernel_lattice(const SparseIntMatrix& a, const Caps& caps) {
  const int p = a.rows();
  const int q = a.cols();
  // Row-Hermite [aᵀ | I_q]: rows that end with zero head-part carry a basis of
  // ker(a) ∩ Z^q in their tails. The row operations are unimodular on Z^q, so
  // the tails of the zero-head rows span the full saturated kernel lattice.
  Elim e(q, p + q, caps);
  for (int r = 0; r < p; ++r)
    for (const auto& [c, v] : a.row(r)) e.set(c, r, v);
  for (int j = 0; j < q; ++j) e.set(j, p + j, Int(1));
  auto head_pivots = hermite_window(e, 0, p, 0);
  const int rank = static_cast<int>(head_pivots.size());
  const int k = q - rank;
  // Canonicalize the tail block of the zero-head rows so the basis is unique.
  hermite_window(e, p, p + q, rank);
  SparseIntMatrix ker(q, k);
  for (int i = 0; i < k; ++i)
    for (const auto& [c, v] : e.rows[rank + i]) {
      if (c < p) fail(Errc::internal, "kernel row with nonzero head");
      ker.set(c - p, i, v);
    }
  return ker;
}

SparseIntMatrix lattice_coordinates(const SparseIntMatrix& k, const SparseIntMatrix& b,
                                    const Caps& caps) {
  if (k.rows() != b.rows()) fail(Errc::bad_argument, "lattice_coordinates shape mismatch");
  const int dim = k.cols();
  // Staircase data: pivot row of each column (its first nonzero entry).
  std::vector<int> pivot_row(static_cast<std::size_t>(dim), -1);
  std::vector<std::vector<int>> hits(static_cast<std::size_t>(dim));  // col -> pivot rows meeting it
  {
    std::vector<int> col_of_pivot_row(static_cast<std::size_t>(k.rows()), -1);
    for (int r = 0; r < k.rows(); ++r)
      for (const auto& [c, v] : k.row(r))
        if (pivot_row[c] < 0) pivot_row[c] = r;
    for (int j = 0; j < dim; ++j) {
      if (pivot_row[j] < 0) fail(Errc::bad_argument, "lattice basis has a zero column");
      if (j > 0 && pivot_row[j] <= pivot_row[j - 1])
        fail(Errc::bad_argument, "lattice basis is not in staircase form");
      col_of_pivot_row[pivot_row[j]] = j;
    }
    for (int j = 0; j < dim; ++j)
      for (const auto& [c, v] : k.row(pivot_row[j]))
        if (c != j) hits[c].push_back(j);
  }

  const SparseIntMatrix bt = b.transpose();
  SparseIntMatrix x(dim, b.cols());
  std::vector<int> row_to_col(static_cast<std::size_t>(k.rows()), -1);
  for (int j = 0; j < dim; ++j) row_to_col[pivot_row[j]] = j;
  for (int col = 0; col < b.cols(); ++col) {
    const auto& bcol = bt.row(col);
    std::map<int, Int> xs;  // column-of-k index -> coordinate
    std::set<int> pending;  // staircase steps that might produce a nonzero
    for (const auto& [r, v] : bcol)
      if (row_to_col[r] >= 0) pending.insert(row_to_col[r]);
    while (!pending.empty()) {
      int j = *pending.begin();
      pending.erase(pending.begin());
      const auto& krow = k.row(pivot_row[j]);
      Int acc = 0;
      if (auto it = bcol.find(pivot_row[j]); it != bcol.end()) acc = it->second;
      for (const auto& [jj, coeff] : xs) {
        if (jj >= j) break;
        if (auto it = krow.find(jj); it != krow.end()) acc -= it->second * coeff;
      }
      if (acc == 0) continue;
      const Int d = krow.at(j);
      if (!divisible(acc, d))
        fail(Errc::internal, "lattice coordinates came out non-integral; basis is not saturated");
      Int q = divexact(acc, d);
      check_entry_bits(q, caps);
      xs.emplace(j, std::move(q));
      for (int jj : hits[j])
        if (jj > j) pending.insert(jj);
    }
    for (const auto& [j, v] : xs) x.set(j, col, v);
  }
  if (!(k * x == b))
    fail(Errc::validate, "columns do not lie in the lattice spanned by the basis");
  return x;
}

namespace {

// Divisor chain cleanup: enforce d1 | d2 | ... by gcd/lcm exchanges. The main
// algorithms already guarantee the chain; this is cheap insurance that also
// canonicalizes any stray unit signs.
void normalize_chain(std::vector<Int>& d) {
  for (auto& v : d) v = abs(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (divisible(d[i + 1], d[i])) continue;
      Int g = gcd(d[i], d[i + 1]);
      Int l = divexact(d[i] * d[i + 1], g);
      d[i] = g;
      d[i + 1] = l;
      changed = true;
    }
  }
}

SnfResult snf_fraction_free(const SparseIntMatrix& a, const Caps& caps) {
  Elim e = Elim::from(a, caps);
  std::set<int> arows, acols;
  for (int r = 0; r < a.rows(); ++r)
    if (!e.rows[r].empty()) arows.insert(r);
  for (int c = 0; c < a.cols(); ++c)
    if (!e.col_rows[c].empty()) acols.insert(c);
  std::vector<Int> divisors;

  while (true) {
    // Pivot: minimize (bit length, Markowitz fill (r-1)(c-1), row, col).
    int pr = -1, pc = -1;
    std::size_t best_bits = 0;
    long best_fill = 0;
    std::vector<int> col_weight(static_cast<std::size_t>(a.cols()), -1);
    for (int r : arows) {
      int rw = e.row_weight(r, acols) - 1;
      for (const auto& [c, v] : e.rows[r]) {
        if (!acols.count(c)) continue;
        if (col_weight[c] < 0) {
          int cw = 0;
          for (int rr : e.col_rows[c])
            if (arows.count(rr)) ++cw;
          col_weight[c] = cw;
        }
        std::size_t bits = bit_length(v);
        long fill = static_cast<long>(rw) * (col_weight[c] - 1);
        if (pr < 0 || bits < best_bits || (bits == best_bits && fill < best_fill)) {
          pr = r;
          pc = c;
          best_bits = bits;
          best_fill = fill;
        }
      }
    }
    if (pr < 0) break;

    // Clear row and column of the pivot; adding an offending row keeps the
    // loop going until the pivot divides every remaining active entry.
    while (true) {
      bool dirty = false;
      // Column pass.
      while (true) {
        int other = -1;
        for (int r : e.col_rows[pc])
          if (r != pr && arows.count(r)) {
            other = r;
            break;
          }
        if (other < 0) break;
        dirty = true;
        const Int piv = *e.get(pr, pc);
        const Int v = *e.get(other, pc);
        if (divisible(v, piv)) {
          e.row_addmul(other, pr, -divexact(v, piv));
        } else {
          Int x, y;
          Int g = xgcd(piv, v, x, y);
          e.row_combine(pr, other, x, y, -divexact(v, g), divexact(piv, g));
        }
      }
      // Row pass (column operations).
      while (true) {
        int other = -1;
        for (const auto& [c, v] : e.rows[pr])
          if (c != pc && acols.count(c)) {
            other = c;
            break;
          }
        if (other < 0) break;
        dirty = true;
        const Int piv = *e.get(pr, pc);
        const Int v = *e.get(pr, other);
        if (divisible(v, piv)) {
          e.col_addmul(other, pc, -divexact(v, piv));
        } else {
          Int x, y;
          Int g = xgcd(piv, v, x, y);
          e.col_combine(pc, other, x, y, -divexact(v, g), divexact(piv, g));
        }
      }
      if (dirty) continue;  // the row pass may have refilled the column

      // Pivot now isolated. Divisibility sweep: fold in any row holding an
      // entry the pivot does not divide, then isolate again.
      const Int piv = *e.get(pr, pc);
      int bad_row = -1;
      for (int r : arows) {
        if (r == pr) continue;
        for (const auto& [c, v] : e.rows[r]) {
          if (!acols.count(c)) continue;
          if (!divisible(v, piv)) {
            bad_row = r;
            break;
          }
        }
        if (bad_row >= 0) break;
      }
      if (bad_row < 0) break;
      e.row_addmul(pr, bad_row, Int(1));
    }

    divisors.push_back(abs(*e.get(pr, pc)));
    arows.erase(pr);
    acols.erase(pc);
  }

  normalize_chain(divisors);
  SnfResult res;
  res.divisors = std::move(divisors);
  res.rank = static_cast<int>(res.divisors.size());
  res.rows = a.rows();
  res.cols = a.cols();
  return res;
}

// Smith form of a nonsingular triangular core, working modulo the running
// product R of the divisors not yet extracted. Entries are class
// representatives in [0, R); gcd(x mod R, R) == gcd(x, R) keeps every divisor
// computation exact while entry sizes stay bounded by R.
std::vector<Int> smith_given_modulus(DenseInt m, Int R, const Caps& caps) {
  const std::size_t n = m.size();
  std::vector<Int> div(n, Int(1));
  for (auto& row : m)
    for (auto& v : row) v = mod_floor(v, R);
  for (std::size_t i = 0; i < n; ++i) {
    if (R == 1) break;  // remaining divisors are all 1
    while (true) {
      // Isolate the corner (i, i). Full gcd combines in one direction can
      // repopulate the other mod R without the corner ever shrinking, so the
      // clearing is staged: combine only against entries the corner does NOT
      // divide (each combine replaces the corner by a strictly smaller
      // divisor, hence finitely many), then sweep the rest with plain
      // transvections, which leave the opposite line untouched.
      bool reduced = true;
      while (reduced) {
        reduced = false;
        for (std::size_t r = i + 1; r < n; ++r) {
          if (m[r][i] == 0 || divisible(m[r][i], m[i][i])) continue;
          reduced = true;
          Int x, y;
          Int g = xgcd(m[i][i], m[r][i], x, y);
          Int u = divexact(m[i][i], g), w = divexact(m[r][i], g);
          for (std::size_t c = i; c < n; ++c) {
            Int top = x * m[i][c] + y * m[r][c];
            Int bot = u * m[r][c] - w * m[i][c];
            m[i][c] = mod_floor(top, R);
            m[r][c] = mod_floor(bot, R);
          }
        }
        for (std::size_t c = i + 1; c < n; ++c) {
          if (m[i][c] == 0 || divisible(m[i][c], m[i][i])) continue;
          reduced = true;
          Int x, y;
          Int g = xgcd(m[i][i], m[i][c], x, y);
          Int u = divexact(m[i][i], g), w = divexact(m[i][c], g);
          for (std::size_t r = i; r < n; ++r) {
            Int left = x * m[r][i] + y * m[r][c];
            Int right = u * m[r][c] - w * m[r][i];
            m[r][i] = mod_floor(left, R);
            m[r][c] = mod_floor(right, R);
          }
        }
      }
      if (m[i][i] != 0) {
        for (std::size_t r = i + 1; r < n; ++r) {
          if (m[r][i] == 0) continue;
          Int q = divexact(m[r][i], m[i][i]);
          for (std::size_t c = i; c < n; ++c) m[r][c] = mod_floor(m[r][c] - q * m[i][c], R);
        }
        for (std::size_t c = i + 1; c < n; ++c) {
          if (m[i][c] == 0) continue;
          Int q = divexact(m[i][c], m[i][i]);
          for (std::size_t r = i; r < n; ++r) m[r][c] = mod_floor(m[r][c] - q * m[r][i], R);
        }
      }
      Int d = gcd(m[i][i], R);  // gcd(0, R) == R handles a vanished corner
      // Sweep: d must divide every remaining entry, else fold that row in.
      std::size_t bad_r = n;
      for (std::size_t r = i + 1; r < n && bad_r == n; ++r)
        for (std::size_t c = i + 1; c < n; ++c)
          if (!divisible(m[r][c], d)) {
            bad_r = r;
            break;
          }
      if (bad_r == n) {
        div[i] = d;
        break;
      }
      for (std::size_t c = i; c < n; ++c) m[i][c] = mod_floor(m[i][c] + m[bad_r][c], R);
    }
    R = divexact(R, div[i]);
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) m[r][c] = mod_floor(m[r][c], R);
    check_entry_bits(R, caps);
  }
  if (R != 1) fail(Errc::internal, "modular smith reduction left residue " + R.get_str());
  return div;
}

SnfResult snf_modular(const SparseIntMatrix& a, const Caps& caps) {
  // Compress to a nonsingular r x r core by two Hermite passes, then reduce
  // that core modulo |det| = product of its diagonal.
  SparseIntMatrix h = hermite_rows(a, caps);
  SparseIntMatrix core = hermite_rows(h.transpose(), caps);
  const int r = core.rows();
  SnfResult res;
  res.rows = a.rows();
  res.cols = a.cols();
  res.rank = r;
  if (r == 0) return res;
  if (core.cols() != r) fail(Errc::internal, "hermite core is not square");
  // Hermite pivots march one column per row here (full column rank), so the
  // core is upper triangular with positive diagonal.
  Int det = 1;
  for (int i = 0; i < r; ++i) {
    Int d = core.get(i, i);
    if (d <= 0) fail(Errc::internal, "hermite core has a non-positive diagonal");
    det *= d;
    check_entry_bits(det, caps);
  }
  res.divisors = smith_given_modulus(to_dense(core), det, caps);
  normalize_chain(res.divisors);
  Int prod = 1;
  for (const Int& d : res.divisors) prod *= d;
  if (prod != det) fail(Errc::internal, "divisor product disagrees with core determinant");
  return res;
}

}  // namespace

SnfResult snf(const SparseIntMatrix& a, SnfStrategy strategy, const Caps& caps) {
  return strategy == SnfStrategy::fraction_free ? snf_fraction_free(a, caps) : snf_modular(a, caps);
}

}  // namespace torcoh
