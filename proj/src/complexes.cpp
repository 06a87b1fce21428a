#include "torcoh/complexes.hpp"

#include <algorithm>
#include <map>

#include "torcoh/dense.hpp"

namespace torcoh {

void CochainComplex::validate(bool check_dd, const Caps& caps) const {
  (void)caps;
  if (lengths.empty()) fail(Errc::validate, "cochain complex needs at least one degree");
  for (int n : lengths)
    if (n < 0) fail(Errc::validate, "negative cochain length");
  if (maps.size() + 1 != lengths.size())
    fail(Errc::validate, "cochain complex needs one map per adjacent degree pair");
  for (std::size_t q = 0; q < maps.size(); ++q)
    if (maps[q].rows() != lengths[q + 1] || maps[q].cols() != lengths[q])
      fail(Errc::validate, "map " + std::to_string(q) + " has shape " +
                               std::to_string(maps[q].rows()) + "x" + std::to_string(maps[q].cols()) +
                               ", want " + std::to_string(lengths[q + 1]) + "x" +
                               std::to_string(lengths[q]));
  if (check_dd)
    for (std::size_t q = 0; q + 1 < maps.size(); ++q)
      if (!(maps[q + 1] * maps[q]).is_zero())
        fail(Errc::validate, "maps " + std::to_string(q) + " and " + std::to_string(q + 1) +
                                 " do not compose to zero");
}

bool CohomologyResult::all_orders_finite() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeCohomology& d) { return d.free_rank == 0; });
}

SparseIntMatrix evaluate_word(const CoeffModule& module, const Word& w, const Caps& caps) {
  SparseIntMatrix out = SparseIntMatrix::identity(module.rank);
  std::vector<SparseIntMatrix> inv_cache(module.action.size());
  std::vector<bool> inv_ready(module.action.size(), false);
  for (int letter : reduce_word(w)) {
    std::size_t g = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
    if (g >= module.action.size())
      fail(Errc::validate, "word uses a generator the module does not define");
    if (letter > 0) {
      out = out * module.action[g];
    } else {
      if (!inv_ready[g]) {
        inv_cache[g] = inverse_unimodular(module.action[g], caps);
        inv_ready[g] = true;
      }
      out = out * inv_cache[g];
    }
  }
  return out;
}

namespace {

// phi(w) = rho(w^{-1})ᵀ — a homomorphism, so specialized boundaries inherit
// the zero-composition of the group-ring boundaries.
class PhiCache {
 public:
  PhiCache(const CoeffModule& mod, const Caps& caps) : mod_(mod), caps_(caps) {}

  const SparseIntMatrix& of(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    SparseIntMatrix m = evaluate_word(mod_, inverse_word(w), caps_).transpose();
    return cache_.emplace(w, std::move(m)).first->second;
  }

 private:
  const CoeffModule& mod_;
  const Caps& caps_;
  std::map<Word, SparseIntMatrix> cache_;
};

}  // namespace

CochainComplex specialize(const GroupRingComplex& gc, const CoeffModule& module, bool check_dd,
                          const Caps& caps) {
  gc.validate();
  // Full determinant validation is skipped for wide modules; their
  // unimodularity is enforced structurally by the constructions and any
  // violation is caught downstream by the saturation/integrality checks.
  module.validate(gc.num_generators, /*check_unimodular=*/module.rank <= 32, caps);
  PhiCache phi(module, caps);
  const int rank = module.rank;
  CochainComplex cc;
  for (int s : gc.basis_sizes) cc.lengths.push_back(s * rank);
  for (std::size_t q = 0; q < gc.boundaries.size(); ++q) {
    SparseIntMatrix d(cc.lengths[q + 1], cc.lengths[q]);
    const auto& bnd = gc.boundaries[q];
    for (int j = 0; j < gc.basis_sizes[q]; ++j)
      for (int i = 0; i < gc.basis_sizes[q + 1]; ++i)
        for (const auto& [w, coeff] : bnd[j][i].terms)
          d.add_block(i * rank, j * rank, phi.of(w), coeff);
    cc.maps.push_back(std::move(d));
  }
  cc.validate(check_dd, caps);
  return cc;
}

CohomologyResult cohomology(const CochainComplex& cc, SnfStrategy strategy, int max_degree,
                            const Caps& caps) {
  cc.validate(false, caps);
  const int top = cc.top_degree();
  const int last = (max_degree < 0 || max_degree > top) ? top : max_degree;
  CohomologyResult out;
  SparseIntMatrix prev_kernel;  // kernel basis from the previous degree
  for (int q = 0; q <= last; ++q) {
    SparseIntMatrix kernel = q < top ? kernel_lattice(cc.maps[q], caps)
                                     : SparseIntMatrix::identity(cc.lengths[q]);
    const int k = kernel.cols();
    DegreeCohomology deg;
    deg.degree = q;
    if (q == 0) {
      deg.free_rank = k;
    } else {
      // rank of the incoming map, off the previous kernel computation
      const int rank_in = cc.lengths[q - 1] - prev_kernel.cols();
      deg.free_rank = k - rank_in;
      if (deg.free_rank < 0)
        fail(Errc::validate, "incoming map has rank above the kernel dimension; D∘D != 0?");
      if (rank_in > 0) {
        SparseIntMatrix coords = q < top ? lattice_coordinates(kernel, cc.maps[q - 1], caps)
                                         : cc.maps[q - 1];
        SnfResult s = snf(coords, strategy, caps);
        if (s.rank != rank_in)
          fail(Errc::internal, "kernel-coordinate rank disagrees with the incoming map rank");
        for (const Int& d : s.divisors)
          if (d > 1) {
            deg.elementary_divisors.push_back(d);
            deg.torsion_order *= d;
          }
      }
    }
    out.degrees.push_back(std::move(deg));
    prev_kernel = std::move(kernel);
  }
  return out;
}

CohomologyResult cohomology(const GroupRingComplex& complex, const CoeffModule& module,
                            bool check_dd, SnfStrategy strategy, int max_degree, const Caps& caps) {
  return cohomology(specialize(complex, module, check_dd, caps), strategy, max_degree, caps);
}

bool is_R_acyclic(const CochainComplex& cc, const Caps& caps) {
  cc.validate(false, caps);
  const int top = cc.top_degree();
  std::vector<int> rk(static_cast<std::size_t>(top) + 1, 0);  // rk[q] = rank of maps[q]
  for (int q = 0; q < top; ++q) rk[q] = rational_rank(cc.maps[q], caps);
  for (int q = 0; q <= top; ++q) {
    const int incoming = q > 0 ? rk[q - 1] : 0;
    const int outgoing = q < top ? rk[q] : 0;
    if (cc.lengths[q] != incoming + outgoing) return false;
  }
  return true;
}

Int euler_characteristic(const CohomologyResult& r) {
  Int chi = 0;
  for (const auto& d : r.degrees) chi += (d.degree % 2 == 0) ? Int(d.free_rank) : Int(-d.free_rank);
  return chi;
}

// --- model complexes ----------------------------------------------------

namespace {

Word power_word(long e) {
  Word w;
  if (e >= 0)
    w.assign(static_cast<std::size_t>(e), 1);
  else
    w.assign(static_cast<std::size_t>(-e), -1);
  return w;
}

GroupRingElement norm_element(long p) {
  GroupRingElement n;
  for (long i = 0; i < p; ++i) n.terms.emplace_back(power_word(i), Int(1));
  n.normalize();
  return n;
}

}  // namespace

GroupRingComplex lens_complex(long p, long q) {
  if (p < 2) fail(Errc::validate, "cyclic order must be at least 2");
  if (q < 1 || q >= p) fail(Errc::validate, "twist must satisfy 1 <= q < p");
  if (gcd(Int(p), Int(q)) != 1) fail(Errc::validate, "twist must be coprime to the order");
  GroupRingComplex gc;
  gc.num_generators = 1;
  gc.generator_names = {"t"};
  gc.basis_sizes = {1, 1, 1, 1};
  GroupRingElement tm1 = GroupRingElement::generator(1) - GroupRingElement::unit();
  GroupRingElement tq1 = GroupRingElement::of(power_word(q)) - GroupRingElement::unit();
  gc.boundaries = {{{tm1}}, {{norm_element(p)}}, {{tq1}}};
  return gc;
}

CoeffModule lens_module(long p) {
  if (p < 2) fail(Errc::validate, "cyclic order must be at least 2");
  const int r = static_cast<int>(p) - 1;
  // Companion action of t on Z[t] / (1 + t + ... + t^{p-1}); the norm of the
  // cyclic group acts as zero here, which is what kills the middle boundary.
  SparseIntMatrix t(r, r);
  for (int i = 0; i + 1 < r; ++i) t.set(i + 1, i, Int(1));
  for (int i = 0; i < r; ++i) t.set(i, r - 1, Int(-1));
  CoeffModule m;
  m.rank = r;
  m.action = {std::move(t)};
  return m;
}

GroupRingComplex periodic_complex(long p, int length) {
  if (p < 2) fail(Errc::validate, "cyclic order must be at least 2");
  if (length < 1) fail(Errc::validate, "resolution length must be positive");
  GroupRingComplex gc;
  gc.num_generators = 1;
  gc.generator_names = {"t"};
  gc.basis_sizes.assign(static_cast<std::size_t>(length) + 1, 1);
  GroupRingElement tm1 = GroupRingElement::generator(1) - GroupRingElement::unit();
  GroupRingElement norm = norm_element(p);
  for (int q = 0; q < length; ++q)
    gc.boundaries.push_back({{q % 2 == 0 ? tm1 : norm}});
  return gc;
}

// --- finite groups and the bar resolution -------------------------------

FiniteGroupTable enumerate_group(const GroupPresentationData& pres, const Caps& caps) {
  const std::size_t ng = pres.generator_matrices.size();
  if (!pres.generator_names.empty() && pres.generator_names.size() != ng)
    fail(Errc::validate, "generator name count disagrees with matrix count");
  FiniteGroupTable t;
  if (ng == 0) {
    t.order = 1;
    t.mul = {{0}};
    t.inv = {0};
    t.element_words = {Word{}};
    return t;
  }
  const int n = pres.generator_matrices[0].rows();
  for (const auto& m : pres.generator_matrices) {
    if (m.rows() != n || m.cols() != n)
      fail(Errc::validate, "generator matrices must share one square shape");
    inverse_unimodular(m, caps);  // rejects non-invertible generators
  }
  std::map<std::string, int> ids;
  std::vector<SparseIntMatrix> elems;
  auto intern = [&](const SparseIntMatrix& m) -> int {
    auto key = m.to_exchange_text();
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(elems.size());
    if (id >= caps.max_group_order)
      fail(Errc::capacity, "group enumeration exceeded the order cap of " +
                               std::to_string(caps.max_group_order));
    ids.emplace(std::move(key), id);
    elems.push_back(m);
    return id;
  };
  intern(SparseIntMatrix::identity(n));
  t.element_words.push_back(Word{});
  // Breadth-first closure under right multiplication by the generators; the
  // discovery order fixes element ids deterministically.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < ng; ++g) {
      SparseIntMatrix prod = elems[head] * pres.generator_matrices[g];
      std::size_t before = elems.size();
      int id = intern(prod);
      if (static_cast<std::size_t>(id) == before) {
        Word w = t.element_words[head];
        w.push_back(static_cast<int>(g) + 1);
        t.element_words.push_back(std::move(w));
      }
    }
  }
  t.order = static_cast<int>(elems.size());
  t.mul.assign(static_cast<std::size_t>(t.order), std::vector<int>(static_cast<std::size_t>(t.order), -1));
  t.inv.assign(static_cast<std::size_t>(t.order), -1);
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b) {
      auto it = ids.find((elems[a] * elems[b]).to_exchange_text());
      if (it == ids.end()) fail(Errc::internal, "group closure is not closed under products");
      t.mul[a][b] = it->second;
      if (it->second == 0) t.inv[a] = b;
    }
  for (int a = 0; a < t.order; ++a)
    if (t.inv[a] < 0) fail(Errc::internal, "group element without inverse");
  return t;
}

namespace {

int tuple_index(const std::vector<int>& tuple, int m) {
  int idx = 0;
  for (int g : tuple) idx = idx * m + (g - 1);
  return idx;
}

}  // namespace

GroupRingComplex bar_complex(const FiniteGroupTable& table, int length, const Caps& caps) {
  const int order = table.order;
  if (order < 1 || order > caps.max_group_order)
    fail(Errc::validate, "group order outside [1, " + std::to_string(caps.max_group_order) + "]");
  if (length < 1 || length > caps.max_bar_length)
    fail(Errc::validate, "bar length outside [1, " + std::to_string(caps.max_bar_length) + "]");
  const int m = order - 1;  // nontrivial elements = generator alphabet
  GroupRingComplex gc;
  gc.num_generators = m;
  gc.basis_sizes.resize(static_cast<std::size_t>(length) + 1);
  for (int q = 0; q <= length; ++q) {
    long r = 1;
    for (int i = 0; i < q; ++i) r *= m;
    gc.basis_sizes[q] = static_cast<int>(r);
  }
  gc.boundaries.resize(static_cast<std::size_t>(length));
  for (int q = 1; q <= length; ++q) {
    auto& bnd = gc.boundaries[q - 1];
    bnd.assign(static_cast<std::size_t>(gc.basis_sizes[q - 1]),
               std::vector<GroupRingElement>(static_cast<std::size_t>(gc.basis_sizes[q])));
    std::vector<int> tuple(static_cast<std::size_t>(q), 1);
    for (int col = 0; col < gc.basis_sizes[q]; ++col) {
      // Leading face keeps a group coefficient; inner faces multiply
      // neighbours (cells containing the identity are dropped); the last face
      // forgets the final entry.
      auto add = [&](int row, const Word& w, int sgn) {
        auto& el = bnd[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        el.terms.emplace_back(w, Int(sgn));
        el.normalize();
      };
      std::vector<int> face(tuple.begin() + 1, tuple.end());
      add(tuple_index(face, m), Word{tuple[0]}, 1);
      int sgn = -1;
      for (int i = 0; i + 1 < q; ++i) {
        int merged = table.mul[tuple[static_cast<std::size_t>(i)]][tuple[static_cast<std::size_t>(i + 1)]];
        if (merged != 0) {
          face.assign(tuple.begin(), tuple.end());
          face.erase(face.begin() + i);
          face[static_cast<std::size_t>(i)] = merged;
          add(tuple_index(face, m), Word{}, sgn);
        }
        sgn = -sgn;
      }
      face.assign(tuple.begin(), tuple.end() - 1);
      add(tuple_index(face, m), Word{}, sgn);
      // next tuple, odometer order matching tuple_index
      for (int i = q - 1; i >= 0; --i) {
        if (tuple[static_cast<std::size_t>(i)] < m) {
          ++tuple[static_cast<std::size_t>(i)];
          break;
        }
        tuple[static_cast<std::size_t>(i)] = 1;
      }
    }
  }
  // Construction self-check: the regular module must square the low-degree
  // boundaries to zero.
  if (length >= 2 && order >= 2) {
    CoeffModule reg;
    reg.rank = order;
    for (int g = 1; g < order; ++g) {
      SparseIntMatrix p(order, order);
      for (int x = 0; x < order; ++x) p.set(table.mul[g][x], x, Int(1));
      reg.action.push_back(std::move(p));
    }
    GroupRingComplex low;
    low.num_generators = m;
    low.basis_sizes = {gc.basis_sizes[0], gc.basis_sizes[1], gc.basis_sizes[2]};
    low.boundaries = {gc.boundaries[0], gc.boundaries[1]};
    try {
      specialize(low, reg, /*check_dd=*/true, caps);
    } catch (const Error&) {
      fail(Errc::internal, "bar resolution failed its regular-module composition check");
    }
  }
  return gc;
}

CoeffModule module_on_elements(const FiniteGroupTable& table, const CoeffModule& base,
                               const Caps& caps) {
  CoeffModule out;
  out.rank = base.rank;
  for (int g = 1; g < table.order; ++g)
    out.action.push_back(evaluate_word(base, table.element_words[static_cast<std::size_t>(g)], caps));
  return out;
}

}  // namespace torcoh
