#include <doctest.h>

#include <algorithm>
#include <vector>

#include "torcoh/complexes.hpp"
#include "torcoh/torsion.hpp"

using namespace torcoh;

namespace {

// Independent reference for the cyclic-quotient substitution: the matrix of
// multiplication by t^k on the basis (1, t, ..., t^{p-2}) of
// Z[t] / (1 + t + ... + t^{p-1}), computed by bare polynomial reduction.
SparseIntMatrix power_action(long p, long k) {
  const int n = static_cast<int>(p) - 1;
  SparseIntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    long e = (k + j) % p;
    if (e < p - 1) {
      m.add_to(static_cast<int>(e), j, 1);
    } else {
      for (int i = 0; i < n; ++i) m.add_to(i, j, -1);  // t^{p-1} = -(1+...+t^{p-2})
    }
  }
  return m;
}

// Expected cochain block of a group-ring entry sum_k c_k t^{e_k}: each term
// contributes c_k * transpose(action of t^{-e_k}).
SparseIntMatrix substituted_block(long p, const std::vector<std::pair<long, long>>& terms) {
  const int n = static_cast<int>(p) - 1;
  SparseIntMatrix out(n, n);
  for (const auto& [exp, coeff] : terms) {
    long inv = ((p - exp) % p + p) % p;
    out.add_block(0, 0, power_action(p, inv).transpose(), Int(coeff));
  }
  return out;
}

SparseIntMatrix cycle_matrix(int n) {
  SparseIntMatrix t(n, n);
  for (int i = 0; i < n; ++i) t.set((i + 1) % n, i, 1);
  return t;
}

GroupRingElement gre(const Word& w, long c) { return GroupRingElement::of(w, Int(c)); }

std::vector<Int> ints(const std::vector<long>& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

// Divisor chain of the direct sum of two groups given by divisor chains:
// diagonalize the merged multiset again. Chains of summands do not simply
// concatenate (coprime factors merge), so compare through this.
std::vector<Int> merged_chain(std::vector<Int> a, const std::vector<Int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  SparseIntMatrix d(static_cast<int>(a.size()), static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    d.set(static_cast<int>(i), static_cast<int>(i), a[i]);
  auto full = snf(d).divisors;
  std::vector<Int> out;
  for (auto& v : full)
    if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("cyclic quotient complex: shape and pinned substitution") {
  auto cx = lens_complex(5, 1);
  cx.validate();
  CHECK(cx.basis_sizes == std::vector<int>{1, 1, 1, 1});
  CHECK(cx.num_generators == 1);

  auto mod = lens_module(5);
  CHECK(mod.rank == 4);

  auto cc = specialize(cx, mod);
  REQUIRE(cc.lengths == std::vector<int>{4, 4, 4, 4});

  // Pinned: the degree-0 and degree-2 maps are S - I for
  // S = [[-1,-1,-1,-1],[1,0,0,0],[0,1,0,0],[0,0,1,0]]; the middle map is 0.
  SparseIntMatrix s(4, 4);
  for (int j = 0; j < 4; ++j) s.set(0, j, -1);
  s.set(1, 0, 1);
  s.set(2, 1, 1);
  s.set(3, 2, 1);
  auto s_minus_i = s + SparseIntMatrix::identity(4).scaled(-1);
  CHECK(cc.maps[0] == s_minus_i);
  CHECK(cc.maps[1].is_zero());
  CHECK(cc.maps[2] == s_minus_i);

  // The polynomial oracle reproduces the same blocks from scratch.
  CHECK(substituted_block(5, {{1, 1}, {0, -1}}) == s_minus_i);
  CHECK(substituted_block(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}).is_zero());
}

TEST_CASE("cyclic quotient complex: twisted top boundary") {
  auto c52 = lens_complex(5, 2);
  CHECK(c52.boundaries[2][0][0] == gre({}, -1) + gre({1, 1}, 1));

  auto c72 = lens_complex(7, 2);
  CHECK(c72.boundaries[2][0][0] == gre({}, -1) + gre({1, 1}, 1));
  auto cc = specialize(c72, lens_module(7));
  CHECK(cc.maps[2] == substituted_block(7, {{2, 1}, {0, -1}}));

  // Independent oracle for the twisted block as well.
  auto c53 = lens_complex(5, 3);
  auto cc53 = specialize(c53, lens_module(5));
  CHECK(cc53.maps[2] == substituted_block(5, {{3, 1}, {0, -1}}));
}

TEST_CASE("cyclic quotient complex: smallest case") {
  auto mod = lens_module(2);
  REQUIRE(mod.rank == 1);
  CHECK(mod.action[0].get(0, 0) == -1);

  auto r = cohomology(lens_complex(2, 1), mod);
  REQUIRE(r.degrees.size() == 4);
  std::vector<long> orders{1, 2, 1, 2};
  for (int q = 0; q < 4; ++q) {
    CHECK(r.at(q).free_rank == 0);
    CHECK(r.at(q).torsion_order == orders[static_cast<std::size_t>(q)]);
  }
}

TEST_CASE("cyclic quotient complex rejects bad parameters") {
  auto expect_validate = [](auto&& fn) {
    try {
      fn();
      FAIL_CHECK("accepted bad input");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::validate);
    }
  };
  expect_validate([] { static_cast<void>(lens_complex(6, 3)); });   // shared factor
  expect_validate([] { static_cast<void>(lens_complex(1, 1)); });   // order too small
  expect_validate([] { static_cast<void>(lens_complex(5, 0)); });   // twist range
  expect_validate([] { static_cast<void>(lens_complex(5, 7)); });   // twist range
}

TEST_CASE("substitution through the trivial module is augmentation") {
  auto cc = specialize(lens_complex(5, 1), trivial_module(1));
  REQUIRE(cc.lengths == std::vector<int>{1, 1, 1, 1});
  CHECK(cc.maps[0].is_zero());     // t - 1 sums to 0
  CHECK(cc.maps[1].get(0, 0) == 5);  // 1 + t + t^2 + t^3 + t^4 sums to 5
  CHECK(cc.maps[2].is_zero());
}

TEST_CASE("one-generator-free complex over the trivial group") {
  GroupRingComplex cx;
  cx.num_generators = 0;
  cx.basis_sizes = {1, 1};
  cx.boundaries = {{{GroupRingElement{}}}};
  cx.validate();

  auto cc = specialize(cx, trivial_module(0));
  REQUIRE(cc.lengths == std::vector<int>{1, 1});
  CHECK(cc.maps[0].rows() == 1);
  CHECK(cc.maps[0].cols() == 1);
  CHECK(cc.maps[0].is_zero());

  // A single free generator in degree 0 carries exactly one free class.
  GroupRingComplex point;
  point.num_generators = 0;
  point.basis_sizes = {1};
  auto r = cohomology(point, trivial_module(0));
  REQUIRE(r.degrees.size() == 1);
  CHECK(r.at(0).free_rank == 1);
  CHECK(r.at(0).torsion_order == 1);
  CHECK_FALSE(r.all_orders_finite());
}

TEST_CASE("pinned cohomology of the order-5 quotient") {
  for (auto strategy : {SnfStrategy::fraction_free, SnfStrategy::modular}) {
    auto r = cohomology(lens_complex(5, 1), lens_module(5), true, strategy);
    REQUIRE(r.degrees.size() == 4);
    CHECK(r.all_orders_finite());
    std::vector<long> orders{1, 5, 1, 5};
    for (int q = 0; q < 4; ++q) {
      CHECK(r.at(q).free_rank == 0);
      CHECK(r.at(q).torsion_order == orders[static_cast<std::size_t>(q)]);
    }
    CHECK(r.at(1).elementary_divisors == ints({5}));
    CHECK(r.at(3).elementary_divisors == ints({5}));
    CHECK(r.at(0).elementary_divisors.empty());
    CHECK(r.at(2).elementary_divisors.empty());
  }
}

TEST_CASE("rational acyclicity detection") {
  CHECK(is_R_acyclic(specialize(lens_complex(5, 1), lens_module(5))));
  CHECK_FALSE(is_R_acyclic(specialize(lens_complex(5, 1), trivial_module(1))));

  CochainComplex empty;
  empty.lengths = {0};
  CHECK(is_R_acyclic(empty));
}

TEST_CASE("alternating free ranks balance alternating lengths") {
  auto check_euler = [](const CochainComplex& cc) {
    auto r = cohomology(cc);
    Int alt_len = 0;
    for (std::size_t q = 0; q < cc.lengths.size(); ++q) {
      Int term(cc.lengths[q]);
      alt_len += (q % 2 == 0) ? term : -term;
    }
    CHECK(euler_characteristic(r) == alt_len);
  };
  check_euler(specialize(lens_complex(5, 1), lens_module(5)));
  check_euler(specialize(lens_complex(5, 1), trivial_module(1)));
  check_euler(specialize(lens_complex(7, 3), direct_sum(lens_module(7), trivial_module(1))));

  auto table = enumerate_group({{}, {cycle_matrix(4)}});
  check_euler(specialize(bar_complex(table, 3), module_on_elements(table, trivial_module(1))));
}

TEST_CASE("direct sums merge degreewise") {
  auto cx = lens_complex(5, 1);
  auto a = lens_module(5);
  auto b = trivial_module(1);

  auto ra = cohomology(cx, a);
  auto rb = cohomology(cx, b);
  auto rs = cohomology(cx, direct_sum(a, b));
  REQUIRE(rs.degrees.size() == ra.degrees.size());
  for (std::size_t q = 0; q < rs.degrees.size(); ++q) {
    CHECK(rs.degrees[q].free_rank == ra.degrees[q].free_rank + rb.degrees[q].free_rank);
    CHECK(rs.degrees[q].torsion_order ==
          ra.degrees[q].torsion_order * rb.degrees[q].torsion_order);
    CHECK(rs.degrees[q].elementary_divisors ==
          merged_chain(ra.degrees[q].elementary_divisors, rb.degrees[q].elementary_divisors));
  }

  // Doubling one summand: the degree-1 chain gains a second factor.
  auto rd = cohomology(cx, direct_sum(a, a));
  CHECK(rd.at(1).elementary_divisors == ints({5, 5}));
}

TEST_CASE("bar resolution: order-2 differentials are pinned") {
  auto table = enumerate_group({{}, {cycle_matrix(2)}});
  REQUIRE(table.order == 2);
  auto bar = bar_complex(table, 2);
  CHECK(bar.basis_sizes == std::vector<int>{1, 1, 1});
  CHECK(bar.boundaries[0][0][0] == gre({1}, 1) + gre({}, -1));  // t - 1
  CHECK(bar.boundaries[1][0][0] == gre({1}, 1) + gre({}, 1));   // t + 1
}

TEST_CASE("bar resolution of the one-element group") {
  SparseIntMatrix one = SparseIntMatrix::identity(1);
  auto table = enumerate_group({{}, {one}});
  REQUIRE(table.order == 1);
  auto bar = bar_complex(table, 3);
  CHECK(bar.basis_sizes == std::vector<int>{1, 0, 0, 0});
  auto r = cohomology(bar, module_on_elements(table, trivial_module(1)));
  CHECK(r.at(0).free_rank == 1);
  for (int q = 1; q <= 2; ++q) {
    CHECK(r.at(q).free_rank == 0);
    CHECK(r.at(q).torsion_order == 1);
  }
}

TEST_CASE("bar and periodic resolutions agree: integral coefficients") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto table = enumerate_group({{}, {cycle_matrix(n)}});
    REQUIRE(table.order == n);
    auto bar_r = cohomology(bar_complex(table, 4), module_on_elements(table, trivial_module(1)),
                            true, SnfStrategy::fraction_free, 3);
    auto per_r = cohomology(periodic_complex(n, 4), trivial_module(1), true,
                            SnfStrategy::fraction_free, 3);
    REQUIRE(bar_r.degrees.size() == 4);
    REQUIRE(per_r.degrees.size() == 4);
    for (int q = 0; q <= 3; ++q) {
      CHECK(bar_r.at(q).free_rank == per_r.at(q).free_rank);
      CHECK(bar_r.at(q).elementary_divisors == per_r.at(q).elementary_divisors);
    }
    // Classical values: one free class in degree 0, order n in degree 2.
    CHECK(per_r.at(0).free_rank == 1);
    CHECK(per_r.at(1).torsion_order == 1);
    CHECK(per_r.at(2).torsion_order == n);
    CHECK(per_r.at(3).torsion_order == 1);
  }
}

TEST_CASE("bar and periodic resolutions agree: twisted coefficients") {
  // Sign action of the order-2 group.
  {
    auto table = enumerate_group({{}, {cycle_matrix(2)}});
    auto sign = lens_module(2);
    auto bar_r = cohomology(bar_complex(table, 4), module_on_elements(table, sign), true,
                            SnfStrategy::fraction_free, 3);
    auto per_r = cohomology(periodic_complex(2, 4), sign, true, SnfStrategy::fraction_free, 3);
    for (int q = 0; q <= 3; ++q) {
      CHECK(bar_r.at(q).free_rank == per_r.at(q).free_rank);
      CHECK(bar_r.at(q).elementary_divisors == per_r.at(q).elementary_divisors);
    }
    CHECK(per_r.at(1).torsion_order == 2);
  }
  // Rank-2 cyclotomic action of the order-3 group.
  {
    auto zeta = lens_module(3);
    auto table = enumerate_group({{}, {zeta.action[0]}});
    REQUIRE(table.order == 3);
    auto bar_r = cohomology(bar_complex(table, 3), module_on_elements(table, zeta), true,
                            SnfStrategy::fraction_free, 2);
    auto per_r = cohomology(periodic_complex(3, 3), zeta, true, SnfStrategy::fraction_free, 2);
    for (int q = 0; q <= 2; ++q) {
      CHECK(bar_r.at(q).free_rank == per_r.at(q).free_rank);
      CHECK(bar_r.at(q).elementary_divisors == per_r.at(q).elementary_divisors);
    }
  }
  // Rank-2 rotation action of the order-6 group.
  {
    SparseIntMatrix rot(2, 2);
    rot.set(0, 1, -1);
    rot.set(1, 0, 1);
    rot.set(1, 1, 1);
    CoeffModule mod;
    mod.rank = 2;
    mod.action = {rot};
    auto table = enumerate_group({{}, {rot}});
    REQUIRE(table.order == 6);
    auto bar_r = cohomology(bar_complex(table, 3), module_on_elements(table, mod), true,
                            SnfStrategy::fraction_free, 2);
    auto per_r = cohomology(periodic_complex(6, 3), mod, true, SnfStrategy::fraction_free, 2);
    for (int q = 0; q <= 2; ++q) {
      CHECK(bar_r.at(q).free_rank == per_r.at(q).free_rank);
      CHECK(bar_r.at(q).elementary_divisors == per_r.at(q).elementary_divisors);
    }
  }
}

TEST_CASE("bar and periodic resolutions agree at the order cap") {
  auto table = enumerate_group({{}, {cycle_matrix(12)}});
  REQUIRE(table.order == 12);
  auto bar_r = cohomology(bar_complex(table, 3), module_on_elements(table, trivial_module(1)),
                          true, SnfStrategy::fraction_free, 2);
  auto per_r =
      cohomology(periodic_complex(12, 3), trivial_module(1), true, SnfStrategy::fraction_free, 2);
  for (int q = 0; q <= 2; ++q) {
    CHECK(bar_r.at(q).free_rank == per_r.at(q).free_rank);
    CHECK(bar_r.at(q).elementary_divisors == per_r.at(q).elementary_divisors);
  }
  CHECK(per_r.at(2).torsion_order == 12);
}

TEST_CASE("module transport to the element alphabet") {
  auto zeta = lens_module(3);
  auto table = enumerate_group({{}, {zeta.action[0]}});
  auto on_elems = module_on_elements(table, zeta);
  REQUIRE(on_elems.action.size() == 2);  // the two nontrivial elements
  CHECK(on_elems.action[0] == zeta.action[0]);
  CHECK(on_elems.action[1] == zeta.action[0] * zeta.action[0]);
}

TEST_CASE("group enumeration: table structure and capacity") {
  auto table = enumerate_group({{}, {cycle_matrix(3)}});
  REQUIRE(table.order == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(table.mul[0][static_cast<std::size_t>(a)] == a);
    CHECK(table.mul[static_cast<std::size_t>(a)][0] == a);
    CHECK(table.mul[static_cast<std::size_t>(a)]
                   [static_cast<std::size_t>(table.inv[static_cast<std::size_t>(a)])] == 0);
  }

  try {
    static_cast<void>(enumerate_group({{}, {cycle_matrix(13)}}));
    FAIL_CHECK("order cap did not trip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
  }
}

TEST_CASE("bar length is capped") {
  auto table = enumerate_group({{}, {cycle_matrix(2)}});
  try {
    static_cast<void>(bar_complex(table, 5));
    FAIL_CHECK("length cap did not trip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validate);
  }
}

TEST_CASE("inconsistent boundaries are rejected") {
  auto cx = lens_complex(5, 1);
  cx.boundaries[1][0][0] = gre({1}, 1);  // breaks (t-1) ∘ (boundary) = 0
  try {
    static_cast<void>(specialize(cx, lens_module(5)));
    FAIL_CHECK("composition violation was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validate);
  }
}
