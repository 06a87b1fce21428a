#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "torcoh/dense.hpp"
#include "torcoh/normal_forms.hpp"
#include "torcoh/reps.hpp"
#include "torcoh/weights.hpp"

using namespace torcoh;

namespace {

HighestWeight a2(long t1, long t2) {
  HighestWeight w;
  w.kind = RootKind::A2;
  w.coeffs = {Int(t1), Int(t2)};
  return w;
}

HighestWeight dw(const std::vector<long>& ks) {
  HighestWeight w;
  w.kind = RootKind::D;
  w.ambient_rank = static_cast<int>(ks.size());
  for (long k : ks) w.coeffs.emplace_back(k);
  return w;
}

// Two-row semistandard tableaux in three letters, expanded monomial by
// monomial: rows weakly increase, columns strictly increase. The generating
// sum evaluated at (x1, x2, x3) is the independent character reference.
Int schur_poly_ssyt(int lam1, int lam2, const std::vector<long>& x) {
  std::vector<int> top(static_cast<std::size_t>(lam1));
  std::vector<int> bottom(static_cast<std::size_t>(lam2));
  Int total(0);
  std::function<Int(const std::vector<int>&, const std::vector<int>&)> value =
      [&](const std::vector<int>& t, const std::vector<int>& b) {
        Int v(1);
        for (int e : t) v *= Int(x[static_cast<std::size_t>(e)]);
        for (int e : b) v *= Int(x[static_cast<std::size_t>(e)]);
        return v;
      };
  std::function<void(int)> fill_bottom = [&](int j) {
    if (j == lam2) {
      total += value(top, bottom);
      return;
    }
    int lo = j > 0 ? bottom[static_cast<std::size_t>(j) - 1] : 0;
    for (int e = lo; e < 3; ++e) {
      if (e <= top[static_cast<std::size_t>(j)]) continue;  // strict in the column
      bottom[static_cast<std::size_t>(j)] = e;
      fill_bottom(j + 1);
    }
  };
  std::function<void(int)> fill_top = [&](int j) {
    if (j == lam1) {
      fill_bottom(0);
      return;
    }
    int lo = j > 0 ? top[static_cast<std::size_t>(j) - 1] : 0;
    for (int e = lo; e < 3; ++e) {
      top[static_cast<std::size_t>(j)] = e;
      fill_top(j + 1);
    }
  };
  fill_top(0);
  return total;
}

SparseIntMatrix diag3(long a, long b, long c) {
  SparseIntMatrix m(3, 3);
  m.set(0, 0, a);
  m.set(1, 1, b);
  m.set(2, 2, c);
  return m;
}

Int trace(const SparseIntMatrix& m) {
  Int t(0);
  for (int i = 0; i < m.rows(); ++i) t += m.get(i, i);
  return t;
}

std::vector<SparseIntMatrix> sl3_generators() {
  // Two unimodular matrices generating a Zariski-dense-enough test set: an
  // elementary transvection and a signed cycle.
  SparseIntMatrix e(3, 3);
  e.set(0, 0, 1);
  e.set(1, 1, 1);
  e.set(2, 2, 1);
  e.set(0, 1, 1);
  SparseIntMatrix c(3, 3);
  c.set(0, 2, 1);
  c.set(1, 0, 1);
  c.set(2, 1, 1);
  return {e, c};
}

}  // namespace

TEST_CASE("weight dimensions: closed forms") {
  for (long m = 0; m <= 20; ++m) {
    CHECK(weyl_dim(a2(m, 0)) == Int((m + 1) * (m + 2) / 2));
    CHECK(weyl_dim(a2(0, m)) == Int((m + 1) * (m + 2) / 2));
    HighestWeight one;
    one.kind = RootKind::A1;
    one.coeffs = {Int(m)};
    CHECK(weyl_dim(one) == Int(m + 1));
  }
  // Hand expansion of the positive-root product for the rank-2 case:
  // (a+1)(b+1)(a+b+2)/2.
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b)
      CHECK(weyl_dim(a2(a, b)) == Int((a + 1) * (b + 1) * (a + b + 2) / 2));

  CHECK(weyl_dim(a2(0, 0)) == 1);
  CHECK(weyl_dim(dw({0, 0})) == 1);
  CHECK(weyl_dim(a2(1, 1)) == 8);
}

TEST_CASE("weight dimensions: twist symmetry and positivity") {
  Rng rng(0x3a3);
  for (int trial = 0; trial < 40; ++trial) {
    auto w = a2(static_cast<long>(rng.below(10)), static_cast<long>(rng.below(10)));
    CHECK(weyl_dim(w) > 0);
    CHECK(weyl_dim(w) == weyl_dim(theta_twist(w)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    long k1 = static_cast<long>(rng.below(5)) + 2;
    long k2 = static_cast<long>(rng.below(static_cast<std::uint64_t>(k1) + 1));
    long k3raw = static_cast<long>(rng.below(static_cast<std::uint64_t>(k2) + 1));
    long k3 = (rng.next() & 1) ? k3raw : -k3raw;
    auto w = dw({k1, k2, k3});
    CHECK(weyl_dim(w) > 0);
    CHECK(weyl_dim(w) == weyl_dim(theta_twist(w)));
  }
}

TEST_CASE("weight dimensions reject non-dominant input") {
  auto expect_validate = [](auto&& fn) {
    try {
      fn();
      FAIL_CHECK("non-dominant weight accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::validate);
    }
  };
  expect_validate([] { static_cast<void>(weyl_dim(a2(-1, 2))); });
  expect_validate([] { static_cast<void>(weyl_dim(dw({1, 2, 0}))); });
  expect_validate([] { static_cast<void>(weyl_dim(dw({2, 1, -2}))); });
}

TEST_CASE("twist: pinned images and involution") {
  auto t = theta_twist(a2(3, 1));
  CHECK(t.coeffs == std::vector<Int>{Int(1), Int(3)});

  auto omega_plus = dw({1, 1, 1});
  auto omega_minus = theta_twist(omega_plus);
  CHECK(omega_minus.coeffs == std::vector<Int>{Int(1), Int(1), Int(-1)});

  Rng rng(0x717);
  for (int trial = 0; trial < 30; ++trial) {
    auto w = a2(static_cast<long>(rng.below(9)), static_cast<long>(rng.below(9)));
    auto tw = theta_twist(theta_twist(w));
    CHECK(tw.coeffs == w.coeffs);
  }

  CHECK_FALSE(is_theta_fixed(a2(1, 0)));
  CHECK_FALSE(is_theta_fixed(a2(5, 0)));
  CHECK(is_theta_fixed(a2(2, 2)));
  CHECK(is_theta_fixed(dw({3, 1, 0})));
  CHECK_FALSE(is_theta_fixed(dw({3, 1, 1})));
}

TEST_CASE("weight specs parse and print") {
  auto w = parse_weight("A2:3,1");
  CHECK(w.kind == RootKind::A2);
  CHECK(w.coeffs == std::vector<Int>{Int(3), Int(1)});
  CHECK(w.str() == "A2:3,1");
  CHECK(parse_weight("A1:5").coeffs == std::vector<Int>{Int(5)});
  auto d = parse_weight("D:2,1,1");
  CHECK(d.ambient_rank == 3);
  CHECK(parse_weight(d.str()).coeffs == d.coeffs);

  auto sc = scale_weight(a2(1, 2), 3);
  CHECK(sc.coeffs == std::vector<Int>{Int(3), Int(6)});

  for (const char* bad : {"", "A2", "B2:1", "A2:", "A2:1,x", "A2:1,"}) {
    try {
      static_cast<void>(parse_weight(bad));
      FAIL_CHECK("parsed garbage: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
    }
  }
}

TEST_CASE("symmetric powers: monomial order and pinned matrices") {
  auto mons = sym_monomials(2, 2);
  REQUIRE(mons.size() == 3);
  CHECK(mons[0] == std::vector<int>{2, 0});
  CHECK(mons[1] == std::vector<int>{1, 1});
  CHECK(mons[2] == std::vector<int>{0, 2});

  SparseIntMatrix a(2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  a.set(1, 1, 1);
  CHECK(sym_power_matrix(a, 1) == a);

  SparseIntMatrix expect(3, 3);
  expect.set(0, 0, 1);
  expect.set(0, 1, 1);
  expect.set(0, 2, 1);
  expect.set(1, 1, 1);
  expect.set(1, 2, 2);
  expect.set(2, 2, 1);
  CHECK(sym_power_matrix(a, 2) == expect);

  CHECK(sym_power_matrix(SparseIntMatrix::identity(3), 2) == SparseIntMatrix::identity(6));
}

TEST_CASE("symmetric powers: functoriality and ranks") {
  Rng rng(0x5a11);
  for (int n : {2, 3}) {
    for (int m = 2; m <= 4; ++m) {
      for (int trial = 0; trial < 6; ++trial) {
        auto a = oracle::random_unimodular(rng, n, 8);
        auto b = oracle::random_unimodular(rng, n, 8);
        CHECK(sym_power_matrix(a * b, m) == sym_power_matrix(a, m) * sym_power_matrix(b, m));
      }
    }
  }
  CoeffModule base;
  base.rank = 2;
  base.action = {oracle::random_unimodular(rng, 2, 6)};
  CHECK(sym_power_module(base, 3).rank == 4);
  CHECK(sym_power_module(base, 5).rank == 6);
}

TEST_CASE("dual symmetric powers") {
  Rng rng(0xd0a1);
  CoeffModule base;
  base.rank = 3;
  base.action = sl3_generators();

  auto dual1 = dual_sym_power_module(base, 1);
  for (std::size_t g = 0; g < base.action.size(); ++g)
    CHECK(dual1.action[g] == inverse_unimodular(base.action[g]).transpose());

  auto back = dual_sym_power_module(dual1, 1);
  for (std::size_t g = 0; g < base.action.size(); ++g) CHECK(back.action[g] == base.action[g]);

  CoeffModule ident;
  ident.rank = 3;
  ident.action = {SparseIntMatrix::identity(3)};
  auto di = dual_sym_power_module(ident, 2);
  CHECK(di.action[0] == SparseIntMatrix::identity(6));
}

TEST_CASE("two-row lattices: ranks match weight dimensions") {
  auto gens = sl3_generators();
  for (int lam1 = 1; lam1 <= 4; ++lam1) {
    for (int lam2 = 0; lam2 <= lam1 && lam1 + lam2 <= 4; ++lam2) {
      CAPTURE(lam1);
      CAPTURE(lam2);
      auto data = schur_lattice(gens, lam1, lam2);
      Int expect = weyl_dim(a2(lam1 - lam2, lam2));
      CHECK(Int(data.module.rank) == expect);

      // The lattice is saturated: its own divisor chain is all ones.
      auto sd = snf(data.lattice);
      REQUIRE(sd.rank == data.module.rank);
      for (const auto& v : sd.divisors) CHECK(v == 1);

      // Unimodular action matrices.
      for (const auto& act : data.module.action) {
        Int det = bareiss_det(to_dense(act));
        CHECK((det == 1 || det == -1));
      }
    }
  }
  CHECK(schur_lattice(gens, 1, 0).module.action[0] == gens[0]);
  CHECK(schur_lattice(gens, 2, 1).module.rank == 8);
}

TEST_CASE("two-row lattices: characters match tableau sums") {
  auto gens = sl3_generators();
  const std::vector<std::vector<long>> points = {{1, 2, 3}, {2, 3, 5}, {1, 1, 2}};
  for (int lam1 = 1; lam1 <= 4; ++lam1) {
    for (int lam2 = 0; lam2 <= lam1 && lam1 + lam2 <= 4; ++lam2) {
      auto data = schur_lattice(gens, lam1, lam2);
      for (const auto& x : points) {
        CAPTURE(lam1);
        CAPTURE(lam2);
        Int expect = schur_poly_ssyt(lam1, lam2, x);
        CHECK(trace(lattice_action(data, diag3(x[0], x[1], x[2]))) == expect);
      }
    }
  }
}

TEST_CASE("two-row lattices: tensor degree is capped") {
  try {
    static_cast<void>(schur_lattice(sl3_generators(), 5, 4));
    FAIL_CHECK("tensor cap did not trip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
  }
}

TEST_CASE("twisted family ranks") {
  // Pinned: n=1, d=2 gives 2 * (2 * (2m+1))^2.
  const std::vector<long> table{72, 200, 392, 648, 968};
  for (long m = 1; m <= 5; ++m)
    CHECK(rho_m_rank(1, 2, m) == table[static_cast<std::size_t>(m) - 1]);

  // One factor: twice the single dimension.
  for (long m = 1; m <= 6; ++m) {
    auto tau = twisted_diagonal_weight(1, m);
    CHECK(rho_m_rank(1, 1, m) == 2 * weyl_dim(tau));
  }

  // Degree multiplicativity across d.
  for (int n = 1; n <= 3; ++n)
    for (long m = 1; m <= 4; ++m) {
      Int base = rho_m_rank(n, 1, m);
      for (int d = 2; d <= 3; ++d) CHECK(rho_m_rank(n, d, m) == Int(d) * pow_ui(base, static_cast<unsigned long>(d)));
    }

  // The weight itself: all coordinates m for odd n, 2m for even n.
  auto t1 = twisted_diagonal_weight(1, 3);
  CHECK(t1.kind == RootKind::D);
  CHECK(t1.ambient_rank == 2);
  CHECK(t1.coeffs == std::vector<Int>{Int(3), Int(3)});
  auto t2 = twisted_diagonal_weight(2, 3);
  CHECK(t2.ambient_rank == 3);
  CHECK(t2.coeffs == std::vector<Int>{Int(6), Int(6), Int(6)});
}
