#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "torcoh/dense.hpp"
#include "torcoh/normal_forms.hpp"
#include "torcoh/sparse_matrix.hpp"

using namespace torcoh;

namespace {

SparseIntMatrix diag(const std::vector<long>& d) {
  SparseIntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    m.set(static_cast<int>(i), static_cast<int>(i), Int(d[i]));
  return m;
}

std::vector<Int> ints(const std::vector<long>& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("divisor chain: pinned small cases") {
  for (auto strategy : {SnfStrategy::fraction_free, SnfStrategy::modular}) {
    auto r = snf(diag({2, 3}), strategy);
    CHECK(r.divisors == ints({1, 6}));
    CHECK(r.rank == 2);

    auto id4 = snf(SparseIntMatrix::identity(4), strategy);
    CHECK(id4.divisors == ints({1, 1, 1, 1}));

    auto z = snf(SparseIntMatrix::zero(3, 5), strategy);
    CHECK(z.divisors.empty());
    CHECK(z.rank == 0);
    CHECK(z.rows == 3);
    CHECK(z.cols == 5);

    auto empty = snf(SparseIntMatrix::zero(0, 0), strategy);
    CHECK(empty.divisors.empty());
    CHECK(empty.rank == 0);
  }
}

TEST_CASE("rational rank: pinned small cases") {
  CHECK(rational_rank(diag({2, 3})) == 2);
  CHECK(rational_rank(SparseIntMatrix::zero(3, 5)) == 0);

  SparseIntMatrix prop(2, 2);  // second row is twice the first
  prop.set(0, 0, 1);
  prop.set(0, 1, 2);
  prop.set(1, 0, 2);
  prop.set(1, 1, 4);
  CHECK(rational_rank(prop) == 1);
}

TEST_CASE("rational determinant: pinned small cases") {
  DenseRat id3(3, std::vector<Rat>(3, Rat(0)));
  for (int i = 0; i < 3; ++i) id3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK(det_rational(id3) == Rat(1));

  DenseRat d2(2, std::vector<Rat>(2, Rat(0)));
  d2[0][0] = Rat(1, 2);
  d2[1][1] = Rat(3);
  CHECK(det_rational(d2) == Rat(3, 2));

  DenseRat swap2(2, std::vector<Rat>(2, Rat(0)));
  swap2[0][1] = 1;
  swap2[1][0] = 1;
  CHECK(det_rational(swap2) == Rat(-1));

  CHECK(det_rational(DenseRat{}) == Rat(1));
}

TEST_CASE("divisor chain matches dense brute-force reduction") {
  Rng rng(0x51ab5eed);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = static_cast<int>(rng.range(1, 8));
    int cols = static_cast<int>(rng.range(1, 8));
    auto a = oracle::random_matrix(rng, rows, cols, 5);
    auto expect = oracle::snf_dense(to_dense(a));
    auto have = snf(a);
    REQUIRE(have.divisors == expect);
    CHECK(have.rank == static_cast<int>(expect.size()));
    CHECK(snf(a, SnfStrategy::modular).divisors == expect);
  }
}

TEST_CASE("divisor chain divisibility invariant") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_matrix(rng, static_cast<int>(rng.range(1, 7)),
                                   static_cast<int>(rng.range(1, 7)), 8);
    auto r = snf(a);
    for (std::size_t i = 0; i + 1 < r.divisors.size(); ++i) {
      CHECK(r.divisors[i] > 0);
      CHECK(divisible(r.divisors[i + 1], r.divisors[i]));
    }
  }
}

TEST_CASE("divisor chain is invariant under unimodular factors") {
  Rng rng(0xdead1);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = static_cast<int>(rng.range(1, 6));
    int cols = static_cast<int>(rng.range(1, 6));
    auto a = oracle::random_matrix(rng, rows, cols, 6);
    auto u = oracle::random_unimodular(rng, rows);
    auto v = oracle::random_unimodular(rng, cols);
    auto base = snf(a);
    auto twisted = snf(u * a * v);
    CHECK(twisted.divisors == base.divisors);
    CHECK(twisted.rank == base.rank);
  }
}

TEST_CASE("divisor chain matches the minor gcd chain") {
  Rng rng(0xfeed);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = static_cast<int>(rng.range(1, 5));
    int cols = static_cast<int>(rng.range(1, 5));
    auto a = oracle::random_matrix(rng, rows, cols, 6);
    CHECK(snf(a).divisors == oracle::divisors_from_minors(to_dense(a)));
  }
}

TEST_CASE("rational determinant matches cofactor expansion") {
  Rng rng(0xabc);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.range(1, 4));
    DenseRat a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (auto& row : a)
      for (auto& v : row) {
        v = Rat(static_cast<long>(rng.range(-6, 6)), static_cast<long>(rng.range(1, 4)));
        v.canonicalize();
      }
    CHECK(det_rational(a) == oracle::det_cofactor(a));
  }
}

TEST_CASE("integer determinant matches cofactor expansion") {
  Rng rng(0xbde7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.range(1, 5));
    auto a = to_dense(oracle::random_matrix(rng, n, n, 7));
    CHECK(bareiss_det(a) == oracle::det_cofactor(a));
  }
}

TEST_CASE("rank agrees with dense elimination") {
  Rng rng(0x4a7);
  for (int trial = 0; trial < 120; ++trial) {
    auto a = oracle::random_matrix(rng, static_cast<int>(rng.range(1, 8)),
                                   static_cast<int>(rng.range(1, 8)), 5, 50);
    CHECK(rational_rank(a) == oracle::rank_dense(to_dense(a)));
  }
}

TEST_CASE("kernel lattice: membership, rank, saturation, staircase") {
  Rng rng(0x6eed);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = static_cast<int>(rng.range(1, 6));
    int cols = static_cast<int>(rng.range(1, 7));
    auto a = oracle::random_matrix(rng, rows, cols, 5, 55);
    auto k = kernel_lattice(a);

    CHECK(k.rows() == cols);
    CHECK(k.cols() == cols - rational_rank(a));
    CHECK((a * k).is_zero());

    if (k.cols() > 0) {
      // Saturation: the basis generates a direct summand, so its own divisor
      // chain is all ones.
      auto kd = snf(k);
      REQUIRE(kd.rank == k.cols());
      for (const auto& d : kd.divisors) CHECK(d == 1);

      // Staircase: strictly increasing pivot rows, each pivot row vanishing
      // on later columns.
      int prev_pivot = -1;
      for (int j = 0; j < k.cols(); ++j) {
        int pivot = -1;
        for (int i = 0; i < k.rows() && pivot < 0; ++i)
          if (k.get(i, j) != 0) pivot = i;
        REQUIRE(pivot >= 0);
        CHECK(pivot > prev_pivot);
        for (int jj = j + 1; jj < k.cols(); ++jj) CHECK(k.get(pivot, jj) == 0);
        prev_pivot = pivot;
      }
    }
  }
}

TEST_CASE("lattice coordinates invert the kernel basis") {
  Rng rng(0xc00d);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rng.range(1, 5));
    int cols = static_cast<int>(rng.range(2, 7));
    auto a = oracle::random_matrix(rng, rows, cols, 4, 50);
    auto k = kernel_lattice(a);
    if (k.cols() == 0) continue;
    auto c = oracle::random_matrix(rng, k.cols(), 3, 5, 80);
    auto x = lattice_coordinates(k, k * c);
    CHECK(x == c);
  }
}

TEST_CASE("lattice coordinates refuse vectors outside the lattice") {
  SparseIntMatrix a(1, 2);  // kernel of (1 1) is spanned by (1, -1)
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  auto k = kernel_lattice(a);
  REQUIRE(k.cols() == 1);

  SparseIntMatrix inside(2, 1);
  inside.set(0, 0, 3);
  inside.set(1, 0, -3);
  auto x = lattice_coordinates(k, inside);
  CHECK(k * x == inside);

  SparseIntMatrix outside(2, 1);
  outside.set(0, 0, 1);
  outside.set(1, 0, 1);
  try {
    static_cast<void>(lattice_coordinates(k, outside));
    FAIL_CHECK("vector outside the lattice was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validate);
  }
}

TEST_CASE("hermite form is canonical") {
  Rng rng(0x43a);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rng.range(1, 6));
    int cols = static_cast<int>(rng.range(1, 6));
    auto a = oracle::random_matrix(rng, rows, cols, 6);
    auto h = hermite_rows(a);

    // Idempotent, and row operations keep the kernel: the two kernel bases
    // must span each other integrally.
    CHECK(hermite_rows(h) == h);
    auto ka = kernel_lattice(a);
    auto kh = kernel_lattice(h);
    REQUIRE(ka.cols() == kh.cols());
    if (ka.cols() > 0) {
      CHECK(ka * lattice_coordinates(ka, kh) == kh);
      CHECK(kh * lattice_coordinates(kh, ka) == ka);
    }
    CHECK(h.rows() == rational_rank(a));

    int prev_col = -1;
    for (int i = 0; i < h.rows(); ++i) {
      int pc = -1;
      for (int j = 0; j < h.cols() && pc < 0; ++j)
        if (h.get(i, j) != 0) pc = j;
      REQUIRE(pc >= 0);
      CHECK(pc > prev_col);
      CHECK(h.get(i, pc) > 0);
      for (int ii = 0; ii < i; ++ii) {
        CHECK(h.get(ii, pc) >= 0);
        CHECK(h.get(ii, pc) < h.get(i, pc));
      }
      prev_col = pc;
    }
  }
}

TEST_CASE("unimodular inverse round-trips") {
  Rng rng(0x1a4e);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.range(1, 6));
    auto u = oracle::random_unimodular(rng, n);
    CHECK(u * inverse_unimodular(u) == SparseIntMatrix::identity(n));
  }
  CHECK_THROWS_AS(static_cast<void>(inverse_unimodular(diag({2}))), Error);
}

TEST_CASE("exchange text round-trips byte-identically") {
  auto golden = std::string("2 2 2\n0 0 2\n1 1 3\n");
  auto m = SparseIntMatrix::from_exchange_text(golden);
  CHECK(m.get(0, 0) == 2);
  CHECK(m.get(1, 1) == 3);
  CHECK(m.to_exchange_text() == golden);

  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = oracle::random_matrix(rng, static_cast<int>(rng.range(0, 6)),
                                   static_cast<int>(rng.range(0, 6)), 99, 60);
    CHECK(SparseIntMatrix::from_exchange_text(a.to_exchange_text()) == a);
  }

  // Comments and blank lines are accepted on input.
  auto commented = SparseIntMatrix::from_exchange_text("# header\n2 2 1\n\n0 1 -7\n");
  CHECK(commented.get(0, 1) == -7);
}

TEST_CASE("exchange text rejects malformed input") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      static_cast<void>(SparseIntMatrix::from_exchange_text(text));
      FAIL_CHECK("no error for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
    }
  };
  expect_parse_error("");
  expect_parse_error("2 2\n");                    // short header
  expect_parse_error("2 2 2\n0 0 1\n");           // fewer triples than declared
  expect_parse_error("1 1 1\n0 0 1\n0 0 2\n");    // more triples than declared
  expect_parse_error("2 2 2\n1 1 3\n0 0 2\n");    // not sorted by (row, col)
  expect_parse_error("1 1 1\n0 0 0\n");           // explicit zero entry
  expect_parse_error("1 1 1\n0 1 5\n");           // column out of range
  expect_parse_error("1 1 1\n0 0 x\n");           // non-integer value
}

TEST_CASE("entry size cap fails loudly") {
  Caps caps = default_caps();
  caps.max_entry_bits = 16;
  SparseIntMatrix big(2, 2);  // elimination must touch the oversized entry
  big.set(0, 0, pow_ui(Int(2), 64));
  big.set(0, 1, 1);
  big.set(1, 0, 1);
  big.set(1, 1, 1);
  try {
    static_cast<void>(snf(big, SnfStrategy::fraction_free, caps));
    FAIL_CHECK("cap did not trip");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
  }
}

TEST_CASE("strategies produce identical chains on larger entries") {
  Rng rng(0x900d);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_matrix(rng, static_cast<int>(rng.range(2, 7)),
                                   static_cast<int>(rng.range(2, 7)), 50);
    CHECK(snf(a, SnfStrategy::fraction_free).divisors == snf(a, SnfStrategy::modular).divisors);
  }
}
