#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "orbikit/cyclotomic.hpp"
#include "orbikit/intmatrix.hpp"

using namespace orbikit;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// 4x4 unimodular fixture, also the rank-4 intersection matrix golden
const IntMatrix sample_unimodular = from_rows({{1, 0, 0, 0},
                                               {0, -1, -1, -1},
                                               {0, -1, 0, -1},
                                               {0, -1, -1, 0}});

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace

TEST_CASE("cyclotomic addition") {
  CHECK(zeta(4) + zeta(4) == Cyclotomic(2) * zeta(4));
  CHECK(zeta(3) + zeta(3, 2) == Cyclotomic(-1));
  CHECK((zeta(2) + Cyclotomic(1)).is_zero());
}

TEST_CASE("cyclotomic multiplication") {
  CHECK(zeta(4) * zeta(4) == Cyclotomic(-1));
  CHECK(zeta(3) * zeta(3, 2) == Cyclotomic(1));
  const Cyclotomic one(1), i = zeta(4);
  CHECK((one + i) * (one - i) == Cyclotomic(2));
}

TEST_CASE("conjugation") {
  CHECK(zeta(4).conj() == -zeta(4));
  CHECK(Cyclotomic(Rational(3, 2)).conj() == Cyclotomic(Rational(3, 2)));
  CHECK(zeta(3).conj() == zeta(3, 2));
}

TEST_CASE("integrality test") {
  CHECK(cyc_is_integer(Cyclotomic(2)));
  CHECK_FALSE(cyc_is_integer(Cyclotomic(Rational(1, 2))));
  CHECK(cyc_is_integer(zeta(3) + zeta(3, 2) + Cyclotomic(1)));  // equals 0
}

TEST_CASE("normal form equality across conductors") {
  // zeta_6^2 = zeta_3 even though the representations start out different
  CHECK(zeta(6, 2) == zeta(3));
  CHECK(Cyclotomic::from_turn(Rational(1, 3)) == zeta(3));
  CHECK(Cyclotomic::from_turn(Rational(4, 3)) == zeta(3));
  CHECK(Cyclotomic::from_turn(Rational(-2, 3)) == zeta(3));
  CHECK(zeta(5) != zeta(5, 2));
  // rationals contract to conductor 1
  CHECK((zeta(8) * zeta(8, 7)).conductor() == 1);
}

TEST_CASE("conjugation is an involutive ring map on random expressions") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> cond(1, 24), expn(0, 23), pick(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclotomic a = zeta(cond(rng), expn(rng)) + Cyclotomic(Rational(expn(rng), 5));
    Cyclotomic b = zeta(cond(rng), expn(rng)) - Cyclotomic(pick(rng));
    CHECK(cyc_conj(cyc_mul(a, b)) == cyc_mul(cyc_conj(a), cyc_conj(b)));
    CHECK(cyc_conj(cyc_add(a, b)) == cyc_add(cyc_conj(a), cyc_conj(b)));
    CHECK(cyc_conj(cyc_conj(a)) == a);
  }
}

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12).size() == 5);  // phi(12) = 4
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(24) == 8);
}

TEST_CASE("numeric embedding agrees with exact arithmetic") {
  std::mt19937 rng(987654);
  // conductors divide 24 so every intermediate conductor stays <= 24
  const std::vector<long> conductors{1, 2, 3, 4, 6, 8, 12, 24};
  std::uniform_int_distribution<std::size_t> cond(0, conductors.size() - 1);
  std::uniform_int_distribution<long> expn(0, 23), op(0, 2), num(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic exact = Cyclotomic(num(rng));
    std::complex<double> approx = exact.to_complex();
    for (int depth = 0; depth < 8; ++depth) {
      const Cyclotomic leaf = zeta(conductors[cond(rng)], expn(rng));
      switch (op(rng)) {
        case 0:
          exact = exact + leaf;
          approx += leaf.to_complex();
          break;
        case 1:
          exact = exact - leaf;
          approx -= leaf.to_complex();
          break;
        default:
          exact = exact * leaf;
          approx *= leaf.to_complex();
          break;
      }
    }
    CHECK(std::abs(exact.to_complex() - approx) < 1e-10);
  }
}

TEST_CASE("conductor cap") {
  const long before = max_conductor();
  set_max_conductor(10);
  CHECK_THROWS_AS(zeta(7) * zeta(13), resource_error);
  CHECK_THROWS_AS(zeta(11), resource_error);
  set_max_conductor(before);
  CHECK_NOTHROW(zeta(7) * zeta(13));
}

TEST_CASE("determinants") {
  CHECK(det_bareiss(IntMatrix::identity(4)) == 1);
  CHECK(det_bareiss(sample_unimodular) == -1);
  CHECK(det_bareiss(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_bareiss(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(det_bareiss(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), input_error);
}

TEST_CASE("smith normal form on fixed inputs") {
  SmithResult snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(snf.d(0, 0) == 1);
  CHECK(snf.d(1, 1) == 6);

  CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
  CHECK(smith_normal_form(sample_unimodular).d == IntMatrix::identity(4));
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(13371337);
  std::uniform_int_distribution<long> entry(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);

    SmithResult snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    Integer du = det_bareiss(snf.u), dv = det_bareiss(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    const std::size_t lim = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i + 1 < lim; ++i) {
      CHECK(snf.d(i, i) >= 0);
      if (snf.d(i, i) != 0) CHECK(snf.d(i + 1, i + 1) % snf.d(i, i) == 0);
      if (snf.d(i, i) == 0) CHECK(snf.d(i + 1, i + 1) == 0);
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i != j) CHECK(snf.d(i, j) == 0);
  }
}

TEST_CASE("integer linear solve") {
  std::mt19937 rng(5550001);
  std::uniform_int_distribution<long> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    std::vector<Integer> x(c);
    for (auto& v : x) v = entry(rng);
    std::vector<Integer> f(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) f[i] += m(i, j) * x[j];

    auto sol = solve_integer(m, f);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < r; ++i) {
      Integer acc(0);
      for (std::size_t j = 0; j < c; ++j) acc += m(i, j) * (*sol)[j];
      CHECK(acc == f[i]);
    }
  }
  // 2x = 1 has no integer solution
  CHECK_FALSE(solve_integer(from_rows({{2}}), {Integer(1)}).has_value());
  // x + y = 1 does
  CHECK(solve_integer(from_rows({{1, 1}}), {Integer(1)}).has_value());
}

TEST_CASE("unimodular inverse") {
  IntMatrix inv = inverse_unimodular(sample_unimodular);
  CHECK(sample_unimodular * inv == IntMatrix::identity(4));
  CHECK(inv * sample_unimodular == IntMatrix::identity(4));
  CHECK_THROWS_AS(inverse_unimodular(from_rows({{2, 0}, {0, 3}})), domain_error);
}
