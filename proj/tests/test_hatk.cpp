#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbikit/hatk.hpp"

using namespace orbikit;

namespace {

ClassFunction constant(const FiniteAbelianGroup& g, const Cyclotomic& c) {
  ClassFunction f(g);
  for (const auto& x : g.elements()) f.set_value(x, c);
  return f;
}

RepRingElement random_virtual(const FiniteAbelianGroup& g, std::mt19937& rng) {
  RepRingElement x(g);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> idx(0, g.order() - 1);
  for (int t = 0; t < 5; ++t) x.add_term(g.element_at(idx(rng)), Integer(coeff(rng)));
  return x;
}

ClassFunction random_rational_function(const FiniteAbelianGroup& g, std::mt19937& rng) {
  ClassFunction f(g);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  for (const auto& x : g.elements())
    f.set_value(x, Cyclotomic(Rational(num(rng), den(rng))));
  return f;
}

}  // namespace

TEST_CASE("the a-map kills characters") {
  FiniteAbelianGroup z3({3});
  CHECK(torus_is_zero(a_map(ch(RepRingElement::irrep(z3, {1})))));
  CHECK(torus_is_zero(a_map(ClassFunction(z3))));

  FiniteAbelianGroup z2({2});
  TorusClassFunction half = a_map(constant(z2, Cyclotomic(Rational(1, 2))));
  CHECK_FALSE(torus_is_zero(half));
  auto coeffs = ch_inverse(half.representative());
  CHECK(coeffs.at({0}) == Cyclotomic(Rational(1, 2)));
  CHECK(coeffs.at({1}).is_zero());
}

TEST_CASE("canonical representatives reduce rational coefficients") {
  FiniteAbelianGroup z2({2});
  // 7/2 on the trivial character reduces to 1/2
  ClassFunction f = constant(z2, Cyclotomic(Rational(7, 2)));
  auto reduced = ch_inverse(a_map(f).representative());
  CHECK(reduced.at({0}) == Cyclotomic(Rational(1, 2)));
  // negative rationals land in [0,1) as well
  auto up = ch_inverse(a_map(constant(z2, Cyclotomic(Rational(-1, 3)))).representative());
  CHECK(up.at({0}) == Cyclotomic(Rational(2, 3)));
}

TEST_CASE("equality modulo the character lattice") {
  FiniteAbelianGroup z4({4});
  std::mt19937 rng(77001);
  ClassFunction f = random_rational_function(z4, rng);
  TorusClassFunction u = a_map(f);
  CHECK(torus_equal(u, a_map(f + ch(RepRingElement::irrep(z4, {2})))));
  CHECK(torus_equal(u, u));

  FiniteAbelianGroup z2({2});
  CHECK_FALSE(torus_equal(a_map(constant(z2, Cyclotomic(Rational(1, 2)))),
                          TorusClassFunction::zero(z2)));
  CHECK_THROWS_AS(torus_equal(TorusClassFunction::zero(z2), TorusClassFunction::zero(z4)),
                  input_error);
}

TEST_CASE("exactness of ch followed by a") {
  std::mt19937 rng(77002);
  for (const auto& g : abelian_groups_up_to(12)) {
    for (int t = 0; t < 4; ++t) {
      RepRingElement x = random_virtual(g, rng);
      CHECK(torus_is_zero(a_map(ch(x))));
      // and conversely: a_map(f) = 0 forces integral coefficients
      ClassFunction f = random_rational_function(g, rng);
      if (torus_is_zero(a_map(f))) {
        for (const auto& [pi, c] : ch_inverse(f)) CHECK(cyc_is_integer(c));
      }
    }
  }
}

TEST_CASE("nonzero classes are detected") {
  std::mt19937 rng(77003);
  for (const auto& g : {FiniteAbelianGroup({2}), FiniteAbelianGroup({3}),
                        FiniteAbelianGroup({2, 2})}) {
    for (int t = 0; t < 20; ++t) {
      ClassFunction f = random_rational_function(g, rng);
      bool integral = true;
      for (const auto& [pi, c] : ch_inverse(f))
        if (!cyc_is_integer(c)) integral = false;
      CHECK(torus_is_zero(a_map(f)) == integral);
    }
  }
}

TEST_CASE("torus trace") {
  FiniteAbelianGroup z2({2});
  CHECK(torus_trace(a_map(constant(z2, Cyclotomic(Rational(1, 2))))) ==
        Cyclotomic(Rational(1, 2)));
  CHECK(torus_scalar_equal(torus_trace(a_map(constant(z2, Cyclotomic(1)))), Cyclotomic()));

  std::mt19937 rng(77004);
  for (const auto& g : {FiniteAbelianGroup({4}), FiniteAbelianGroup({2, 3})}) {
    for (int t = 0; t < 10; ++t) {
      RepRingElement x = random_virtual(g, rng);
      CHECK(torus_scalar_equal(torus_trace(a_map(ch(x))), Cyclotomic()));
      // additivity mod Z
      ClassFunction f = random_rational_function(g, rng);
      ClassFunction h = random_rational_function(g, rng);
      CHECK(torus_scalar_equal(torus_trace(a_map(f) + a_map(h)),
                               torus_trace(a_map(f)) + torus_trace(a_map(h))));
    }
  }
}

TEST_CASE("mod-Z scalar equality") {
  CHECK(torus_scalar_equal(Cyclotomic(Rational(5, 2)), Cyclotomic(Rational(1, 2))));
  CHECK(torus_scalar_equal(Cyclotomic(3), Cyclotomic()));
  CHECK_FALSE(torus_scalar_equal(Cyclotomic(Rational(1, 3)), Cyclotomic(Rational(1, 2))));
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CHECK(torus_scalar_equal(i + Cyclotomic(2), i));
  CHECK_FALSE(torus_scalar_equal(i, -i));
}

TEST_CASE("real classes") {
  FiniteAbelianGroup z2({2});
  CHECK(is_real(a_map(constant(z2, Cyclotomic(Rational(1, 2))))));
  CHECK(is_real(TorusClassFunction::zero(z2)));

  // coefficient zeta_4 / 3 on the trivial character has surviving imaginary part
  ClassFunction f = constant(z2, Cyclotomic::root_of_unity(4, 1) * Cyclotomic(Rational(1, 3)));
  CHECK_FALSE(is_real(a_map(f)));

  // integer multiples of characters are absorbed: conjugation-fixed mod lattice
  FiniteAbelianGroup z3({3});
  ClassFunction chi = ch(RepRingElement::irrep(z3, {1}));
  ClassFunction g = constant(z3, Cyclotomic(Rational(1, 4))) + chi;
  CHECK(is_real(a_map(g)));

  std::mt19937 rng(77005);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  auto random_real_class = [&](const FiniteAbelianGroup& grp) {
    // rational combination of characters: all coefficients real
    ClassFunction u(grp);
    for (const auto& pi : all_irreps(grp))
      u = u + ch(RepRingElement::irrep(grp, pi)).scaled(Cyclotomic(Rational(num(rng), den(rng))));
    return u;
  };
  for (int t = 0; t < 10; ++t) {
    // real classes form a subgroup
    ClassFunction u = random_real_class(z3);
    ClassFunction v = random_real_class(z3);
    REQUIRE(is_real(a_map(u)));
    REQUIRE(is_real(a_map(v)));
    CHECK(is_real(a_map(u) + a_map(v)));
    CHECK(is_real(-a_map(u)));
    // trace of a real class is conjugation-fixed mod Z
    Cyclotomic tr = torus_trace(a_map(u));
    CHECK(torus_scalar_equal(tr, tr.conj()));
  }
}

TEST_CASE("coefficient tuple mod Z distinguishes classes") {
  std::mt19937 rng(77006);
  FiniteAbelianGroup g({2, 2});
  for (int t = 0; t < 15; ++t) {
    ClassFunction f = random_rational_function(g, rng);
    ClassFunction h = random_rational_function(g, rng);
    bool same_tuple = true;
    auto cf = ch_inverse(f), chh = ch_inverse(h);
    for (const auto& pi : all_irreps(g))
      if (!cyc_is_integer(cf.at(pi) - chh.at(pi))) same_tuple = false;
    CHECK(torus_equal(a_map(f), a_map(h)) == same_tuple);
  }
}

TEST_CASE("degree bookkeeping for point classes") {
  FiniteAbelianGroup z4({4});
  HatKPoint even = HatKPoint::degree0(RepRingElement::irrep(z4, {1}));
  HatKPoint odd = HatKPoint::degree1(TorusClassFunction::zero(z4));
  CHECK(even.degree() == 0);
  CHECK(odd.degree() == 1);
  CHECK_THROWS_AS(even + odd, input_error);

  HatKPoint sum = even + HatKPoint::degree0(RepRingElement::irrep(z4, {3}));
  CHECK(sum.even() == RepRingElement::irrep(z4, {1}) + RepRingElement::irrep(z4, {3}));

  ClassFunction f = constant(z4, Cyclotomic(Rational(1, 3)));
  HatKPoint u = HatKPoint::degree1(a_map(f));
  HatKPoint v = HatKPoint::degree1(a_map(f + ch(RepRingElement::irrep(z4, {1}))));
  CHECK(u.equal(v));
  CHECK_FALSE(u.equal(odd));
  CHECK_FALSE(u.equal(even));
}

TEST_CASE("extra lattice generators enlarge the quotient") {
  FiniteAbelianGroup z2({2});
  ClassFunction half = constant(z2, Cyclotomic(Rational(1, 2)));
  TorusClassFunction plain = a_map(half);
  CHECK_FALSE(torus_is_zero(plain));
  TorusClassFunction enlarged(ClassFunction(z2), {half});
  TorusClassFunction with_rep(half, {half});
  CHECK(torus_is_zero(with_rep));
  CHECK(torus_equal(with_rep, enlarged));
  // sums merge the extra lattices
  TorusClassFunction merged = with_rep + plain;
  CHECK(merged.extra_lattice().size() == 1);
  CHECK(torus_is_zero(merged));
}
