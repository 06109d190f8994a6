#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbikit/grouprep.hpp"

using namespace orbikit;

namespace {

RepRingElement irrep(const FiniteAbelianGroup& g, const Coords& labels) {
  return RepRingElement::irrep(g, labels);
}

ClassFunction constant(const FiniteAbelianGroup& g, const Cyclotomic& c) {
  ClassFunction f(g);
  for (const auto& x : g.elements()) f.set_value(x, c);
  return f;
}

RepRingElement random_virtual(const FiniteAbelianGroup& g, std::mt19937& rng) {
  RepRingElement x(g);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> idx(0, g.order() - 1);
  for (int t = 0; t < 4; ++t) x.add_term(g.element_at(idx(rng)), Integer(coeff(rng)));
  return x;
}

}  // namespace

TEST_CASE("character values") {
  FiniteAbelianGroup z4({4});
  for (long g = 0; g < 4; ++g)
    CHECK(character_value(z4, {1}, {g}) == Cyclotomic::root_of_unity(4, g));
  CHECK(character_turn(z4, {3}, {2}) == Rational(1, 2));
  FiniteAbelianGroup g23({2, 3});
  CHECK(character_value(g23, {1, 1}, {1, 1}) ==
        Cyclotomic::root_of_unity(2, 1) * Cyclotomic::root_of_unity(3, 1));
}

TEST_CASE("tensor products of virtual characters") {
  FiniteAbelianGroup z2({2});
  CHECK(rep_tensor(irrep(z2, {1}), irrep(z2, {1})) == RepRingElement::trivial(z2));
  CHECK(rep_tensor(irrep(z2, {0}) + irrep(z2, {1}), irrep(z2, {0}) - irrep(z2, {1}))
            .is_zero());
  std::mt19937 rng(424201);
  for (const auto& g : {FiniteAbelianGroup({6}), FiniteAbelianGroup({2, 4})}) {
    RepRingElement x = random_virtual(g, rng);
    CHECK(rep_tensor(x, RepRingElement::trivial(g)) == x);
  }
  FiniteAbelianGroup z3({3});
  CHECK_THROWS_AS(rep_tensor(irrep(z2, {1}), irrep(z3, {1})), input_error);
}

TEST_CASE("duality negates labels") {
  FiniteAbelianGroup z4({4});
  CHECK(rep_dual(irrep(z4, {1})) == irrep(z4, {3}));
  CHECK(rep_dual(RepRingElement::trivial(z4)) == RepRingElement::trivial(z4));
  CHECK(rep_dual(irrep(z4, {1}) + irrep(z4, {2}).scaled(2)) ==
        irrep(z4, {3}) + irrep(z4, {2}).scaled(2));
  std::mt19937 rng(424202);
  RepRingElement x = random_virtual(FiniteAbelianGroup({3, 6}), rng);
  CHECK(rep_dual(rep_dual(x)) == x);
}

TEST_CASE("trace reads off the trivial coefficient") {
  FiniteAbelianGroup z2({2}), z3({3}), z6({6});
  CHECK(trace_G(irrep(z2, {0}) + irrep(z2, {1})) == 1);
  CHECK(trace_G(irrep(z3, {1})) == 0);
  CHECK(trace_G(RepRingElement::trivial(z6).scaled(5) - irrep(z6, {1}).scaled(2)) == 5);
}

TEST_CASE("pairing is trace of the tensor product") {
  FiniteAbelianGroup z3({3});
  CHECK(pairing(irrep(z3, {1}), irrep(z3, {2})) == 1);
  CHECK(pairing(irrep(z3, {1}), irrep(z3, {1})) == 0);
  CHECK(pairing(RepRingElement::trivial(z3), RepRingElement::trivial(z3)) == 1);
  std::mt19937 rng(424203);
  FiniteAbelianGroup g({2, 4});
  for (int t = 0; t < 10; ++t) {
    RepRingElement x = random_virtual(g, rng), y = random_virtual(g, rng);
    CHECK(pairing(x, y) == pairing(y, x));
    CHECK(pairing(x, y) == trace_G(rep_tensor(x, y)));
  }
}

TEST_CASE("characters of virtual representations") {
  FiniteAbelianGroup z4({4});
  ClassFunction f = ch(irrep(z4, {1}));
  for (long g = 0; g < 4; ++g) CHECK(f.value({g}) == Cyclotomic::root_of_unity(4, g));

  FiniteAbelianGroup z2({2});
  ClassFunction reg = ch(irrep(z2, {0}) + irrep(z2, {1}));
  CHECK(reg.value({0}) == Cyclotomic(2));
  CHECK(reg.value({1}).is_zero());

  CHECK(ch(RepRingElement::trivial(z4)) == constant(z4, Cyclotomic(1)));
}

TEST_CASE("ch is a ring homomorphism") {
  std::mt19937 rng(424204);
  for (const auto& g : {FiniteAbelianGroup({5}), FiniteAbelianGroup({2, 2}),
                        FiniteAbelianGroup({12}), FiniteAbelianGroup({2, 6})}) {
    for (int t = 0; t < 8; ++t) {
      RepRingElement x = random_virtual(g, rng), y = random_virtual(g, rng);
      CHECK(ch(rep_tensor(x, y)) == ch(x).pointwise_mul(ch(y)));
      CHECK(ch(x + y) == ch(x) + ch(y));
    }
  }
}

TEST_CASE("trace of class functions") {
  FiniteAbelianGroup z2({2}), z4({4});
  CHECK(trace_classfun(ch(irrep(z2, {1}))).is_zero());
  CHECK(trace_classfun(constant(z2, Cyclotomic(1))) == Cyclotomic(1));
  CHECK(trace_classfun(ch(irrep(z4, {2}))).is_zero());
  std::mt19937 rng(424205);
  FiniteAbelianGroup g({3, 3});
  for (int t = 0; t < 6; ++t) {
    RepRingElement x = random_virtual(g, rng);
    CHECK(trace_classfun(ch(x)) == Cyclotomic(Rational(trace_G(x))));
  }
}

TEST_CASE("character orthogonality up to order 24") {
  for (const auto& g : abelian_groups_up_to(24)) {
    for (const auto& pi : all_irreps(g)) {
      for (const auto& rho : all_irreps(g)) {
        Cyclotomic s;
        for (const auto& x : g.elements())
          s += character_value(g, pi, x) * character_value(g, rho, x).conj();
        if (pi == rho)
          CHECK(s == Cyclotomic(g.order()));
        else
          CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("ch_inverse recovers coefficients") {
  FiniteAbelianGroup z2({2});
  auto half = ch_inverse(constant(z2, Cyclotomic(Rational(1, 2))));
  CHECK(half.at({0}) == Cyclotomic(Rational(1, 2)));
  CHECK(half.at({1}).is_zero());

  ClassFunction sign(z2);
  sign.set_value({0}, Cyclotomic(1));
  sign.set_value({1}, Cyclotomic(-1));
  auto m = ch_inverse(sign);
  CHECK(m.at({1}) == Cyclotomic(1));
  CHECK(m.at({0}).is_zero());

  std::mt19937 rng(424206);
  for (const auto& g : {FiniteAbelianGroup({8}), FiniteAbelianGroup({2, 4})}) {
    RepRingElement x = random_virtual(g, rng);
    auto coeffs = ch_inverse(ch(x));
    for (const auto& pi : all_irreps(g))
      CHECK(coeffs.at(pi) == Cyclotomic(Rational(x.coeff(pi))));
  }
}

TEST_CASE("induction") {
  FiniteAbelianGroup z4({4});
  SubgroupEmbedding h = embedding_from_images(z4, {{2}});
  RepRingElement ind = induce(h, RepRingElement::trivial(h.sub));
  CHECK(ind == irrep(z4, {0}) + irrep(z4, {2}));

  SubgroupEmbedding whole = embedding_from_images(z4, {{1}});
  CHECK(induce(whole, irrep(whole.sub, {3})) == irrep(z4, {3}));

  FiniteAbelianGroup z2({2});
  SubgroupEmbedding origin = embedding_from_images(z2, {});
  CHECK(induce(origin, RepRingElement::trivial(origin.sub)) ==
        irrep(z2, {0}) + irrep(z2, {1}));

  // dimension multiplies by the index
  CHECK(ind.dimension() == 2);
}

TEST_CASE("restriction") {
  FiniteAbelianGroup z4({4});
  SubgroupEmbedding h = embedding_from_images(z4, {{2}});
  CHECK(restrict_rep(h, irrep(z4, {1})) == irrep(h.sub, {1}));
  CHECK(restrict_rep(h, RepRingElement::trivial(z4)) == RepRingElement::trivial(h.sub));
  CHECK(restrict_rep(h, irrep(z4, {2})) == RepRingElement::trivial(h.sub));
  FiniteAbelianGroup z3({3});
  CHECK_THROWS_AS(restrict_rep(h, irrep(z3, {1})), input_error);
}

TEST_CASE("Frobenius reciprocity on small groups") {
  std::mt19937 rng(424207);
  for (const auto& g : abelian_groups_up_to(12)) {
    for (const auto& subset : all_subgroups(g)) {
      SubgroupEmbedding h = embedding_from_subset(g, subset);
      RepRingElement x = random_virtual(h.sub, rng);
      CHECK(trace_G(x) == trace_G(induce(h, x)));
    }
  }
}

TEST_CASE("invariants descend to the quotient") {
  FiniteAbelianGroup z4({4});
  SubgroupEmbedding h = embedding_from_images(z4, {{2}});
  QuotientPresentation q(z4, h);
  REQUIRE(q.quotient().orders() == std::vector<long>{2});

  RepRingElement inv2 = invariants(irrep(z4, {2}), h, q);
  CHECK(inv2 == irrep(q.quotient(), {1}));
  CHECK(invariants(irrep(z4, {1}), h, q).is_zero());
  CHECK(invariants(RepRingElement::trivial(z4), h, q) ==
        RepRingElement::trivial(q.quotient()));
}

TEST_CASE("averaging over a subgroup") {
  FiniteAbelianGroup z4({4});
  SubgroupEmbedding h = embedding_from_images(z4, {{2}});
  QuotientPresentation q(z4, h);

  CHECK(average_H(ch(irrep(z4, {1})), h, q).is_zero());
  Cyclotomic c = Cyclotomic::root_of_unity(3, 1) + Cyclotomic(Rational(1, 5));
  CHECK(average_H(constant(z4, c), h, q) == constant(q.quotient(), c));
  CHECK(average_H(ch(irrep(z4, {2})), h, q) == ch(irrep(q.quotient(), {1})));
}

TEST_CASE("averaging matches invariants on characters") {
  std::mt19937 rng(424208);
  for (const auto& g : abelian_groups_up_to(12)) {
    for (const auto& subset : all_subgroups(g)) {
      SubgroupEmbedding h = embedding_from_subset(g, subset);
      QuotientPresentation q(g, h);
      RepRingElement x = random_virtual(g, rng);
      CHECK(average_H(ch(x), h, q) == ch(invariants(x, h, q)));
    }
  }
}

TEST_CASE("real structure") {
  FiniteAbelianGroup z3({3});
  ClassFunction chi = ch(irrep(z3, {1}));
  CHECK(real_structure(chi) == chi);
  CHECK(real_structure(constant(z3, Cyclotomic::root_of_unity(3, 1))) ==
        constant(z3, Cyclotomic::root_of_unity(3, 2)));
  ClassFunction half = constant(z3, Cyclotomic(Rational(1, 2)));
  CHECK(real_structure(half) == half);
  std::mt19937 rng(424209);
  FiniteAbelianGroup g({4, 4});
  ClassFunction f(g);
  std::uniform_int_distribution<long> expn(0, 7);
  for (const auto& x : g.elements())
    f.set_value(x, Cyclotomic::root_of_unity(8, expn(rng)) + Cyclotomic(Rational(expn(rng), 3)));
  CHECK(real_structure(real_structure(f)) == f);
  for (int t = 0; t < 6; ++t) {
    RepRingElement x = random_virtual(g, rng);
    CHECK(real_structure(ch(x)) == ch(x));
  }
}

TEST_CASE("dual pairing matrices are permutations") {
  CHECK(dual_pairing_matrix(FiniteAbelianGroup({1})) == IntMatrix::identity(1));
  CHECK(dual_pairing_matrix(FiniteAbelianGroup({2})) == IntMatrix::identity(2));

  IntMatrix m3 = dual_pairing_matrix(FiniteAbelianGroup({3}));
  IntMatrix expected(3, 3);
  expected(0, 0) = 1;
  expected(1, 2) = 1;
  expected(2, 1) = 1;
  CHECK(m3 == expected);

  for (const auto& g : {FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({6})}) {
    IntMatrix m = dual_pairing_matrix(g);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer row_sum = 0, col_sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        CHECK((m(i, j) == 0 || m(i, j) == 1));
        row_sum += m(i, j);
        col_sum += m(j, i);
      }
      CHECK(row_sum == 1);
      CHECK(col_sum == 1);
    }
    CHECK(m * m == IntMatrix::identity(g.order()));
  }
}
