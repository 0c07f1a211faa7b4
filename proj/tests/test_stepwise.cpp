#include <doctest.h>

#include <random>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"
#include "nilharm/inversion.hpp"
#include "nilharm/pfaffian.hpp"
#include "nilharm/stepwise.hpp"

using namespace nilharm;

TEST_CASE("decompose sizes and flags") {
  struct Expect {
    ExceptionalCase c;
    int n;
    std::size_t l1, l2;
  };
  for (auto e : {Expect{ExceptionalCase::Case1, 3, 5, 1}, Expect{ExceptionalCase::Case1, 5, 14, 1},
                 Expect{ExceptionalCase::Case6, 3, 10, 2}, Expect{ExceptionalCase::Case3, 0, 13, 1}}) {
    auto dec = decompose(e.c, e.n);
    CHECK(dec.l1_indices.size() == e.l1);
    CHECK(dec.l2_indices.size() == e.l2);
    auto flags = verify(dec);
    CHECK(flags.l1_is_ideal);
    CHECK(flags.direct_sum);
    CHECK(flags.l2_abelian_subalgebra);
    CHECK(flags.l1_square_integrable);
    CHECK(flags.all());
    CHECK_FALSE(is_square_integrable(dec.algebra).square_integrable);
  }
  CHECK_THROWS_AS(decompose(ExceptionalCase::Case1, 4), InvalidInput);
  CHECK(parse_exceptional_case("case6") == ExceptionalCase::Case6);
  CHECK(to_string(ExceptionalCase::Case3) == "case3");
  CHECK_THROWS_AS(parse_exceptional_case("case2"), InvalidInput);
}

TEST_CASE("any l1 containing the center is an ideal") {
  // n is 2-step, so [n, l1] lands in z, which l1 contains
  auto alg = free_two_step(3, ScalarField::R);
  auto swapped = make_decomposition(alg, {alg.index_of("u1")});
  auto flags = verify(swapped);
  CHECK(flags.l1_is_ideal);
  CHECK(flags.all());
}

TEST_CASE("verify detects broken splits") {
  auto alg = free_two_step(3, ScalarField::R);
  auto central = verify(make_decomposition(alg, {alg.index_of("u1∧u2")}));
  CHECK_FALSE(central.l1_is_ideal);
  CHECK_FALSE(central.all());
  auto wide = verify(make_decomposition(alg, {alg.index_of("u1"), alg.index_of("u2")}));
  CHECK_FALSE(wide.l2_abelian_subalgebra);
  auto f5 = free_two_step(5, ScalarField::R);
  auto odd = verify(make_decomposition(f5, {f5.index_of("u4"), f5.index_of("u5")}));
  CHECK(odd.l1_is_ideal);
  CHECK_FALSE(odd.l1_square_integrable);
  CHECK_THROWS_AS(make_decomposition(alg, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(make_decomposition(alg, {17}), InvalidInput);
}

TEST_CASE("l1 Pf polynomials") {
  auto c1 = l1_pf_polynomial(decompose(ExceptionalCase::Case1, 3));
  CHECK(c1.total_degree() == 1);
  auto c3dec = decompose(ExceptionalCase::Case3);
  auto l1 = l1_algebra(c3dec);
  CHECK(l1.dim() == 13);
  CHECK(l1.center_indices().size() == 7);
  auto pf = l1_pf_polynomial(c3dec);
  CHECK(pf.total_degree() == 3);
  // Pf = +-lambda_7 |lambda|^2
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 10; ++t) {
    RationalVector p(7);
    for (auto& x : p) x = d(rng);
    Rational r2 = 0;
    for (const auto& x : p) r2 += x * x;
    auto v = pf.evaluate(std::span<const Rational>(p));
    CHECK(v * v == p[6] * p[6] * r2 * r2);
  }
}

TEST_CASE("find_codim_split") {
  auto s = find_codim_split(free_two_step(3, ScalarField::R));
  REQUIRE(s.split);
  CHECK(s.split->l2_indices.size() == 1);
  CHECK(verify(*s.split).all());
  CHECK(s.candidates_tried >= 1);

  auto c = find_codim_split(free_two_step(3, ScalarField::C));
  REQUIRE(c.split);
  CHECK(c.split->l2_indices.size() == 2);
  CHECK(verify(*c.split).all());

  auto o = find_codim_split(octonion_double());
  REQUIRE(o.split);
  CHECK(verify(*o.split).all());

  CHECK_THROWS_AS(find_codim_split(heisenberg(1, CompositionKind::H)), NotApplicable);
}

TEST_CASE("factor_point recombines exactly") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (auto dec : {decompose(ExceptionalCase::Case1, 3), decompose(ExceptionalCase::Case6, 3),
                   decompose(ExceptionalCase::Case3)}) {
    for (int t = 0; t < 20; ++t) {
      AlgebraVector x = AlgebraVector::zero(dec.algebra.dim());
      for (auto& c : x.coefficients) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
      }
      auto [x1, x2] = factor_point(dec, x);
      CHECK(group_multiply(dec.algebra, x1, x2) == x);
      for (auto i : dec.l2_indices) CHECK(sgn(x1.coefficients[i]) == 0);
      for (auto i : dec.l1_indices) CHECK(sgn(x2.coefficients[i]) == 0);
    }
  }
}
