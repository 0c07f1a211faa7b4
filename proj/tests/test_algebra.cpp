#include <doctest.h>

#include <random>

#include "nilharm/algebra.hpp"
#include "nilharm/algebra_json.hpp"
#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"

using namespace nilharm;

namespace {

AlgebraVector vec(std::initializer_list<long> v) {
  AlgebraVector a;
  for (long x : v) a.coefficients.emplace_back(x);
  return a;
}

AlgebraVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  AlgebraVector a = AlgebraVector::zero(n);
  for (auto& c : a.coefficients) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return a;
}

}  // namespace

TEST_CASE("parse_rational and fraction strings") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(to_fraction_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("rational row reduction") {
  auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  CHECK(rank(m) == 2);
  auto ns = null_space_basis(m);
  REQUIRE(ns.rows() == 1);
  auto image = m * ns.row(0);
  for (const auto& c : image) CHECK(sgn(c) == 0);
  CHECK(row_span_contains(row_space_basis(m), RationalMatrix::from_rows({{1, 3, 4}}, 3)));
  CHECK_FALSE(row_span_contains(row_space_basis(m), RationalMatrix::from_rows({{0, 0, 1}}, 3)));
}

TEST_CASE("bracket examples") {
  SUBCASE("h_{1;C}: [(0,u),(0,v)] is central and equals Im<u,v>") {
    auto h = heisenberg(1, CompositionKind::C);
    // u = 2 + 3i, v = 5 - i: Im(u conj v) = Im((2+3i)(5+i)) = 17
    auto b = bracket(h, vec({0, 2, 3}), vec({0, 5, -1}));
    CHECK(b == vec({17, 0, 0}));
  }
  SUBCASE("[x, x] = 0") {
    std::mt19937_64 rng(1);
    auto alg = octonion_double();
    for (int t = 0; t < 10; ++t) {
      auto x = random_vector(alg.dim(), rng);
      CHECK(bracket(alg, x, x).is_zero());
    }
  }
  SUBCASE("free 2-step over R^3: [u1, u2] = u1^u2") {
    auto f = free_two_step(3, ScalarField::R);
    auto u1 = AlgebraVector::basis(6, f.index_of("u1"));
    auto u2 = AlgebraVector::basis(6, f.index_of("u2"));
    CHECK(bracket(f, u1, u2) == AlgebraVector::basis(6, f.index_of("u1∧u2")));
    CHECK(bracket(f, u2, u1) == Rational(-1) * AlgebraVector::basis(6, f.index_of("u1∧u2")));
  }
  SUBCASE("dimension mismatch") {
    auto h = heisenberg(1, CompositionKind::C);
    CHECK_THROWS_AS(bracket(h, vec({1, 2}), vec({0, 1, 0})), InvalidInput);
  }
}

TEST_CASE("jacobi_defect") {
  CHECK(sgn(jacobi_defect(heisenberg(2, CompositionKind::H))) == 0);
  CHECK(sgn(jacobi_defect(octonion_double())) == 0);
  // [u1^u2, u3] = u1 makes J(u1, u2, u3) = u1
  auto f = free_two_step(3, ScalarField::R);
  auto broken = with_structure_constant(f, f.index_of("u1∧u2"), f.index_of("u3"), f.index_of("u1"), 1);
  CHECK(jacobi_defect(broken) > 0);
}

TEST_CASE("derived subalgebra, center, nilpotency class") {
  CHECK(derived_subalgebra(abelian(4)).rows() == 0);
  CHECK(derived_subalgebra(free_two_step(3, ScalarField::R)).rows() == 3);
  CHECK(derived_subalgebra(heisenberg(3, CompositionKind::C)).rows() == 1);
  CHECK(center(heisenberg(1, CompositionKind::C)).rows() == 1);
  CHECK(center(free_two_step(3, ScalarField::R)).rows() == 3);
  CHECK(center(abelian(5)).rows() == 5);
  CHECK(nilpotency_class(abelian(3)) == 1);
  CHECK(nilpotency_class(heisenberg(2, CompositionKind::H)) == 2);
  CHECK(nilpotency_class(octonion_double()) == 2);

  // filiform x, y, z, w: [x,y] = z, [x,z] = w has class 3
  LieAlgebraData::BracketTable t;
  t[{0, 1}] = {0, 0, 1, 0};
  t[{0, 2}] = {0, 0, 0, 1};
  LieAlgebraData fil({"x", "y", "z", "w"}, {3}, t);
  CHECK(nilpotency_class(fil) == 3);
  CHECK_FALSE(is_two_step_split(fil));
}

TEST_CASE("LieAlgebraData validation") {
  LieAlgebraData::BracketTable bad;
  bad[{0, 0}] = {1, 0};
  CHECK_THROWS_AS(LieAlgebraData({"a", "b"}, {}, bad), InvalidInput);
  LieAlgebraData::BracketTable twice;
  twice[{0, 1}] = {0, 0, 1};
  twice[{1, 0}] = {0, 0, 1};
  CHECK_THROWS_AS(LieAlgebraData({"a", "b", "c"}, {2}, twice), InvalidInput);
  CHECK_THROWS_AS(LieAlgebraData({"a"}, {1}, {}), InvalidInput);
  CHECK_THROWS_AS(LieAlgebraData({}, {}, {}), InvalidInput);
  // (j, i) input is stored as the negated (i, j) entry
  LieAlgebraData::BracketTable rev;
  rev[{1, 0}] = {0, 0, 1};
  LieAlgebraData alg({"a", "b", "c"}, {2}, rev);
  CHECK(alg.structure(0, 1) == RationalVector{0, 0, -1});
}

TEST_CASE("coordinate_subalgebra rejects non-closed subsets") {
  auto f = free_two_step(3, ScalarField::R);
  CHECK_THROWS_AS(coordinate_subalgebra(f, {f.index_of("u1"), f.index_of("u2")}, {}), InvalidInput);
  auto sub = coordinate_subalgebra(f, {f.index_of("u1∧u2"), f.index_of("u1"), f.index_of("u2")}, {f.index_of("u1∧u2")});
  CHECK(sub.dim() == 3);
  CHECK(sub.center_indices() == std::vector<std::size_t>{0});
}

TEST_CASE("JSON round trip is exact") {
  for (const auto& alg : {heisenberg(2, CompositionKind::H), octonion_double(), free_two_step(3, ScalarField::C)}) {
    auto j = algebra_to_json(alg);
    auto back = algebra_from_json(j);
    CHECK(back.labels() == alg.labels());
    CHECK(back.center_indices() == alg.center_indices());
    CHECK(back.brackets() == alg.brackets());
    CHECK(back.metadata() == alg.metadata());
    CHECK(algebra_to_json(back).dump() == j.dump());
  }
  auto j = algebra_to_json(heisenberg(1, CompositionKind::C));
  // Im(e0 conj e1) = -e1
  CHECK(j["brackets"][0]["coeffs"][0] == "-1/1");
  auto broken = j;
  broken["brackets"][0]["coeffs"][0] = "x";
  CHECK_THROWS_AS(algebra_from_json(broken), InvalidInput);
  broken = j;
  broken.erase("labels");
  CHECK_THROWS_AS(algebra_from_json(broken), InvalidInput);
}
