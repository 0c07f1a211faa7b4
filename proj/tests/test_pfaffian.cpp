#include <doctest.h>

#include <random>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"
#include "nilharm/oracles.hpp"
#include "nilharm/pfaffian.hpp"
#include "nilharm/polynomial.hpp"

using namespace nilharm;

namespace {

RationalMatrix skew(std::initializer_list<std::initializer_list<long>> upper, std::size_t n) {
  RationalMatrix m(n, n);
  std::size_t i = 0;
  for (const auto& row : upper) {
    std::size_t j = i + 1;
    for (long v : row) {
      m(i, j) = v;
      m(j, i) = -v;
      ++j;
    }
    ++i;
  }
  return m;
}

RationalVector random_point(std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-7, 7);
  RationalVector p(k);
  for (auto& x : p) x = d(rng);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto p = (x + y) * (x + y);
  CHECK(p.to_string() == "z1^2 + 2*z1*z2 + z2^2");
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + Polynomial::constant(2, 1)).is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK((p - p).total_degree() == -1);
  CHECK((p - p).to_string() == "0");
  RationalVector at{2, -3};
  CHECK(p.evaluate(std::span<const Rational>(at)) == 1);
  std::vector<double> atd{0.5, 0.25};
  CHECK(p.evaluate(std::span<const double>(atd)) == doctest::Approx(0.5625));
  CHECK(p.coefficient({1, 1}) == 2);
  // substitute x -> y, y -> x leaves a symmetric polynomial alone
  CHECK(p.substitute({y, x}) == p);
  CHECK((Rational(1, 3) * x - y).to_string({"a", "b"}) == "1/3*a - b");
}

TEST_CASE("pfaffian small cases") {
  CHECK(pfaffian(to_skew_form(skew({{5}}, 2))) == 5);
  // m01 m23 - m02 m13 + m03 m12
  CHECK(pfaffian(to_skew_form(skew({{1, 2, 3}, {4, 5}, {6}}, 4))) == 1 * 6 - 2 * 5 + 3 * 4);
  CHECK(pfaffian(to_skew_form(skew({{1, 2}, {3}}, 3))) == 0);
  CHECK(pfaffian(to_skew_form(RationalMatrix(0, 0))) == 1);
  RationalMatrix bad = skew({{1}}, 2);
  bad(1, 0) = 2;
  CHECK_THROWS_AS(pfaffian(to_skew_form(bad)), InvalidInput);
}

TEST_CASE("pfaffian agrees with expansion and squares to the determinant") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 4u, 6u, 8u})
    for (int t = 0; t < 5; ++t) {
      auto m = oracle::random_rational_skew(n, rng);
      auto pf = pfaffian(to_skew_form(m));
      CHECK(pf == oracle::pfaffian_expansion(m));
      CHECK(pf * pf == oracle::determinant(m));
    }
}

TEST_CASE("Pf polynomials of Heisenberg type algebras") {
  std::mt19937_64 rng(12);
  for (auto [n, k] : {std::pair{1, CompositionKind::C}, {2, CompositionKind::C}, {1, CompositionKind::H},
                      {2, CompositionKind::H}, {1, CompositionKind::O}}) {
    auto alg = heisenberg(n, k);
    auto pf = pf_polynomial(alg);
    const int half_v = n * static_cast<int>(real_dimension(k)) / 2;
    CHECK(pf.total_degree() == half_v);
    CHECK(pf.is_homogeneous());
    // b_lambda^2 = -|lambda|^2, so Pf^2 = |lambda|^{dim v}
    for (int t = 0; t < 3; ++t) {
      auto p = random_point(alg.center_indices().size(), rng);
      Rational r2 = 0;
      for (const auto& c : p) r2 += c * c;
      Rational v = pf.evaluate(std::span<const Rational>(p)), expect = 1;
      for (int j = 0; j < half_v; ++j) expect *= r2;
      CHECK(v * v == expect);
    }
    auto si = is_square_integrable(alg);
    CHECK(si.square_integrable);
    REQUIRE(si.witness);
    CHECK(sgn(pf.evaluate(std::span<const Rational>(*si.witness))) != 0);
  }
}

TEST_CASE("Pf of the free 2-step algebras") {
  auto f4 = free_two_step(4, ScalarField::R);
  auto pf = pf_polynomial(f4);
  CHECK(pf.total_degree() == 2);
  CHECK(pf.terms().size() == 3);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 5; ++t) {
    auto p = random_point(6, rng);
    auto b = to_matrix(b_matrix(f4, std::span<const Rational>(p)));
    auto v = pf.evaluate(std::span<const Rational>(p));
    CHECK(v * v == oracle::determinant(b));
  }
  for (int n : {3, 5}) {
    CHECK(pf_polynomial(free_two_step(n, ScalarField::R)).is_zero());
    auto si = is_square_integrable(free_two_step(n, ScalarField::R));
    CHECK_FALSE(si.square_integrable);
    CHECK_FALSE(si.witness);
  }
  CHECK_FALSE(is_square_integrable(free_two_step(3, ScalarField::C)).square_integrable);
  CHECK_FALSE(is_square_integrable(octonion_double()).square_integrable);
  CHECK(is_square_integrable(free_two_step(2, ScalarField::C)).square_integrable);
}

TEST_CASE("symbolic and numeric b matrices agree") {
  auto alg = heisenberg(2, CompositionKind::H);
  auto vars = center_variables(alg);
  auto sym = b_matrix(alg, std::span<const Polynomial>(vars));
  RationalVector p{1, -2, 3};
  auto num = b_matrix(alg, std::span<const Rational>(p));
  REQUIRE(sym.size() == num.size());
  for (std::size_t i = 0; i < sym.size(); ++i)
    for (std::size_t j = 0; j < sym.size(); ++j)
      CHECK(sym(i, j).evaluate(std::span<const Rational>(p)) == num(i, j));
  CHECK(num.labels() == std::vector<std::string>(alg.labels().begin() + 3, alg.labels().end()));
  RationalVector short_lambda{1, 2};
  CHECK_THROWS_AS(b_matrix(alg, std::span<const Rational>(short_lambda)), InvalidInput);
}

TEST_CASE("nonvanishing_point") {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto p = x * y - Polynomial::constant(2, 1);  // vanishes at (1, 1)
  auto w = nonvanishing_point(p);
  REQUIRE(w);
  CHECK(sgn(p.evaluate(std::span<const Rational>(*w))) != 0);
  CHECK(*w == RationalVector{1, 2});
  CHECK_FALSE(nonvanishing_point(Polynomial(2)));
}
