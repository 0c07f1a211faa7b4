#include <doctest.h>

#include <random>
#include <vector>

#include "nilharm/composition.hpp"
#include "nilharm/error.hpp"

using namespace nilharm;

namespace {

const auto O = CompositionKind::O;

CompositionElement e(int i) { return CompositionElement::unit(O, static_cast<std::size_t>(i)); }

CompositionElement random_element(CompositionKind k, std::mt19937_64& rng, bool imaginary = false) {
  std::uniform_int_distribution<int> d(-5, 5);
  RationalVector c(real_dimension(k));
  for (auto& x : c) x = d(rng);
  if (imaginary) c[0] = 0;
  return {k, c};
}

}  // namespace

TEST_CASE("octonion basis products") {
  CHECK(multiply(e(1), e(2)) == e(3));
  CHECK(multiply(e(2), e(3)) == e(1));
  CHECK(multiply(e(2), e(1)) == -e(3));
  CHECK(multiply(e(6), e(7)) == e(1));
  CHECK(multiply(e(3), e(4)) == e(7));
  for (int j = 1; j <= 7; ++j) CHECK(multiply(e(j), e(j)) == -e(0));
  CHECK(to_string(multiply(e(4), e(3))) == "-e7");
  CHECK(basis_product(3, 5) == BasisProduct{1, 6});
}

TEST_CASE("unit, conjugation, imaginary part") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 5; ++t) {
    auto x = random_element(O, rng);
    CHECK(multiply(e(0), x) == x);
    CHECK(multiply(x, e(0)) == x);
  }
  CHECK(conj(e(0)) == e(0));
  CHECK(conj(e(5)) == -e(5));
  CHECK(im(e(0)) == CompositionElement::zero(O));
  CHECK(im(Rational(3) * e(0) + Rational(2) * e(4)) == Rational(2) * e(4));
  CHECK(im(multiply(e(3), e(5))) == e(6));
}

TEST_CASE("Im(u conj v) = -Im(uv) for imaginary u, v") {
  std::mt19937_64 rng(3);
  for (auto k : {CompositionKind::C, CompositionKind::H, CompositionKind::O})
    for (int t = 0; t < 10; ++t) {
      auto u = random_element(k, rng, true), v = random_element(k, rng, true);
      CHECK(im(multiply(u, conj(v))) == -im(multiply(u, v)));
    }
}

TEST_CASE("norm is multiplicative and the octonions are alternative") {
  std::mt19937_64 rng(4);
  for (auto k : {CompositionKind::C, CompositionKind::H, CompositionKind::O})
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(k, rng), y = random_element(k, rng);
      CHECK(norm(multiply(x, y)) == norm(x) * norm(y));
      CHECK(multiply(multiply(x, x), y) == multiply(x, multiply(x, y)));
      CHECK(multiply(multiply(y, x), x) == multiply(y, multiply(x, x)));
    }
}

TEST_CASE("hermitian_inner") {
  std::vector<CompositionElement> one{e(0)};
  CHECK(hermitian_inner(one, one) == e(0));
  std::mt19937_64 rng(5);
  for (auto k : {CompositionKind::C, CompositionKind::H, CompositionKind::O}) {
    std::vector<CompositionElement> u;
    for (int i = 0; i < 3; ++i) u.push_back(random_element(k, rng));
    CHECK(im(hermitian_inner(u, u)) == CompositionElement::zero(k));
  }
  // (x + iy) conj(x' + iy') has imaginary part x'y - xy'
  const auto C = CompositionKind::C;
  std::vector<CompositionElement> a{{C, {2, 3}}}, b{{C, {5, -1}}};
  CHECK(im(hermitian_inner(a, b)) == CompositionElement(C, {0, Rational(5 * 3 - 2 * -1)}));
  std::vector<CompositionElement> two{e(0), e(1)};
  CHECK_THROWS_AS(hermitian_inner(one, two), InvalidInput);
}

TEST_CASE("composition kinds") {
  CHECK(real_dimension(CompositionKind::H) == 4);
  CHECK(parse_composition_kind("O") == O);
  CHECK_THROWS_AS(parse_composition_kind("S"), InvalidInput);
  CHECK_THROWS_AS(multiply(e(1), CompositionElement::unit(CompositionKind::C, 1)), InvalidInput);
}
