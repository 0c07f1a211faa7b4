#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"
#include "nilharm/inversion.hpp"
#include "nilharm/oracles.hpp"

using namespace nilharm;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

LieAlgebraData filiform4() {
  // [x, y] = z, [x, z] = w
  LieAlgebraData::BracketTable t;
  t[{0, 1}] = RationalVector{0, 0, 1, 0};
  t[{0, 2}] = RationalVector{0, 0, 0, 1};
  return {{"x", "y", "z", "w"}, {3}, t};
}

AlgebraVector random_rational(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  AlgebraVector a = AlgebraVector::zero(n);
  for (auto& c : a.coefficients) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return a;
}

Eigen::VectorXd to_double(const AlgebraVector& a) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a.coefficients[i].get_d();
  return v;
}

GaussianTestFunction test_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::VectorXcd l(n);
  auto re = oracle::random_uniform(n, 0.4, rng), imv = oracle::random_uniform(n, 0.8, rng);
  for (Eigen::Index i = 0; i < n; ++i) l(i) = {re(i), imv(i)};
  return {oracle::random_spd(n, rng), l, 0.0};
}

bool close(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("group law") {
  std::mt19937_64 rng(51);
  for (const auto& alg : {free_two_step(3, ScalarField::R), heisenberg(1, CompositionKind::H),
                          octonion_double()}) {
    const auto n = alg.dim();
    FloatAlgebra fa(alg);
    for (int t = 0; t < 100; ++t) {
      auto x = random_rational(n, rng), y = random_rational(n, rng), z = random_rational(n, rng);
      CHECK(group_multiply(alg, group_multiply(alg, x, y), z) == group_multiply(alg, x, group_multiply(alg, y, z)));
      CHECK(group_multiply(alg, x, Rational(-1) * x).is_zero());
      if (t < 10) {
        auto xy = to_double(group_multiply(alg, x, y));
        CHECK((group_multiply(fa, to_double(x), to_double(y)) - xy).norm() < 1e-12 * (1 + xy.norm()));
      }
    }
  }
  CHECK_THROWS_AS(FloatAlgebra{filiform4()}, InvalidInput);
  auto f = filiform4();
  CHECK_THROWS_AS(group_multiply(f, AlgebraVector::basis(4, 0), AlgebraVector::basis(4, 1)), InvalidInput);
}

TEST_CASE("right translation") {
  std::mt19937_64 rng(52);
  auto alg = heisenberg(1, CompositionKind::H);
  FloatAlgebra fa(alg);
  auto f = test_gaussian(7, rng);
  auto x = oracle::random_uniform(7, 1.0, rng);
  auto rx = right_translate(fa, f, x);
  for (int t = 0; t < 5; ++t) {
    auto y = oracle::random_uniform(7, 1.0, rng);
    CHECK(close(rx(y), f(group_multiply(fa, y, x)), 1e-12));
  }
}

TEST_CASE("Plancherel data") {
  CHECK(PlancherelData(heisenberg(1, CompositionKind::C)).constant() == 2.0);
  CHECK(PlancherelData(heisenberg(1, CompositionKind::H)).constant() == 8.0);
  CHECK(PlancherelData(heisenberg(2, CompositionKind::H)).constant() == 384.0);
  CHECK(PlancherelData(abelian(2)).constant() == 1.0);
  CHECK_THROWS_AS(PlancherelData(free_two_step(3, ScalarField::R)), NotApplicable);
  PlancherelData h(heisenberg(1, CompositionKind::H));
  Eigen::Vector3d l(1, 2, 2);
  CHECK(std::abs(std::abs(h.pf(l)) - 9.0) < 1e-12);  // |lambda|^2
}

TEST_CASE("orbital character on h_{1;C} against a direct z-integral") {
  // Theta(lambda) = (c |Pf|)^{-1} \int g(z, 0) exp(-i lambda z) dz
  auto alg = heisenberg(1, CompositionKind::C);
  PlancherelData data(alg);
  std::mt19937_64 rng(53);
  auto g = test_gaussian(3, rng);
  OrbitalCharacter theta(data, g);
  for (double lam : {-1.3, 0.4, 2.0}) {
    Eigen::VectorXd l = Eigen::VectorXd::Constant(1, lam);
    const double h = 0.01;
    cd s = 0;
    for (int k = -2000; k <= 2000; ++k) {
      Eigen::Vector3d y(k * h, 0, 0);
      s += g(y) * std::exp(cd(0, -lam * k * h));
    }
    cd expect = s * h / (data.constant() * std::abs(data.pf(l)));
    CHECK(close(theta(l), expect, 1e-10));
    CHECK(close(orbital_character(data, l, g), expect, 1e-10));
    auto q = orbital_character_quadrature(data, l, g, QuadratureSettings{});
    CHECK(q.converged);
    CHECK(close(q.value, expect, 1e-8));
  }
  CHECK_THROWS_AS(theta(Eigen::VectorXd::Zero(1)), SingularFunctional);
  CHECK(std::isfinite(std::abs(theta.orbit_integral(Eigen::VectorXd::Zero(1)))));
}

TEST_CASE("flat inversion") {
  std::mt19937_64 rng(54);
  for (const auto& alg : {heisenberg(1, CompositionKind::C), heisenberg(1, CompositionKind::H),
                          free_two_step(2, ScalarField::C), abelian(2)}) {
    PlancherelData data(alg);
    const auto n = static_cast<Eigen::Index>(alg.dim());
    auto f = test_gaussian(n, rng);
    for (int t = 0; t < 3; ++t) {
      auto x = oracle::random_uniform(n, 1.0, rng);
      CHECK(close(flat_inversion_closed_form(data, f, x), f(x), 1e-12));
      auto r = invert_flat(data, f, x, QuadratureSettings{});
      CHECK(r.converged);
      CHECK(r.rel_error < 1e-8);
      CHECK(r.exact == f(x));
      CHECK(r.evaluations > 0);
    }
  }
  std::mt19937_64 rng2(55);
  auto g = test_gaussian(3, rng2);
  CHECK(close(euclidean_inversion_at_zero(g), g(Eigen::VectorXd::Zero(3)), 1e-13));
}

TEST_CASE("stepwise constants and charts") {
  CHECK(StepwiseContext(decompose(ExceptionalCase::Case1, 3)).prefactor() ==
        doctest::Approx(2 / std::sqrt(2 * pi)).epsilon(1e-14));
  CHECK(StepwiseContext(decompose(ExceptionalCase::Case6, 3)).prefactor() ==
        doctest::Approx(8 / (2 * pi)).epsilon(1e-14));
  CHECK(StepwiseContext(decompose(ExceptionalCase::Case3)).prefactor() ==
        doctest::Approx(48 / std::sqrt(2 * pi)).epsilon(1e-14));

  auto alg = free_two_step(3, ScalarField::R);
  CHECK_THROWS_AS(StepwiseContext(make_decomposition(alg, {alg.index_of("u1"), alg.index_of("u2")})), InvalidInput);

  std::mt19937_64 rng(56);
  StepwiseContext ctx(decompose(ExceptionalCase::Case6, 3));
  const auto n = ctx.structure().dim();
  for (int t = 0; t < 5; ++t) {
    auto x = oracle::random_uniform(n, 2.0, rng);
    CHECK((ctx.from_split_coordinates(ctx.split_coordinates(x)) - x).norm() < 1e-12);
    auto [x1, x2] = factor_point(ctx, x);
    CHECK((group_multiply(ctx.structure(), x1, x2) - x).norm() < 1e-12);
  }
}

TEST_CASE("stepwise inversion reproduces f on case1") {
  std::mt19937_64 rng(57);
  StepwiseContext ctx(decompose(ExceptionalCase::Case1, 3));
  auto f_split = test_gaussian(6, rng);
  QuadratureSettings outer, inner;
  for (int t = 0; t < 2; ++t) {
    auto x = oracle::random_uniform(6, 1.0, rng);
    auto r = invert_stepwise(ctx, f_split, x, outer, inner);
    CHECK(r.rel_error < 1e-8);
    CHECK(close(r.exact, f_split(ctx.split_coordinates(x)), 1e-13));
    CHECK(r.inner_nodes_per_axis > 0);
  }
  CHECK_THROWS_AS(invert_stepwise(ctx, test_gaussian(5, rng), Eigen::VectorXd::Zero(6), outer, inner), InvalidInput);
}

TEST_CASE("orbit-space quadrature check") {
  // \int exp(-r^2) r^2 4 pi r^2 dr = 3 pi^{3/2} / 2
  auto h = [](double r) { return std::exp(-r * r); };
  auto rep = orbit_space_quadrature_check(heisenberg(1, CompositionKind::H), h, 8.0, 64);
  CHECK(rep.radial == doctest::Approx(3 * std::pow(pi, 1.5) / 2).epsilon(1e-10));
  CHECK(rep.rel_difference < 1e-8);
  // R / 2 = 4 still leaves about e^{-16} 4^3 of the tail
  CHECK(rep.truncation_estimate < 1e-4);
  // Pf = lambda_1 lambda_2 lambda_3 is not rotation invariant
  auto sum = direct_sum({heisenberg(1, CompositionKind::C), heisenberg(1, CompositionKind::C),
                         heisenberg(1, CompositionKind::C)});
  CHECK_THROWS_AS(orbit_space_quadrature_check(sum, h, 8.0, 32), InvalidInput);
  CHECK_THROWS_AS(orbit_space_quadrature_check(heisenberg(1, CompositionKind::C), h, 8.0, 32), InvalidInput);
}
