#include <doctest.h>

#include <cmath>
#include <random>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"
#include "nilharm/orbits.hpp"
#include "nilharm/oracles.hpp"
#include "nilharm/stepwise.hpp"

using namespace nilharm;

namespace {

Eigen::MatrixXd block_skew(const std::vector<double>& a, Eigen::Index kernel) {
  const auto n = static_cast<Eigen::Index>(2 * a.size()) + kernel;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(2 * j);
    m(i, i + 1) = a[j];
    m(i + 1, i) = -a[j];
  }
  return m;
}

std::vector<double> wedge_coordinates(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("skew_spectrum matches the eigenvalue oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> a{0.5 + t, 2.25, 4.0};
    Eigen::Index kernel = t % 3;
    auto o = oracle::random_orthogonal(6 + kernel, rng);
    Eigen::MatrixXd m = o.transpose() * block_skew(a, kernel) * o;
    m = 0.5 * (m - m.transpose()).eval();
    auto s = skew_spectrum(m);
    auto ref = oracle::skew_moduli(m);
    REQUIRE(s.a.size() == ref.size());
    for (std::size_t j = 0; j < ref.size(); ++j) CHECK(s.a[j] == doctest::Approx(ref[j]).epsilon(1e-10));
    CHECK(s.kernel_dim == static_cast<std::size_t>(kernel));
  }
  CHECK(skew_spectrum(Eigen::MatrixXd::Zero(3, 3)).kernel_dim == 3);
  Eigen::MatrixXd sym = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(skew_spectrum(sym), InvalidInput);
}

TEST_CASE("darboux_basis is an exact congruence") {
  std::mt19937_64 rng(22);
  for (std::size_t n : {2u, 3u, 5u, 6u}) {
    auto m = oracle::random_rational_skew(n, rng);
    auto d = darboux_basis(m);
    auto c = d.basis.transpose() * m * d.basis;
    RationalMatrix expect(n, n);
    for (std::size_t j = 0; j < d.a.size(); ++j) {
      expect(2 * j, 2 * j + 1) = -d.a[j];
      expect(2 * j + 1, 2 * j) = d.a[j];
    }
    CHECK(c == expect);
    CHECK(rank(d.basis) == n);
    CHECK(2 * d.a.size() + d.radical_dim == n);
    CHECK(rank(m) == 2 * d.a.size());
  }
  // rank-2 form in R^4
  RationalMatrix m(4, 4);
  m(0, 3) = 2;
  m(3, 0) = -2;
  auto d = darboux_basis(m);
  CHECK(d.a.size() == 1);
  CHECK(d.radical_dim == 2);
}

TEST_CASE("pf_nonsingular") {
  auto h = heisenberg(1, CompositionKind::C);
  RationalVector one{1}, zero{0};
  CHECK(pf_nonsingular(h, std::span<const Rational>(one)));
  CHECK_FALSE(pf_nonsingular(h, std::span<const Rational>(zero)));
  auto f3 = free_two_step(3, ScalarField::R);
  RationalVector l{1, 2, 3};
  CHECK_FALSE(pf_nonsingular(f3, std::span<const Rational>(l)));
  auto dec = decompose(ExceptionalCase::Case1, 3);
  CHECK(pf_nonsingular(dec, std::span<const Rational>(l)));
  RationalVector l12{0, 0, 5};  // only u2^u3: degenerate on span(u1, u2)
  CHECK_FALSE(pf_nonsingular(dec, std::span<const Rational>(l12)));
}

TEST_CASE("case1 representatives") {
  std::vector<double> lambda{3, 0, 0, 0, 0, 1};
  auto rep = orbit_representative(ExceptionalCase::Case1, lambda);
  REQUIRE(rep.invariants.size() == 2);
  CHECK(rep.invariants[0] == doctest::Approx(1));
  CHECK(rep.invariants[1] == doctest::Approx(3));
  CHECK(rep.kernel_dim == 0);
  CHECK_FALSE(rep.principal_decided);

  std::mt19937_64 rng(23);
  for (int n : {3, 4, 5}) {
    auto l = oracle::random_uniform(n * (n - 1) / 2, 2.0, rng);
    std::vector<double> lv(l.data(), l.data() + l.size());
    auto r = orbit_representative(ExceptionalCase::Case1, lv);
    CHECK(r.kernel_dim == static_cast<std::size_t>(n % 2));
    // invariant under lambda -> O^T lambda O
    auto o = oracle::random_orthogonal(n, rng);
    Eigen::MatrixXd moved = o.transpose() * wedge_functional_matrix(lv) * o;
    auto r2 = orbit_representative(ExceptionalCase::Case1, wedge_coordinates(moved));
    for (std::size_t j = 0; j < r.invariants.size(); ++j)
      CHECK(r2.invariants[j] == doctest::Approx(r.invariants[j]).epsilon(1e-10));
    // the normal form has the same invariants
    auto nf = orbit_representative(ExceptionalCase::Case1, normal_form_functional(r, n));
    for (std::size_t j = 0; j < r.invariants.size(); ++j)
      CHECK(nf.invariants[j] == doctest::Approx(r.invariants[j]).epsilon(1e-12));
  }
  std::vector<double> bad{1, 2};
  CHECK_THROWS_AS(orbit_representative(ExceptionalCase::Case1, bad), InvalidInput);
  std::vector<double> nan{1, std::nan(""), 0};
  CHECK_THROWS_AS(orbit_representative(ExceptionalCase::Case1, nan), InvalidInput);
}

TEST_CASE("case6 representatives are unitary invariants") {
  std::mt19937_64 rng(24);
  for (int n : {3, 4, 5}) {
    const int pairs = n * (n - 1) / 2;
    auto l = oracle::random_uniform(2 * pairs, 2.0, rng);
    std::vector<double> lv(l.data(), l.data() + l.size());
    auto r = orbit_representative(ExceptionalCase::Case6, lv);
    CHECK(r.invariants.size() == static_cast<std::size_t>(n / 2));
    CHECK(r.kernel_dim == static_cast<std::size_t>(n % 2));
    CHECK(r.last_phase == 0.0);

    // A -> U^T A U on the complex coefficient matrix
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) {
        a(i, j) = {lv[2 * k], -lv[2 * k + 1]};
        a(j, i) = -a(i, j);
      }
    Eigen::MatrixXcd g(n, n);
    std::normal_distribution<double> nd;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = {nd(rng), nd(rng)};
    Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    Eigen::MatrixXcd b = u.transpose() * a * u;
    std::vector<double> moved;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        moved.push_back(b(i, j).real());
        moved.push_back(-b(i, j).imag());
      }
    auto r2 = orbit_representative(ExceptionalCase::Case6, moved);
    for (std::size_t j = 0; j < r.invariants.size(); ++j)
      CHECK(r2.invariants[j] == doctest::Approx(r.invariants[j]).epsilon(1e-10));
    auto nf = orbit_representative(ExceptionalCase::Case6, normal_form_functional(r, n));
    for (std::size_t j = 0; j < r.invariants.size(); ++j)
      CHECK(nf.invariants[j] == doctest::Approx(r.invariants[j]).epsilon(1e-12));
  }
  std::vector<double> odd{1, 2, 3};
  CHECK_THROWS_AS(orbit_representative(ExceptionalCase::Case6, odd), InvalidInput);
}

TEST_CASE("case3 representatives") {
  OrbitRepresentative rep{ExceptionalCase::Case3, {1, 2, 3}, 0.0, 0, false};
  auto l = normal_form_functional(rep, 0);
  auto back = orbit_representative(ExceptionalCase::Case3, l);
  CHECK(back.invariants == std::vector<double>{1, 2, 3});
  CHECK(back.kernel_dim == 1);
  CHECK(orbit_representative(ExceptionalCase::Case3, std::vector<double>(7, 0.0)).kernel_dim == 7);
  std::vector<double> generic{1, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(orbit_representative(ExceptionalCase::Case3, generic), OutOfReach);
  std::vector<double> short_l{1, 2};
  CHECK_THROWS_AS(orbit_representative(ExceptionalCase::Case3, short_l), InvalidInput);
}
