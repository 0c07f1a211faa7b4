#include "nilharm/oracles.hpp"

#include <algorithm>

#include "nilharm/error.hpp"

namespace nilharm::oracle {

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant: square matrix required");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

namespace {

Rational expand(const RationalMatrix& m, std::vector<std::size_t>& rest) {
  if (rest.empty()) return 1;
  if (rest.size() % 2 == 1) return 0;
  std::size_t first = rest.front();
  Rational total = 0;
  for (std::size_t k = 1; k < rest.size(); ++k) {
    std::size_t partner = rest[k];
    if (sgn(m(first, partner)) == 0) continue;
    std::vector<std::size_t> sub;
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != k) sub.push_back(rest[t]);
    Rational term = m(first, partner) * expand(m, sub);
    if (k % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

Rational pfaffian_expansion(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("pfaffian: square matrix required");
  std::vector<std::size_t> all(m.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return expand(m, all);
}

std::vector<double> skew_moduli(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<double> im;
  for (Eigen::Index i = 0; i < m.rows(); ++i) im.push_back(std::abs(es.eigenvalues()(i).imag()));
  std::sort(im.begin(), im.end());
  // Each modulus appears twice (conjugate pair); an odd size adds one zero.
  std::vector<double> out;
  std::size_t start = im.size() % 2;
  for (std::size_t i = start; i + 1 < im.size(); i += 2) out.push_back(0.5 * (im[i] + im[i + 1]));
  return out;
}

namespace {

Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  int p = num(rng);
  int q = den(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

RationalMatrix random_rational_skew(std::size_t n, std::mt19937_64& rng) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_entry(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

RationalMatrix random_rational_matrix(std::size_t n, std::mt19937_64& rng) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_entry(rng);
  return m;
}

Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd random_spd(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = normal(rng);
  Eigen::MatrixXd s = a.transpose() * a / static_cast<double>(n) + 0.5 * Eigen::MatrixXd::Identity(n, n);
  return 0.5 * (s + s.transpose());
}

Eigen::VectorXd random_uniform(Eigen::Index n, double half_width, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

}  // namespace nilharm::oracle
