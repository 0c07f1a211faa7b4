#include "nilharm/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "nilharm/error.hpp"
#include "nilharm/pfaffian.hpp"

namespace nilharm {

namespace {

int triangular_root(std::size_t len) {
  // len = n(n-1)/2
  int n = static_cast<int>(std::lround((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(len))) / 2.0));
  if (static_cast<std::size_t>(n * (n - 1) / 2) != len)
    throw InvalidInput("functional length is not n(n-1)/2 for any n");
  return n;
}

}  // namespace

SkewSpectrum skew_spectrum(const Eigen::MatrixXd& m, double rank_tol) {
  if (m.rows() != m.cols()) throw InvalidInput("skew_spectrum: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidInput("skew_spectrum: matrix is not antisymmetric");
  const auto n = static_cast<std::size_t>(m.rows());
  SkewSpectrum out;
  if (n == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  Eigen::VectorXd s = svd.singularValues();  // descending, paired for skew input
  const double tol = rank_tol * std::max(1.0, s(0));
  std::size_t nonzero_pairs = 0;
  for (std::size_t j = 0; j < n / 2; ++j) {
    double v = 0.5 * (s(static_cast<Eigen::Index>(2 * j)) + s(static_cast<Eigen::Index>(2 * j + 1)));
    if (s(static_cast<Eigen::Index>(2 * j + 1)) <= tol) v = 0.0;
    if (v > 0.0) ++nonzero_pairs;
    out.a.push_back(v);
  }
  std::sort(out.a.begin(), out.a.end());
  out.kernel_dim = n - 2 * nonzero_pairs;
  return out;
}

DarbouxForm darboux_basis(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("darboux_basis: matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != -m(j, i)) throw InvalidInput("darboux_basis: matrix is not antisymmetric");

  auto omega = [&](const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(y[j]) != 0) s += x[i] * m(i, j) * y[j];
    }
    return s;
  };

  std::vector<RationalVector> pool;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n);
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  DarbouxForm out;
  std::vector<RationalVector> columns;
  while (true) {
    std::size_t px = pool.size(), py = pool.size();
    for (std::size_t i = 0; i < pool.size() && px == pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (sgn(omega(pool[i], pool[j])) != 0) {
          px = i;
          py = j;
          break;
        }
    if (px == pool.size()) break;
    RationalVector x = pool[px], y = pool[py];
    const Rational wxy = omega(x, y);
    out.a.push_back(-wxy);  // block (0, -a; a, 0) in columns (x, y)
    columns.push_back(x);
    columns.push_back(y);
    std::vector<RationalVector> rest;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (k == px || k == py) continue;
      RationalVector v = pool[k];
      const Rational alpha = omega(v, y) / wxy;
      const Rational beta = -omega(v, x) / wxy;
      for (std::size_t i = 0; i < n; ++i) v[i] -= alpha * x[i] + beta * y[i];
      rest.push_back(std::move(v));
    }
    pool = std::move(rest);
  }
  out.radical_dim = pool.size();
  for (auto& v : pool) columns.push_back(std::move(v));
  out.basis = RationalMatrix::from_rows(columns, n).transpose();
  return out;
}

bool pf_nonsingular(const LieAlgebraData& alg, std::span<const Rational> lambda) {
  return sgn(pfaffian(b_matrix(alg, lambda))) != 0;
}

bool pf_nonsingular(const StepwiseDecomposition& dec, std::span<const Rational> lambda) {
  return pf_nonsingular(l1_algebra(dec), lambda);
}

Eigen::MatrixXd wedge_functional_matrix(std::span<const double> lambda) {
  const int n = triangular_root(lambda.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = lambda[k];
      m(j, i) = -lambda[k];
      ++k;
    }
  return m;
}

OrbitRepresentative orbit_representative(ExceptionalCase c, std::span<const double> lambda) {
  for (double v : lambda)
    if (!std::isfinite(v)) throw InvalidInput("orbit_representative: non-finite functional");
  OrbitRepresentative rep{c, {}, 0.0, 0, false};
  switch (c) {
    case ExceptionalCase::Case1: {
      auto spec = skew_spectrum(wedge_functional_matrix(lambda));
      rep.invariants = spec.a;
      rep.kernel_dim = spec.kernel_dim;
      return rep;
    }
    case ExceptionalCase::Case6: {
      if (lambda.size() % 2 != 0) throw InvalidInput("case6 functional needs (re, im) pairs");
      const int n = triangular_root(lambda.size() / 2);
      // lambda(z) = Re(a z) with a = re - i*im per coordinate
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
      std::size_t k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::complex<double> v(lambda[2 * k], -lambda[2 * k + 1]);
          a(i, j) = v;
          a(j, i) = -v;
          ++k;
        }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
      Eigen::VectorXd s = svd.singularValues();
      const double tol = 1e-10 * std::max(1.0, n ? s(0) : 0.0);
      std::size_t nonzero = 0;
      for (int j = 0; j < n / 2; ++j) {
        double v = 0.5 * (s(2 * j) + s(2 * j + 1));
        if (s(2 * j + 1) <= tol) v = 0.0;
        if (v > 0.0) ++nonzero;
        rep.invariants.push_back(v);
      }
      std::sort(rep.invariants.begin(), rep.invariants.end());
      rep.kernel_dim = static_cast<std::size_t>(n) - 2 * nonzero;
      // For odd n the kernel direction absorbs the determinant phase of the
      // unitary congruence, so the special unitary normal form is real.
      rep.last_phase = 0.0;
      return rep;
    }
    case ExceptionalCase::Case3: {
      if (lambda.size() != 7) throw InvalidInput("case3 functional needs 7 coefficients");
      // normal position: support on (e3,0), (e6,0), (e2,0)
      for (std::size_t k : {0u, 3u, 4u, 6u})
        if (lambda[k] != 0.0)
          throw OutOfReach("case3: functional is not in the lambda_a span (not in implemented normal-form reach)");
      rep.invariants = {lambda[2], lambda[5], lambda[1]};
      // b_lambda on the full 7-dimensional complement is lambda x (.), rank 6 unless lambda = 0
      const bool zero = lambda[1] == 0.0 && lambda[2] == 0.0 && lambda[5] == 0.0;
      rep.kernel_dim = zero ? 7 : 1;
      return rep;
    }
  }
  return rep;
}

std::vector<double> normal_form_functional(const OrbitRepresentative& rep, int n) {
  switch (rep.case_tag) {
    case ExceptionalCase::Case1:
    case ExceptionalCase::Case6: {
      if (n < 2 || static_cast<std::size_t>(n / 2) < rep.invariants.size())
        throw InvalidInput("normal_form_functional: n too small for the invariants");
      const bool complex = rep.case_tag == ExceptionalCase::Case6;
      const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
      std::vector<double> out(complex ? 2 * pairs : pairs, 0.0);
      for (std::size_t j = 0; j < rep.invariants.size(); ++j) {
        // coordinate of u_{2j+1} ^ u_{2j+2}
        const int i = static_cast<int>(2 * j);
        const auto k = static_cast<std::size_t>(i * n - i * (i + 1) / 2);
        double value = rep.invariants[j];
        if (complex) {
          const bool last = j + 1 == rep.invariants.size();
          const double phase = last ? rep.last_phase : 0.0;
          out[2 * k] = value * std::cos(phase);
          out[2 * k + 1] = -value * std::sin(phase);
        } else {
          out[k] = value;
        }
      }
      return out;
    }
    case ExceptionalCase::Case3: {
      std::vector<double> out(7, 0.0);
      out[2] = rep.invariants.at(0);
      out[5] = rep.invariants.at(1);
      out[1] = rep.invariants.at(2);
      return out;
    }
  }
  return {};
}

}  // namespace nilharm
