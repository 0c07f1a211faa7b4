#include "nilharm/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nilharm/error.hpp"

namespace nilharm {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

Eigen::LLT<Eigen::MatrixXd> checked_cholesky(const Eigen::MatrixXd& q) {
  if (q.rows() != q.cols()) throw InvalidInput("gaussian: precision must be square");
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, q.cwiseAbs().maxCoeff()))
    throw InvalidInput("gaussian: precision must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(q);
  if (llt.info() != Eigen::Success) throw InvalidInput("gaussian: precision is not positive definite");
  return llt;
}

double log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

GaussianTestFunction::GaussianTestFunction(Eigen::MatrixXd precision, Eigen::VectorXcd linear,
                                           std::complex<double> log_amplitude)
    : precision_(std::move(precision)), linear_(std::move(linear)), log_amp_(log_amplitude) {
  if (linear_.size() != precision_.rows()) throw InvalidInput("gaussian: linear term size mismatch");
  if (precision_.rows() > 0) checked_cholesky(precision_);
}

GaussianTestFunction GaussianTestFunction::centered(const Eigen::MatrixXd& precision,
                                                    const Eigen::VectorXd& mean, double log_amplitude) {
  if (mean.size() != precision.rows()) throw InvalidInput("gaussian: mean size mismatch");
  Eigen::VectorXd qb = precision * mean;
  return {precision, qb.cast<std::complex<double>>(), log_amplitude - 0.5 * mean.dot(qb)};
}

std::complex<double> GaussianTestFunction::log_value(const Eigen::VectorXd& y) const {
  if (y.size() != dim()) throw InvalidInput("gaussian: evaluation point size mismatch");
  return -0.5 * y.dot(precision_ * y) + (linear_.transpose() * y.cast<std::complex<double>>())(0) + log_amp_;
}

std::complex<double> GaussianTestFunction::operator()(const Eigen::VectorXd& y) const {
  return std::exp(log_value(y));
}

Eigen::VectorXd GaussianTestFunction::modulus_peak() const {
  if (dim() == 0) return {};
  return checked_cholesky(precision_).solve(linear_.real());
}

std::complex<double> GaussianTestFunction::integral() const {
  if (dim() == 0) return std::exp(log_amp_);
  auto llt = checked_cholesky(precision_);
  Eigen::VectorXcd sol(dim());
  sol.real() = llt.solve(linear_.real());
  sol.imag() = llt.solve(linear_.imag());
  std::complex<double> quad = 0.5 * (linear_.transpose() * sol)(0);
  return std::exp(log_amp_ + quad + 0.5 * static_cast<double>(dim()) * kLog2Pi - 0.5 * log_det(llt));
}

GaussianTestFunction GaussianTestFunction::scaled(std::complex<double> factor) const {
  if (factor == 0.0) throw InvalidInput("gaussian: cannot scale by zero");
  return {precision_, linear_, log_amp_ + std::log(factor)};
}

GaussianTestFunction pullback_affine(const GaussianTestFunction& g, const Eigen::MatrixXd& a,
                                     const Eigen::VectorXd& shift) {
  if (a.rows() != g.dim() || a.cols() != g.dim() || shift.size() != g.dim())
    throw InvalidInput("pullback_affine: shape mismatch");
  const Eigen::MatrixXd& q = g.precision();
  Eigen::MatrixXd q2 = symmetrize(a.transpose() * q * a);
  Eigen::VectorXcd l2 = a.transpose().cast<std::complex<double>>() *
                        (g.linear() - (q * shift).cast<std::complex<double>>());
  std::complex<double> k2 = g.log_amplitude() - 0.5 * shift.dot(q * shift) +
                            (g.linear().transpose() * shift.cast<std::complex<double>>())(0);
  return {q2, l2, k2};
}

GaussianTestFunction shifted(const GaussianTestFunction& g, const Eigen::VectorXd& b) {
  return pullback_affine(g, Eigen::MatrixXd::Identity(g.dim(), g.dim()), -b);
}

GaussianTestFunction fourier(const GaussianTestFunction& g) {
  const auto n = g.dim();
  if (n == 0) return g;
  auto llt = checked_cholesky(g.precision());
  Eigen::MatrixXd p = symmetrize(llt.solve(Eigen::MatrixXd::Identity(n, n)));
  Eigen::VectorXcd pl = p.cast<std::complex<double>>() * g.linear();
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> k = g.log_amplitude() + 0.5 * (g.linear().transpose() * pl)(0) +
                           0.5 * static_cast<double>(n) * kLog2Pi - 0.5 * log_det(llt);
  return {p, -i * pl, k};
}

GaussianTestFunction partial_fourier(const GaussianTestFunction& g, const std::vector<Eigen::Index>& keep,
                                     const Eigen::VectorXd& xi) {
  const auto n = g.dim();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (auto k : keep) {
    if (k < 0 || k >= n || kept[static_cast<std::size_t>(k)])
      throw InvalidInput("integrate_out: bad keep index");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!kept[static_cast<std::size_t>(i)]) out.push_back(i);
  if (xi.size() != static_cast<Eigen::Index>(out.size()))
    throw InvalidInput("partial_fourier: frequency size mismatch");
  const auto ky = static_cast<Eigen::Index>(keep.size());
  const auto kt = static_cast<Eigen::Index>(out.size());
  Eigen::MatrixXd qyy(ky, ky), qyt(ky, kt), qtt(kt, kt);
  Eigen::VectorXcd ly(ky), lt(kt);
  for (Eigen::Index a = 0; a < ky; ++a) {
    ly(a) = g.linear()(keep[a]);
    for (Eigen::Index b = 0; b < ky; ++b) qyy(a, b) = g.precision()(keep[a], keep[b]);
    for (Eigen::Index b = 0; b < kt; ++b) qyt(a, b) = g.precision()(keep[a], out[b]);
  }
  const std::complex<double> i(0.0, 1.0);
  for (Eigen::Index a = 0; a < kt; ++a) {
    lt(a) = g.linear()(out[a]) - i * xi(a);
    for (Eigen::Index b = 0; b < kt; ++b) qtt(a, b) = g.precision()(out[a], out[b]);
  }
  if (kt == 0) return {qyy, ly, g.log_amplitude()};
  auto llt = checked_cholesky(qtt);
  Eigen::MatrixXd ptt = symmetrize(llt.solve(Eigen::MatrixXd::Identity(kt, kt)));
  Eigen::MatrixXcd ptt_c = ptt.cast<std::complex<double>>();
  Eigen::MatrixXd q_new = symmetrize(qyy - qyt * ptt * qyt.transpose());
  Eigen::VectorXcd l_new = ly - qyt.cast<std::complex<double>>() * (ptt_c * lt);
  std::complex<double> k_new = g.log_amplitude() + 0.5 * (lt.transpose() * ptt_c * lt)(0) +
                               0.5 * static_cast<double>(kt) * kLog2Pi - 0.5 * log_det(llt);
  return {q_new, l_new, k_new};
}

GaussianTestFunction integrate_out(const GaussianTestFunction& g, const std::vector<Eigen::Index>& keep) {
  const auto kt = g.dim() - static_cast<Eigen::Index>(keep.size());
  return partial_fourier(g, keep, Eigen::VectorXd::Zero(std::max<Eigen::Index>(kt, 0)));
}

}  // namespace nilharm
