#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace nilharm {

/// g(Y) = exp(-1/2 Y^T Q Y + l^T Y + k) with Q real symmetric positive
/// definite and l, k complex. The complex linear term records the phase
/// picked up under Fourier transforms; shifts and affine pullbacks keep the
/// form. No conjugation appears anywhere (l^T Y, not l^H Y).
class GaussianTestFunction {
 public:
  GaussianTestFunction() = default;
  GaussianTestFunction(Eigen::MatrixXd precision, Eigen::VectorXcd linear,
                       std::complex<double> log_amplitude);

  /// amp * exp(-1/2 (Y - b)^T Q (Y - b)) with amp = exp(log_amplitude).
  static GaussianTestFunction centered(const Eigen::MatrixXd& precision,
                                       const Eigen::VectorXd& mean, double log_amplitude = 0.0);

  Eigen::Index dim() const { return precision_.rows(); }
  const Eigen::MatrixXd& precision() const { return precision_; }
  const Eigen::VectorXcd& linear() const { return linear_; }
  std::complex<double> log_amplitude() const { return log_amp_; }

  std::complex<double> log_value(const Eigen::VectorXd& y) const;
  std::complex<double> operator()(const Eigen::VectorXd& y) const;

  /// Point where |g| peaks: Q^{-1} Re(l).
  Eigen::VectorXd modulus_peak() const;

  /// Integral over R^dim.
  std::complex<double> integral() const;

  GaussianTestFunction scaled(std::complex<double> factor) const;

 private:
  Eigen::MatrixXd precision_;
  Eigen::VectorXcd linear_;
  std::complex<double> log_amp_{0.0, 0.0};
};

/// Y -> g(A Y + s); A must be invertible.
GaussianTestFunction pullback_affine(const GaussianTestFunction& g, const Eigen::MatrixXd& a,
                                     const Eigen::VectorXd& shift);

/// Y -> g(Y - b).
GaussianTestFunction shifted(const GaussianTestFunction& g, const Eigen::VectorXd& b);

/// ĝ(eta) = \int g(Y) exp(-i <eta, Y>) dY over plain Lebesgue measure.
GaussianTestFunction fourier(const GaussianTestFunction& g);

/// Integrate out every coordinate not listed in `keep`; the result is a
/// function of the kept coordinates in the order given.
GaussianTestFunction integrate_out(const GaussianTestFunction& g, const std::vector<Eigen::Index>& keep);

/// \int g(Y) exp(-i <xi, Y_T>) dY_T over the coordinates T not in `keep`, as
/// a function of the kept coordinates. `xi` is indexed like T (ascending).
GaussianTestFunction partial_fourier(const GaussianTestFunction& g, const std::vector<Eigen::Index>& keep,
                                     const Eigen::VectorXd& xi);

}  // namespace nilharm
