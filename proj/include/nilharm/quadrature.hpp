#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nilharm {

enum class QuadratureRule { GaussHermite, GaussLegendre };

std::string to_string(QuadratureRule rule);
QuadratureRule parse_quadrature_rule(const std::string& text);

struct QuadratureSettings {
  QuadratureRule rule = QuadratureRule::GaussHermite;
  int initial_nodes = 4;       // per axis; kept even so no node sits on an axis origin
  int max_nodes_per_axis = 64;
  std::size_t node_budget = std::size_t{1} << 20;  // total integrand evaluations
  double rel_tol = 1e-8;
  double truncation_sigmas = 8.0;  // box half-width for Gauss-Legendre, in whitened units
};

/// Nodes and weights on the real line.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Weight exp(-x^2) on R (Golub-Welsch).
GaussRule gauss_hermite(int n);
/// Weight 1 on [-1, 1] (Golub-Welsch).
GaussRule gauss_legendre(int n);

/// Pairwise summation in index order: the result depends only on the
/// sequence, never on how evaluation was scheduled.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);
double pairwise_sum(std::span<const double> terms);

struct QuadratureResult {
  std::complex<double> value;
  std::size_t evaluations = 0;
  int nodes_per_axis = 0;
  bool converged = false;
  double last_change = 0.0;  // relative change at the final doubling
};

using Integrand = std::function<std::complex<double>(const Eigen::VectorXd&)>;

/// Tensor rule for \int_{R^k} h(p) dp with a fixed node count per axis, after
/// whitening p = center + L^{-T} u where envelope_precision = L L^T.
std::complex<double> integrate_whitened(const Integrand& h, const Eigen::MatrixXd& envelope_precision,
                                        const Eigen::VectorXd& center, QuadratureRule rule, int nodes,
                                        double truncation_sigmas);

/// Doubles the per-axis node count from settings.initial_nodes until the
/// value moves less than rel_tol, the per-axis cap is reached, or the next
/// level would exceed `budget` evaluations.
QuadratureResult integrate_adaptive(const Integrand& h, const Eigen::MatrixXd& envelope_precision,
                                    const Eigen::VectorXd& center, const QuadratureSettings& settings,
                                    std::size_t budget);

}  // namespace nilharm
