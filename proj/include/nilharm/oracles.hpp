#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nilharm/rational.hpp"

// Reference computations that share no code with the library paths they check.
namespace nilharm::oracle {

/// Determinant by fraction-based Gaussian elimination with row swaps.
Rational determinant(const RationalMatrix& m);

/// Pfaffian by expansion along the first row (sum over perfect matchings).
Rational pfaffian_expansion(const RationalMatrix& m);

/// |imaginary parts| of the eigenvalues of a real skew matrix, paired and
/// sorted ascending (floor(n/2) values).
std::vector<double> skew_moduli(const Eigen::MatrixXd& m);

/// Random skew matrix with entries p/q, |p| <= 6, 1 <= q <= 4.
RationalMatrix random_rational_skew(std::size_t n, std::mt19937_64& rng);
/// Random matrix with entries p/q as above.
RationalMatrix random_rational_matrix(std::size_t n, std::mt19937_64& rng);
/// Haar-ish orthogonal matrix from the QR factor of a Gaussian matrix.
Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::mt19937_64& rng);
/// Symmetric positive definite matrix A^T A / n + I / 2.
Eigen::MatrixXd random_spd(Eigen::Index n, std::mt19937_64& rng);
Eigen::VectorXd random_uniform(Eigen::Index n, double half_width, std::mt19937_64& rng);

}  // namespace nilharm::oracle
