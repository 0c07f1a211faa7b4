#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nilharm/algebra.hpp"
#include "nilharm/stepwise.hpp"

namespace nilharm {

struct SkewSpectrum {
  std::vector<double> a;  // floor(n/2) values, ascending, a_j >= 0
  std::size_t kernel_dim = 0;
};

/// Eigenvalues of a real skew matrix are {+-i a_j} plus zeros. Rank decisions
/// use `rank_tol` relative to max(1, largest singular value).
SkewSpectrum skew_spectrum(const Eigen::MatrixXd& m, double rank_tol = 1e-10);

/// Exact congruence B^T M B = diag{(0, -a_1; a_1, 0), ..., 0}. The columns of
/// `basis` are the new basis vectors: block pairs first, then the radical.
struct DarbouxForm {
  RationalMatrix basis;
  RationalVector a;
  std::size_t radical_dim = 0;
};

DarbouxForm darboux_basis(const RationalMatrix& m);

/// Pf(lambda) != 0 on n/z, exact.
bool pf_nonsingular(const LieAlgebraData& alg, std::span<const Rational> lambda);

/// Pf(lambda) != 0 on l1/z for a stepwise split (lambda on the center of l1).
bool pf_nonsingular(const StepwiseDecomposition& dec, std::span<const Rational> lambda);

struct OrbitRepresentative {
  ExceptionalCase case_tag;
  std::vector<double> invariants;  // case1: ascending; case6: ascending moduli; case3: (a1,a2,a3)
  double last_phase = 0.0;         // case6 only: phase of the last invariant
  std::size_t kernel_dim = 0;
  bool principal_decided = false;  // principality is never decided here
};

/// lambda is given on the standard center basis of the case's algebra:
/// case1: coefficients on u_i^u_j (i < j) of Lambda^2 R^n;
/// case6: (re, im) coefficient pairs on u_i^u_j of Lambda^2 C^n;
/// case3: coefficients on (e1,0), ..., (e7,0).
OrbitRepresentative orbit_representative(ExceptionalCase c, std::span<const double> lambda);

/// The normal-form functional lambda_a carrying a representative's invariants,
/// in the same coordinates orbit_representative accepts (`n` for case1/case6).
std::vector<double> normal_form_functional(const OrbitRepresentative& rep, int n);

/// Skew matrix Lambda_ij = lambda(u_i ^ u_j) of a functional on Lambda^2 R^n.
Eigen::MatrixXd wedge_functional_matrix(std::span<const double> lambda);

}  // namespace nilharm
