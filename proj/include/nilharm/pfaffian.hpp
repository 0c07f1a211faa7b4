#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilharm/algebra.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm {

/// Square antisymmetric matrix with labelled rows, over Rational or Polynomial.
template <class Scalar>
class SkewForm {
 public:
  SkewForm() = default;
  SkewForm(std::vector<std::string> labels, Scalar zero)
      : labels_(std::move(labels)), n_(labels_.size()), entries_(n_ * n_, zero) {}

  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<Scalar> entries_;
};

using NumericSkewForm = SkewForm<Rational>;
using SymbolicSkewForm = SkewForm<Polynomial>;

NumericSkewForm to_skew_form(const RationalMatrix& m);
RationalMatrix to_matrix(const NumericSkewForm& m);

/// Matrix of b_lambda(x, y) = lambda([x, y]) on the complement basis, with
/// lambda given by its coefficients on the designated center basis. The
/// default row order is the designated complement order; `order` (indices of
/// complement vectors) overrides it.
NumericSkewForm b_matrix(const LieAlgebraData& alg, std::span<const Rational> lambda,
                         const std::vector<std::size_t>& order = {});
SymbolicSkewForm b_matrix(const LieAlgebraData& alg, std::span<const Polynomial> lambda,
                          const std::vector<std::size_t>& order = {});

/// Pf with Pf([[0, a], [-a, 0]]) = a; odd sizes give 0, the empty matrix 1.
/// Throws InvalidInput unless the input is exactly antisymmetric.
Rational pfaffian(const NumericSkewForm& m);
Polynomial pfaffian(const SymbolicSkewForm& m);

/// One indeterminate per designated center coordinate.
std::vector<Polynomial> center_variables(const LieAlgebraData& alg);

/// Pf(lambda) over all of z*, in the center coordinates.
Polynomial pf_polynomial(const LieAlgebraData& alg);

struct SquareIntegrability {
  bool square_integrable = false;
  Polynomial pf;
  std::optional<RationalVector> witness;  // a point of z* with Pf != 0
};

SquareIntegrability is_square_integrable(const LieAlgebraData& alg);

/// First point of the grid {1, ..., deg + 1}^k (lexicographic) where `p` does
/// not vanish; nullopt for the zero polynomial.
std::optional<RationalVector> nonvanishing_point(const Polynomial& p);

}  // namespace nilharm
