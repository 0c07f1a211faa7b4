#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilharm/rational.hpp"

namespace nilharm {

/// Element of a Lie algebra in the algebra's basis.
struct AlgebraVector {
  RationalVector coefficients;

  static AlgebraVector zero(std::size_t dim) { return {RationalVector(dim)}; }
  static AlgebraVector basis(std::size_t dim, std::size_t i);

  std::size_t size() const { return coefficients.size(); }
  bool is_zero() const;
  bool operator==(const AlgebraVector&) const = default;
};

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector operator*(const Rational& s, const AlgebraVector& a);

/// Finite-dimensional real Lie algebra given by exact structure constants.
///
/// Brackets are stored once per unordered pair, keyed (i, j) with i < j; the
/// (j, i) entry is the negative and (i, i) is zero. The basis is split into a
/// designated center and an ordered complement.
class LieAlgebraData {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, RationalVector>;

  LieAlgebraData(std::vector<std::string> labels, std::vector<std::size_t> center_indices,
                 BracketTable brackets);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& center_indices() const { return center_; }
  const std::vector<std::size_t>& complement_indices() const { return complement_; }
  const BracketTable& brackets() const { return brackets_; }

  /// [b_i, b_j] as a coefficient vector.
  RationalVector structure(std::size_t i, std::size_t j) const;

  /// Free-form string metadata (conventions, provenance of the constructor).
  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  void set_metadata(const std::string& key, std::string value) {
    metadata_[key] = std::move(value);
  }

  /// Named alternative orderings of basis indices (e.g. the complement order
  /// in which a skew form becomes block diagonal).
  const std::map<std::string, std::vector<std::size_t>>& orderings() const {
    return orderings_;
  }
  void add_ordering(const std::string& name, std::vector<std::size_t> order);

  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> center_;
  std::vector<std::size_t> complement_;
  BracketTable brackets_;
  std::map<std::string, std::string> metadata_;
  std::map<std::string, std::vector<std::size_t>> orderings_;
};

AlgebraVector bracket(const LieAlgebraData& alg, const AlgebraVector& x,
                      const AlgebraVector& y);

/// Max |coefficient| of the Jacobiator over all basis triples; 0 iff Jacobi holds.
Rational jacobi_defect(const LieAlgebraData& alg);

/// Reduced-echelon basis of [n, n].
RationalMatrix derived_subalgebra(const LieAlgebraData& alg);

/// Reduced-echelon basis of the center (common kernel of all ad(b_i)).
RationalMatrix center(const LieAlgebraData& alg);

/// Length of the lower central series: 0 for the zero algebra, 1 if abelian.
int nilpotency_class(const LieAlgebraData& alg);

/// Reduced-echelon basis of the span of the given coordinate indices.
RationalMatrix coordinate_span(std::size_t dim, const std::vector<std::size_t>& indices);

/// True when every bracket is supported on complement x complement pairs and
/// lands in span(center_indices), i.e. the designated split is a 2-step split.
bool is_two_step_split(const LieAlgebraData& alg);

/// The subalgebra on a coordinate subset. Throws InvalidInput unless the span
/// of `indices` is closed under the bracket. The new center designation is
/// `center_subset`, expressed in the original indexing.
LieAlgebraData coordinate_subalgebra(const LieAlgebraData& alg,
                                     const std::vector<std::size_t>& indices,
                                     const std::vector<std::size_t>& center_subset);

/// Copy of `alg` with the coefficient of b_k in [b_i, b_j] replaced.
LieAlgebraData with_structure_constant(const LieAlgebraData& alg, std::size_t i, std::size_t j,
                                       std::size_t k, const Rational& value);

}  // namespace nilharm
