#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nilharm {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or a plain decimal like "-0.25" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (q >= 1, always written with a slash).
std::string to_fraction_string(const Rational& value);

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

/// In-place reduction to reduced row echelon form; returns the pivot columns.
/// Pivots are chosen as the first nonzero entry scanning columns left to
/// right, so the output is deterministic.
std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m);

/// Reduced-echelon basis (nonzero rows only) of the row span of `m`.
RationalMatrix row_space_basis(const RationalMatrix& m);

/// Reduced-echelon basis of {x : m x = 0}, one basis vector per row.
RationalMatrix null_space_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// True when every row of `sub` lies in the row span of `space`.
bool row_span_contains(const RationalMatrix& space, const RationalMatrix& sub);

}  // namespace nilharm
