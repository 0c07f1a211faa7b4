#include "nilharm/rational.hpp"

#include "nilharm/error.hpp"

namespace nilharm {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw InvalidInput("malformed rational literal: " + s);
    // decimal: scale the digits by a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t places = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw InvalidInput("malformed rational literal: " + s);
    mpz_class num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw InvalidInput("malformed rational literal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw InvalidInput("malformed rational literal: " + s);
  if (r.get_den() == 0) throw InvalidInput("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix shape mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || sgn(m(i, col)) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  auto pivots = reduce_row_echelon(r);
  RationalMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

RationalMatrix null_space_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  auto pivots = reduce_row_echelon(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return row_space_basis(RationalMatrix::from_rows(basis, m.cols()));
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix r = m;
  return reduce_row_echelon(r).size();
}

bool row_span_contains(const RationalMatrix& space, const RationalMatrix& sub) {
  if (sub.rows() == 0) return true;
  if (space.cols() != sub.cols()) throw InvalidInput("column mismatch");
  RationalMatrix stacked(space.rows() + sub.rows(), space.cols());
  for (std::size_t i = 0; i < space.rows(); ++i)
    for (std::size_t j = 0; j < space.cols(); ++j) stacked(i, j) = space(i, j);
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j) stacked(space.rows() + i, j) = sub(i, j);
  return rank(stacked) == rank(space);
}

}  // namespace nilharm
