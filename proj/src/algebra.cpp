#include "nilharm/algebra.hpp"

#include <algorithm>
#include <set>

#include "nilharm/error.hpp"

namespace nilharm {

AlgebraVector AlgebraVector::basis(std::size_t dim, std::size_t i) {
  if (i >= dim) throw InvalidInput("basis index out of range");
  AlgebraVector v = zero(dim);
  v.coefficients[i] = 1;
  return v;
}

bool AlgebraVector::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch");
  AlgebraVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coefficients[i] += b.coefficients[i];
  return r;
}

AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch");
  AlgebraVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coefficients[i] -= b.coefficients[i];
  return r;
}

AlgebraVector operator*(const Rational& s, const AlgebraVector& a) {
  AlgebraVector r = a;
  for (auto& c : r.coefficients) c *= s;
  return r;
}

LieAlgebraData::LieAlgebraData(std::vector<std::string> labels,
                               std::vector<std::size_t> center_indices,
                               BracketTable brackets)
    : labels_(std::move(labels)), center_(std::move(center_indices)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidInput("Lie algebra must have positive dimension");
  std::set<std::size_t> seen;
  for (auto c : center_) {
    if (c >= n) throw InvalidInput("center index out of range");
    if (!seen.insert(c).second) throw InvalidInput("duplicate center index");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.count(i)) complement_.push_back(i);

  for (auto& [key, coeffs] : brackets) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw InvalidInput("bracket index out of range");
    if (coeffs.size() != n) throw InvalidInput("bracket coefficient length mismatch");
    bool nonzero = std::any_of(coeffs.begin(), coeffs.end(),
                               [](const Rational& c) { return sgn(c) != 0; });
    if (!nonzero) continue;
    if (i == j) throw InvalidInput("[b_i, b_i] must vanish");
    if (i < j) {
      auto [it, inserted] = brackets_.emplace(key, coeffs);
      if (!inserted) throw InvalidInput("bracket given twice");
    } else {
      RationalVector neg = coeffs;
      for (auto& c : neg) c = -c;
      auto [it, inserted] = brackets_.emplace(std::make_pair(j, i), std::move(neg));
      if (!inserted) throw InvalidInput("bracket given twice");
    }
  }
}

RationalVector LieAlgebraData::structure(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw InvalidInput("basis index out of range");
  if (i == j) return RationalVector(n);
  auto it = brackets_.find({std::min(i, j), std::max(i, j)});
  if (it == brackets_.end()) return RationalVector(n);
  if (i < j) return it->second;
  RationalVector neg = it->second;
  for (auto& c : neg) c = -c;
  return neg;
}

void LieAlgebraData::add_ordering(const std::string& name, std::vector<std::size_t> order) {
  for (auto i : order)
    if (i >= dim()) throw InvalidInput("ordering index out of range");
  orderings_[name] = std::move(order);
}

std::size_t LieAlgebraData::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("unknown basis label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

AlgebraVector bracket(const LieAlgebraData& alg, const AlgebraVector& x,
                      const AlgebraVector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw InvalidInput("dimension mismatch in bracket");
  AlgebraVector out = AlgebraVector::zero(n);
  for (const auto& [key, coeffs] : alg.brackets()) {
    auto [i, j] = key;
    Rational w = x.coefficients[i] * y.coefficients[j] - x.coefficients[j] * y.coefficients[i];
    if (sgn(w) == 0) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(coeffs[k]) != 0) out.coefficients[k] += w * coeffs[k];
  }
  return out;
}

Rational jacobi_defect(const LieAlgebraData& alg) {
  const std::size_t n = alg.dim();
  Rational worst = 0;
  // The Jacobiator is totally antisymmetric, so i < j < k covers everything.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto bi = AlgebraVector::basis(n, i);
        auto bj = AlgebraVector::basis(n, j);
        auto bk = AlgebraVector::basis(n, k);
        auto jac = bracket(alg, bracket(alg, bi, bj), bk) +
                   bracket(alg, bracket(alg, bj, bk), bi) +
                   bracket(alg, bracket(alg, bk, bi), bj);
        for (const auto& c : jac.coefficients) {
          Rational a = abs(c);
          if (a > worst) worst = a;
        }
      }
  return worst;
}

RationalMatrix derived_subalgebra(const LieAlgebraData& alg) {
  std::vector<RationalVector> rows;
  for (const auto& [key, coeffs] : alg.brackets()) rows.push_back(coeffs);
  return row_space_basis(RationalMatrix::from_rows(rows, alg.dim()));
}

RationalMatrix center(const LieAlgebraData& alg) {
  const std::size_t n = alg.dim();
  // Row (j, k) of the stacked map x -> [x, b_j] reads off coefficient k.
  RationalMatrix ad(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto s = alg.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) ad(j * n + k, i) = s[k];
    }
  return null_space_basis(ad);
}

int nilpotency_class(const LieAlgebraData& alg) {
  const std::size_t n = alg.dim();
  RationalMatrix term = RationalMatrix::identity(n);
  int length = 0;
  while (term.rows() > 0) {
    ++length;
    std::vector<RationalVector> next;
    for (std::size_t r = 0; r < term.rows(); ++r) {
      AlgebraVector c{term.row(r)};
      for (std::size_t i = 0; i < n; ++i) {
        auto b = bracket(alg, AlgebraVector::basis(n, i), c);
        if (!b.is_zero()) next.push_back(std::move(b.coefficients));
      }
    }
    RationalMatrix reduced = row_space_basis(RationalMatrix::from_rows(next, n));
    if (reduced.rows() == term.rows()) return -1;  // series stalls: not nilpotent
    term = std::move(reduced);
  }
  return length;
}

RationalMatrix coordinate_span(std::size_t dim, const std::vector<std::size_t>& indices) {
  std::vector<RationalVector> rows;
  for (auto i : indices) {
    if (i >= dim) throw InvalidInput("coordinate index out of range");
    RationalVector v(dim);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return row_space_basis(RationalMatrix::from_rows(rows, dim));
}

bool is_two_step_split(const LieAlgebraData& alg) {
  std::vector<bool> central(alg.dim(), false);
  for (auto c : alg.center_indices()) central[c] = true;
  for (const auto& [key, coeffs] : alg.brackets()) {
    if (central[key.first] || central[key.second]) return false;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (sgn(coeffs[k]) != 0 && !central[k]) return false;
  }
  return true;
}

LieAlgebraData coordinate_subalgebra(const LieAlgebraData& alg,
                                     const std::vector<std::size_t>& indices,
                                     const std::vector<std::size_t>& center_subset) {
  std::vector<std::ptrdiff_t> position(alg.dim(), -1);
  for (std::size_t p = 0; p < indices.size(); ++p) {
    if (indices[p] >= alg.dim()) throw InvalidInput("subalgebra index out of range");
    if (position[indices[p]] >= 0) throw InvalidInput("duplicate subalgebra index");
    position[indices[p]] = static_cast<std::ptrdiff_t>(p);
  }
  std::vector<std::string> labels;
  for (auto i : indices) labels.push_back(alg.labels()[i]);
  std::vector<std::size_t> sub_center;
  for (auto c : center_subset) {
    if (c >= alg.dim() || position[c] < 0)
      throw InvalidInput("designated center index not in the subalgebra");
    sub_center.push_back(static_cast<std::size_t>(position[c]));
  }
  LieAlgebraData::BracketTable table;
  for (const auto& [key, coeffs] : alg.brackets()) {
    if (position[key.first] < 0 || position[key.second] < 0) continue;
    RationalVector sub(indices.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) == 0) continue;
      if (position[k] < 0) throw InvalidInput("coordinate subset is not closed under the bracket");
      sub[static_cast<std::size_t>(position[k])] = coeffs[k];
    }
    table[{static_cast<std::size_t>(position[key.first]),
           static_cast<std::size_t>(position[key.second])}] = std::move(sub);
  }
  LieAlgebraData out(std::move(labels), std::move(sub_center), std::move(table));
  for (const auto& [k, v] : alg.metadata()) out.set_metadata(k, v);
  return out;
}

LieAlgebraData with_structure_constant(const LieAlgebraData& alg, std::size_t i, std::size_t j,
                                       std::size_t k, const Rational& value) {
  if (i == j) throw InvalidInput("[b_i, b_i] is fixed at zero");
  if (k >= alg.dim()) throw InvalidInput("basis index out of range");
  auto table = alg.brackets();
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto& coeffs = table.try_emplace(key, RationalVector(alg.dim())).first->second;
  coeffs[k] = i < j ? value : Rational(-value);
  LieAlgebraData out(alg.labels(), alg.center_indices(), std::move(table));
  for (const auto& [mk, mv] : alg.metadata()) out.set_metadata(mk, mv);
  return out;
}

}  // namespace nilharm
